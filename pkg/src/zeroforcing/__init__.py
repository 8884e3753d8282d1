"""Zero forcing and vertex cover estimates on power-law graphs.

Leaf and maximum-degree removal heuristics, the graph ensembles they are
studied on, exact brute-force oracles for small graphs, and a seeded sweep
harness.
"""

from .cover import CoverResult, exact_vertex_cover, is_vertex_cover, lm_vertex_cover
from .forcing import (
    ForcingResult,
    LmMode,
    closure,
    exact_zero_forcing,
    is_forcing_set,
    lm_zero_forcing,
    minimum_rank_lower_bound,
)
from .generators import (
    DeactParams,
    PaParams,
    StarSpec,
    analytic_z_isolated_stars,
    analytic_z_string_stars,
    derive_seed,
    gen_deactivation,
    gen_pa,
    gen_stars,
    gen_tree,
    gen_uniform,
)
from .graph import (
    Graph,
    GraphError,
    chain_probe,
    connected_components,
    eccentricity,
    read_edgelist,
    write_edgelist,
)

__version__ = "0.1.0"
