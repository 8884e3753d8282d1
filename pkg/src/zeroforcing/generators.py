"""Random and deterministic graph families.

Every random generator takes an integer seed and draws from its own
``random.Random`` instance, so equal (params, seed) give identical graphs.
"""

from __future__ import annotations

import heapq
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph

MODEL_TAGS = {"pa": 1, "deact": 2, "stars": 3, "uniform": 4}


def derive_seed(master: int, *keys: int | str) -> int:
    """Stable 64-bit child seed for ``(master, *keys)``.

    Mixing is numpy's ``SeedSequence`` with ``master`` as entropy and the keys
    as spawn key; string keys are mapped through ``MODEL_TAGS``.
    """
    spawn = tuple(MODEL_TAGS[k] if isinstance(k, str) else int(k) for k in keys)
    ss = np.random.SeedSequence(entropy=int(master), spawn_key=spawn)
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class PaParams:
    n: int
    m: int
    a: float

    def __post_init__(self):
        _check_growth(self.n, self.m, self.a)


@dataclass(frozen=True)
class DeactParams:
    n: int
    m: int
    a: float

    def __post_init__(self):
        _check_growth(self.n, self.m, self.a)


def _check_growth(n: int, m: int, a: float) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < m + 1:
        raise ValueError(f"n must be >= m+1 = {m + 1}, got {n}")
    if not a > 0:
        raise ValueError(f"attractiveness a must be > 0, got {a}")


def _clique(n: int, k: int) -> Graph:
    g = Graph(n)
    for i in range(k):
        for j in range(i + 1, k):
            g.add_edge(i, j)
    return g


def gen_pa(p: PaParams, seed: int) -> Graph:
    """Preferential attachment with initial attractiveness.

    Starts from K_{m+1}; each new vertex links to m distinct existing vertices
    drawn with probability proportional to (a-1)m + k_i. Since k_i >= m for
    every vertex, the weight splits as (k_i - m) + a*m: the first part is
    sampled from a list holding each vertex once per edge gained beyond its
    first m, the second uniformly. Repeats are rejected and redrawn.
    """
    rng = random.Random(seed)
    n, m = p.n, p.m
    g = _clique(n, m + 1)
    excess: list[int] = []
    uniform_mass = p.a * m
    for new in range(m + 1, n):
        total_uniform = uniform_mass * new
        total = len(excess) + total_uniform
        targets: list[int] = []
        while len(targets) < m:
            x = rng.random() * total
            if x < len(excess):
                t = excess[int(x)]
            else:
                t = min(int((x - len(excess)) / uniform_mass), new - 1)
            if t not in targets:
                targets.append(t)
        for t in targets:
            g.add_edge(new, t)
        excess.extend(targets)
    return g


def deactivation_probabilities(g: Graph, active: Sequence[int], m: int, a: float) -> list[float]:
    """Normalised deactivation probability of each active vertex."""
    inv = [1.0 / ((a - 1) * m + len(g.adj[v])) for v in active]
    z = sum(inv)
    return [x / z for x in inv]


def _pick_deactivated(rng: random.Random, g: Graph, active: list[int], m: int, a: float) -> int:
    x = rng.random()
    for v, prob in zip(active, deactivation_probabilities(g, active, m, a)):
        x -= prob
        if x < 0:
            return v
    return active[-1]


def gen_deactivation(p: DeactParams, seed: int) -> Graph:
    """Growth with deactivation.

    Starts from K_{m+1}, all active, and deactivates one of them right away.
    Each step links a new vertex to the m active ones and deactivates one of
    those m with probability proportional to 1/((a-1)m + k_i); the new vertex
    then joins the active set.
    """
    rng = random.Random(seed)
    n, m = p.n, p.m
    g = _clique(n, m + 1)
    active = list(range(m + 1))
    active.remove(_pick_deactivated(rng, g, active, m, p.a))
    for new in range(m + 1, n):
        for v in active:
            g.add_edge(new, v)
        active.remove(_pick_deactivated(rng, g, active, m, p.a))
        active.append(new)
    return g


def gen_uniform(n: int, edge_prob: float, seed: int) -> Graph:
    if not 0 <= edge_prob <= 1:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                g.add_edge(u, v)
    return g


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on n vertices (Prüfer decoding)."""
    g = Graph(n)
    if n < 2:
        return g
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in code:
        leaf = heapq.heappop(leaves)
        g.add_edge(leaf, x)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    g.add_edge(heapq.heappop(leaves), heapq.heappop(leaves))
    return g


# star families


@dataclass(frozen=True)
class StarSpec:
    hub_degrees: tuple[int, ...]
    arrangement: str = "isolated"

    def __post_init__(self):
        object.__setattr__(self, "hub_degrees", tuple(int(k) for k in self.hub_degrees))
        if not self.hub_degrees:
            raise ValueError("star spec needs at least one hub")
        if any(k < 1 for k in self.hub_degrees):
            raise ValueError(f"every hub needs >= 1 leaf: {self.hub_degrees}")
        if self.arrangement not in ("isolated", "string"):
            raise ValueError(f"unknown arrangement {self.arrangement!r}")
        if self.arrangement == "string" and len(self.hub_degrees) < 2:
            raise ValueError("a string of stars needs >= 2 hubs")
        if self.arrangement == "isolated" and 1 in self.hub_degrees:
            warnings.warn("a one-leaf isolated star is a single edge (P2)", stacklevel=3)

    @property
    def n(self) -> int:
        return len(self.hub_degrees) + sum(self.hub_degrees)


def gen_stars(spec: StarSpec) -> Graph:
    """Hubs numbered in blocks: hub id, then its leaves. In a string the hubs
    are additionally joined in order."""
    g = Graph(spec.n)
    hubs = []
    nxt = 0
    for leaves in spec.hub_degrees:
        hub = nxt
        hubs.append(hub)
        for leaf in range(hub + 1, hub + 1 + leaves):
            g.add_edge(hub, leaf)
        nxt = hub + 1 + leaves
    if spec.arrangement == "string":
        for u, v in zip(hubs, hubs[1:]):
            g.add_edge(u, v)
    return g


def _census(g: Graph) -> dict[int, int]:
    hist: dict[int, int] = {}
    for d in g.degrees():
        hist[d] = hist.get(d, 0) + 1
    return hist


def analytic_z_isolated_stars(spec: StarSpec) -> Fraction:
    """sum_{k>1} p_k (k-1) over the exact degree census of the star forest."""
    if spec.arrangement != "isolated":
        raise ValueError("analytic_z_isolated_stars needs an isolated-star spec")
    hist = _census(gen_stars(spec))
    return sum((Fraction(c * (k - 1), spec.n) for k, c in hist.items() if k > 1), Fraction(0))


def analytic_z_string_stars(spec: StarSpec) -> Fraction:
    """Bulk prediction for a string of stars: the leaf fraction p_1.

    In the bulk every hub has two string links, so sum_{k>1} p_k (k-2) = p_1
    holds exactly; see ``string_stars_finite_census`` for the value with the
    two end hubs' missing link taken into account.
    """
    if spec.arrangement != "string":
        raise ValueError("analytic_z_string_stars needs a string-of-stars spec")
    return Fraction(sum(spec.hub_degrees), spec.n)


def string_stars_finite_census(spec: StarSpec) -> Fraction:
    """sum_{k>1} p_k (k-2) over the finite graph; equals p_1 - 2/N."""
    if spec.arrangement != "string":
        raise ValueError("string_stars_finite_census needs a string-of-stars spec")
    hist = _census(gen_stars(spec))
    return sum((Fraction(c * (k - 2), spec.n) for k, c in hist.items() if k > 1), Fraction(0))
