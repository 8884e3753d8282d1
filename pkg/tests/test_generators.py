import math
import warnings
from fractions import Fraction

import numpy as np
import pytest

from zeroforcing.forcing import exact_zero_forcing
from zeroforcing.generators import (
    DeactParams,
    PaParams,
    StarSpec,
    analytic_z_isolated_stars,
    analytic_z_string_stars,
    deactivation_probabilities,
    derive_seed,
    gen_deactivation,
    gen_pa,
    gen_stars,
    gen_tree,
    gen_uniform,
    string_stars_finite_census,
)
from zeroforcing.graph import connected_components
from zeroforcing.metrics import diameter

from conftest import complete_graph
from oracles import pa_stationary_pk


def test_derive_seed_is_stable_and_keyed():
    s = derive_seed(2024, 0, 0, "pa")
    assert s == derive_seed(2024, 0, 0, "pa")
    others = {derive_seed(2024, 0, 1, "pa"), derive_seed(2024, 1, 0, "pa"),
              derive_seed(2024, 0, 0, "deact"), derive_seed(2025, 0, 0, "pa")}
    assert s not in others and len(others) == 4
    assert 0 <= s < 2**64


@pytest.mark.parametrize("cls", [PaParams, DeactParams])
@pytest.mark.parametrize("n,m,a", [(10, 0, 1.0), (2, 2, 1.0), (10, 2, 0.0), (10, 2, -1.0)])
def test_growth_params_validate(cls, n, m, a):
    with pytest.raises(ValueError):
        cls(n, m, a)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("gen,cls", [(gen_pa, PaParams), (gen_deactivation, DeactParams)])
def test_growth_edge_count(gen, cls, m):
    n = 300
    g = gen(cls(n, m, 0.7), 5)
    assert g.n == n
    assert g.edge_count() == m * (m + 1) // 2 + m * (n - m - 1)
    assert len(connected_components(g)) == 1


@pytest.mark.parametrize("gen,cls", [(gen_pa, PaParams), (gen_deactivation, DeactParams)])
def test_growth_seed_graph_only(gen, cls):
    assert gen(cls(3, 2, 1.0), 0) == complete_graph(3)
    assert gen(cls(4, 3, 1.0), 0) == complete_graph(4)


@pytest.mark.parametrize("gen,cls", [(gen_pa, PaParams), (gen_deactivation, DeactParams)])
def test_growth_deterministic(gen, cls):
    p = cls(500, 2, 0.5)
    assert gen(p, 11) == gen(p, 11)
    assert gen(p, 11) != gen(p, 12)


@pytest.mark.parametrize("gen,cls", [(gen_pa, PaParams), (gen_deactivation, DeactParams)])
def test_new_vertices_attach_backwards(gen, cls):
    m = 3
    g = gen(cls(200, m, 1.0), 3)
    for v in range(m + 1, 200):
        assert sum(1 for w in g.adj[v] if w < v) == m


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_pa_degree_law(a):
    # histogram against the exact large-N law, bins k = 2..8
    n, m = 30000, 2
    d = np.array(gen_pa(PaParams(n, m, a), 7).degrees())
    ks = np.arange(m, 9)
    p = pa_stationary_pk(a, m, ks)
    emp = np.array([(d == k).mean() for k in ks])
    z = (emp - p) / np.sqrt(p * (1 - p) / n)
    assert np.all(np.abs(z) < 4), z


def test_pa_stationary_law_normalises():
    ks = np.arange(2, 2_000_000)
    assert pa_stationary_pk(1.0, 2, ks).sum() == pytest.approx(1.0, abs=1e-5)


def test_deactivation_probabilities_sum_to_one():
    g = gen_deactivation(DeactParams(400, 3, 0.3), 1)
    for active in ([0, 1, 2], [10, 200, 399], [5]):
        probs = deactivation_probabilities(g, active, 3, 0.3)
        assert math.fsum(probs) == pytest.approx(1.0, abs=1e-12)
        assert all(p > 0 for p in probs)


def test_deactivation_favours_low_degree():
    g = complete_graph(4)
    g.remove_edge(0, 1)
    p = deactivation_probabilities(g, [0, 2], 2, 1.0)
    assert p[0] > p[1]


def test_deactivation_is_stringy():
    deact = diameter(gen_deactivation(DeactParams(2000, 2, 1.0), 4))
    pa = diameter(gen_pa(PaParams(2000, 2, 1.0), 4))
    assert deact > 10 * pa


def test_uniform_graph_extremes():
    assert gen_uniform(6, 0.0, 1).edge_count() == 0
    assert gen_uniform(6, 1.0, 1) == complete_graph(6)
    with pytest.raises(ValueError):
        gen_uniform(6, 1.5, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 10, 40])
def test_tree_is_spanning_tree(n):
    g = gen_tree(n, n)
    assert g.edge_count() == max(0, n - 1)
    assert len(connected_components(g)) == 1


def test_stars_isolated_layout():
    g = gen_stars(StarSpec((2, 3)))
    assert g.edges() == [(0, 1), (0, 2), (3, 4), (3, 5), (3, 6)]


def test_stars_string_layout():
    g = gen_stars(StarSpec((1, 2, 1), "string"))
    assert g.edges() == [(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (5, 6)]


@pytest.mark.parametrize("kwargs", [dict(hub_degrees=()), dict(hub_degrees=(0, 2)),
                                    dict(hub_degrees=(2,), arrangement="string"),
                                    dict(hub_degrees=(2, 2), arrangement="ring")])
def test_star_spec_validation(kwargs):
    with pytest.raises(ValueError):
        StarSpec(**kwargs)


def test_one_leaf_isolated_star_warns():
    with pytest.warns(UserWarning):
        StarSpec((1, 3))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        StarSpec((1, 3), "string")


@pytest.mark.parametrize("hubs,expected", [((2,), Fraction(1, 3)), ((3, 4, 5), Fraction(9, 15))])
def test_isolated_star_formula(hubs, expected):
    spec = StarSpec(hubs)
    assert analytic_z_isolated_stars(spec) == expected
    # each star contributes (leaves - 1)
    assert expected == Fraction(sum(hubs) - len(hubs), spec.n)
    assert expected * spec.n == exact_zero_forcing(gen_stars(spec))[0]


@pytest.mark.parametrize("hubs", [(2, 2, 2), (1, 3, 2, 4), (3, 1)])
def test_string_star_formulas(hubs):
    spec = StarSpec(hubs, "string")
    p1 = Fraction(sum(hubs), spec.n)
    assert analytic_z_string_stars(spec) == p1
    assert string_stars_finite_census(spec) == p1 - Fraction(2, spec.n)


def test_star_formula_arrangement_checks():
    with pytest.raises(ValueError):
        analytic_z_isolated_stars(StarSpec((2, 2), "string"))
    with pytest.raises(ValueError):
        analytic_z_string_stars(StarSpec((2, 2)))
