import random

import pytest
from hypothesis import given, settings

from zeroforcing.cover import exact_vertex_cover, is_vertex_cover, lm_vertex_cover
from zeroforcing.generators import gen_tree, gen_uniform
from zeroforcing.graph import Graph, GraphError

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from oracles import brute_vertex_cover
from test_graph import graphs


@pytest.mark.parametrize(
    "g,v",
    [(path_graph(5), 2), (cycle_graph(6), 3), (star_graph(4), 1), (complete_graph(5), 4), (Graph(3), 0)],
)
def test_exact_examples(g, v):
    got, witness = exact_vertex_cover(g)
    assert got == v and is_vertex_cover(g, witness)


@pytest.mark.parametrize("seed", range(30))
def test_exact_matches_brute_force(seed):
    g = gen_uniform(9, 0.35, seed)
    assert exact_vertex_cover(g)[0] == brute_vertex_cover(g)


def test_exact_cap():
    with pytest.raises(GraphError):
        exact_vertex_cover(path_graph(17))


def test_is_vertex_cover():
    g = path_graph(4)
    assert is_vertex_cover(g, [1, 2])
    assert not is_vertex_cover(g, [1])


def test_lm_path_and_star():
    assert lm_vertex_cover(path_graph(5)).v_lm == 2
    res = lm_vertex_cover(star_graph(6))
    assert res.cover == [0] and res.delta_v == 0


def test_lm_complete_graph():
    res = lm_vertex_cover(complete_graph(4))
    assert res.v_lm == 3 and res.delta_v >= 1


def test_lm_empty_graph():
    res = lm_vertex_cover(Graph(4))
    assert res.cover == [] and res.delta_v == 0


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_lm_is_valid_upper_bound(g):
    res = lm_vertex_cover(g)
    assert is_vertex_cover(g, res.cover)
    assert len(set(res.cover)) == res.v_lm >= exact_vertex_cover(g)[0]


@pytest.mark.parametrize("seed", range(100))
def test_lm_exact_on_trees(seed):
    g = gen_tree(random.Random(seed).randint(1, 14), seed)
    res = lm_vertex_cover(g)
    assert res.delta_v == 0
    assert res.v_lm == exact_vertex_cover(g)[0]


def test_lm_does_not_modify_input():
    g = gen_uniform(12, 0.3, 2)
    before = g.copy()
    lm_vertex_cover(g)
    assert g == before
