import pytest

from treepart.decomp import verify_tp
from treepart.exact import exact_tpw
from treepart.families import (
    explicit_k3m_partition,
    gen_complete_bipartite,
    gen_fan,
    gen_grid,
    gen_multiple_tree,
    gen_wall,
    random_graph,
    random_tree,
)
from treepart.graph import Graph


def test_grid_counts():
    g = gen_grid(4)
    assert g.n == 16 and g.m == 24
    assert gen_grid(1).n == 1


def test_wall_is_subcubic_grid_subgraph():
    g = gen_wall(5)
    grid = gen_grid(5)
    assert g.n == grid.n and g.m < grid.m
    assert g.max_degree() <= 3
    assert all(grid.has_edge(u, v) for u, v in g.edges())


def test_fan_layout():
    g = gen_fan(4)
    assert g.n == 5 and g.degree(4) == 4
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)


def test_complete_bipartite():
    g = gen_complete_bipartite(2, 3)
    assert g.n == 5 and g.m == 6
    assert not g.has_edge(0, 1) and g.has_edge(0, 2)


def test_multiple_tree():
    tree = Graph(3, [(0, 1), (1, 2)])
    g = gen_multiple_tree(tree, 3)
    assert g.n == 3 + 2 * 3
    assert g.m == 2 * 2 * 3
    with pytest.raises(ValueError):
        gen_multiple_tree(Graph(3, [(0, 1), (1, 2), (0, 2)]), 2)


def test_explicit_k3m_partition_verifies():
    for m in (0, 1, 5, 40):
        tp = explicit_k3m_partition(m)
        g = gen_complete_bipartite(3, m)
        assert verify_tp(g, tp) == 3


def test_random_generators_are_seeded():
    assert random_graph(10, 0.3, 7).edges() == random_graph(10, 0.3, 7).edges()
    assert random_tree(10, 7).edges() == random_tree(10, 7).edges()
    t = random_tree(12, 3)
    assert t.m == t.n - 1
    assert exact_tpw(t, 1) == 1
