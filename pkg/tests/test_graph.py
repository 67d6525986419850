import pytest

from treepart.graph import (
    Graph,
    biconnected_components,
    connected_components,
    quotient,
    subdivide,
)


def test_construction_dedup_and_sort():
    g = Graph(4, [(3, 0), (0, 3), (1, 2)])
    assert g.m == 2
    assert g.edges() == [(0, 3), (1, 2)]
    assert g.adj[0] == [3]


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])


def test_degree_and_has_edge():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degree(0) == 3
    assert g.max_degree() == 3
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert not g.has_edge(1, 2)


def test_induced_subgraph():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub, old = g.induced([1, 2, 3])
    assert old == [1, 2, 3]
    assert sub.edges() == [(0, 1), (1, 2)]


def test_connected_components_sorted():
    g = Graph(5, [(3, 4), (0, 1)])
    assert connected_components(g) == [[0, 1], [2], [3, 4]]


def test_biconnected_components_bowtie():
    # two triangles sharing vertex 2
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bf = biconnected_components(g)
    blocks = sorted(sorted(b) for b in bf.blocks)
    assert blocks == [[0, 1, 2], [2, 3, 4]]
    assert bf.cutvertices == [2]


def test_biconnected_components_bridges():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    bf = biconnected_components(g)
    assert sorted(sorted(b) for b in bf.blocks) == [[0, 1], [1, 2], [2, 3]]
    assert bf.cutvertices == [1, 2]
    # each non-root block records the cutvertex toward the root
    roots = bf.roots()
    assert len(roots) == 1
    for b in range(len(bf.blocks)):
        if b not in roots:
            assert bf.parent_cut[b] in bf.blocks[b]


def test_subdivide_paths_and_numbering():
    g = Graph(3, [(0, 1), (1, 2)])
    g2, smap = subdivide(g, {(0, 1): 2})
    assert g2.n == 5
    assert smap.paths[(0, 1)] == [3, 4]
    assert smap.paths[(1, 2)] == []
    assert g2.has_edge(0, 3) and g2.has_edge(3, 4) and g2.has_edge(4, 1)
    assert not g2.has_edge(0, 1)


def test_subdivide_rejects_non_edges():
    g = Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        subdivide(g, {(0, 0): 1})
    with pytest.raises(ValueError):
        subdivide(g, {(0, 1): -1})


def test_quotient_drops_loops_and_multiplicities():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    q, part_of = quotient(g, [[0, 1], [2, 3]])
    assert q.n == 2
    assert q.edges() == [(0, 1)]
    assert part_of == [0, 0, 1, 1]
