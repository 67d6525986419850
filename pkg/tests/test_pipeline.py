import pytest

from treepart.decomp import Violation, verify_tp
from treepart.exact import exact_tpw
from treepart.families import random_graph, random_tree
from treepart.graph import Graph
from treepart.pipeline import (
    BlockDegree,
    LargeComponent,
    PipelineParams,
    TreewidthLB,
    degree_threshold,
    run,
)
from treepart.treewidth import heuristic_td


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_degree_threshold_formula():
    assert degree_threshold(1, 2) == 2
    assert degree_threshold(2, 3) == 6
    assert degree_threshold(3, 8) == 3 * (1 + 2 * 6) + 3  # = 42
    with pytest.raises(ValueError):
        degree_threshold(0, 2)
    with pytest.raises(ValueError):
        degree_threshold(1, 1)


def test_accept_paths_and_trees():
    for g in (Graph(1), cycle(6), random_tree(40, 1)):
        out = run(g, PipelineParams(k=2))
        assert out.accepted
        assert verify_tp(g, out.tp) == out.width


def test_reject_clique_with_certificate():
    out = run(complete(8), PipelineParams(k=1))
    assert not out.accepted
    assert isinstance(out.certificate, TreewidthLB)
    assert out.certificate.lb > out.certificate.bound == 1


def test_reject_is_sound_small_graphs():
    for seed in range(40):
        g = random_graph(8, 0.4, seed)
        for k in (1, 2):
            out = run(g, PipelineParams(k=k))
            if not out.accepted:
                assert exact_tpw(g, k) is None, (seed, k)
            else:
                assert verify_tp(g, out.tp) == out.width


def test_c4_k1_rejected_k2_accepted():
    g = cycle(4)
    out1 = run(g, PipelineParams(k=1))
    assert not out1.accepted and isinstance(out1.certificate, TreewidthLB)
    out2 = run(g, PipelineParams(k=2))
    assert out2.accepted and verify_tp(g, out2.tp) == out2.width


def test_large_component_certificate_recomputes():
    # the three left vertices of K_{3,6} are pairwise 6-connected, so the
    # auxiliary graph has a component of size 3 > k = 2
    from treepart.families import gen_complete_bipartite
    from treepart.separators import mu

    g = gen_complete_bipartite(3, 6)
    out = run(g, PipelineParams(k=2))
    assert not out.accepted
    cert = out.certificate
    assert isinstance(cert, LargeComponent)
    assert cert.vertices == frozenset({0, 1, 2})
    assert len(cert.vertices) > 2
    assert cert.b >= 2 * 2 - 1
    verts = sorted(cert.vertices)
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            assert mu(g, verts[i], verts[j]) >= cert.b


def test_block_degree_certificate_on_fans():
    from treepart.families import gen_fan

    g = gen_fan(7)
    out = run(g, PipelineParams(k=2))
    assert not out.accepted
    cert = out.certificate
    assert isinstance(cert, BlockDegree)
    assert cert.vertex == frozenset({7})  # the apex
    assert cert.degree == 7 > cert.threshold
    # rejection is sound: the fan really exceeds width 2
    assert exact_tpw(g, 2) is None


def test_trace_has_five_steps_in_order():
    out = run(cycle(6), PipelineParams(k=2))
    assert [r.step for r in out.trace] == [
        "step1",
        "step2",
        "step3",
        "step4",
        "step5",
    ]
    line = out.trace[0].format()
    assert line.startswith("step=step1") and "w=" in line


def test_step1_modes_agree_on_acceptance():
    g = random_graph(10, 0.25, 3)
    outs = []
    for step1 in ("heur:min-degree", "heur:min-fill", "exact"):
        outs.append(run(g, PipelineParams(k=2, step1=step1)))
    td = heuristic_td(g)
    outs.append(run(g, PipelineParams(k=2, step1="import", import_td=td)))
    assert len({o.accepted for o in outs}) == 1
    for o in outs:
        if o.accepted:
            assert verify_tp(g, o.tp) == o.width


def test_b_override_validation():
    g = cycle(6)
    with pytest.raises(ValueError):
        run(g, PipelineParams(k=2, b_override=1))
    out = run(g, PipelineParams(k=2, b_override=10))
    assert out.accepted


def test_deterministic_across_runs():
    g = random_graph(30, 0.12, 9)
    a = run(g, PipelineParams(k=3))
    b = run(g, PipelineParams(k=3))
    assert a.accepted == b.accepted
    if a.accepted:
        assert a.tp.bags == b.tp.bags and a.tp.tree_edges == b.tp.tree_edges


def test_disconnected_input():
    g = Graph(9, [(0, 1), (1, 2), (3, 4), (5, 6), (6, 7), (7, 5)])
    out = run(g, PipelineParams(k=2))
    assert out.accepted
    assert verify_tp(g, out.tp) == out.width


def test_empty_graph():
    out = run(Graph(0), PipelineParams(k=1))
    assert out.accepted and out.width == 0
