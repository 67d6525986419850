"""Property-based invariants over randomly generated graphs."""

import itertools

from hypothesis import given, settings, strategies as st

from treepart.decomp import Violation, verify_td, verify_tp
from treepart.exact import brute_mu, exact_tpw, tpw_by_enumeration
from treepart.graph import Graph, connected_components, quotient, subdivide
from treepart.ioformats import emit_gr, parse_gr
from treepart.pipeline import PipelineParams, run
from treepart.separators import mu
from treepart.treewidth import balance_td, heuristic_td
from treepart.partitioner import partition_rooted


@st.composite
def graphs(draw, max_n=10, max_p=1.0):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_heuristic_td_always_valid(g):
    for strategy in ("min-degree", "min-fill"):
        td = heuristic_td(g, strategy)
        assert not isinstance(verify_td(g, td), Violation)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_balance_td_preserves_validity(g):
    td = heuristic_td(g)
    bal = balance_td(g, td)
    assert not isinstance(verify_td(g, bal), Violation)
    assert bal.width() <= 3 * td.width() + 2


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_partition_rooted_always_valid(g):
    if g.n == 0:
        return
    td = heuristic_td(g)
    tp = partition_rooted(g, td, {0})
    assert not isinstance(verify_tp(g, tp), Violation)


@given(graphs(max_n=8))
@settings(max_examples=40, deadline=None)
def test_mu_symmetric_and_matches_brute(g):
    for s, t in itertools.combinations(range(g.n), 2):
        val = mu(g, s, t)
        assert val == mu(g, t, s)
        assert val == brute_mu(g, s, t)


@given(graphs(max_n=7))
@settings(max_examples=30, deadline=None)
def test_exact_tpw_matches_enumerator(g):
    assert exact_tpw(g, max(g.n, 1)) == tpw_by_enumeration(g)


@given(graphs(max_n=7), st.integers(min_value=1, max_value=3))
@settings(max_examples=40, deadline=None)
def test_pipeline_accepts_are_valid_and_rejects_sound(g, k):
    out = run(g, PipelineParams(k=k))
    if out.accepted:
        assert verify_tp(g, out.tp) == out.width
    else:
        assert exact_tpw(g, k) is None


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_gr_round_trip(g):
    assert parse_gr(emit_gr(g)).edges() == g.edges()


@given(graphs(max_n=8), st.integers(min_value=0, max_value=3))
@settings(max_examples=40, deadline=None)
def test_subdivide_quotient_inverse(g, c):
    counts = {e: c for e in g.edges()}
    g2, smap = subdivide(g, counts)
    assert g2.n == g.n + c * g.m
    # contracting each subdivision path back recovers the original graph
    parts = [[v] for v in range(g.n)]
    for (u, v), path in smap.paths.items():
        parts[u].extend(path)
    parts = [p for p in parts if p]
    q, _ = quotient(g2, parts)
    assert q.edges() == g.edges()


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_components_partition_vertices(g):
    comps = connected_components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(range(g.n))
    for c in comps:
        assert c == sorted(c)
