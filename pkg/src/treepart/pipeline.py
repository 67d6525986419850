"""Five-step tree-partition pipeline with certified rejection.

Steps: (1) tree decomposition plus a treewidth lower bound for certified
rejection; (2) auxiliary graph of highly-connected pairs; (3) quotient by
its components, with the decomposition transported to the quotient and
split into blocks; (4) per-block partitions under a degree threshold,
combined across cutvertices; (5) expansion back to the input graph.

Every accepted output passes the tree-partition verifier; every rejection
carries a certificate that recomputes to a genuine obstruction.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .decomp import TreeDecomposition, TreePartition
from .graph import Graph, biconnected_components, connected_components
from .separators import b_reduction, build_gb, candidate_pairs
from .treewidth import balance_td, exact_td, heuristic_td, treewidth_lower_bound
from .partitioner import combine_blocks, expand, partition_isolated, partition_rooted


def degree_threshold(k: int, b: int) -> int:
    """Maximum block degree compatible with width k at threshold b, with a
    slack of k on top of the neighborhood-counting bound."""
    if k < 1 or b < 2:
        raise ValueError("need k >= 1 and b >= 2")
    return k * (1 + (k - 1) * (b - 2)) + k


@dataclass
class PipelineParams:
    k: int
    step1: str = "heur:min-degree"  # "exact" | "heur:<strategy>" | "import"
    seed: int = 0
    import_td: TreeDecomposition | None = None
    b_override: int | None = None
    parallel_pairs: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.step1 == "import" and self.import_td is None:
            raise ValueError("step1=import requires import_td")


@dataclass(frozen=True)
class TreewidthLB:
    """Certified treewidth lower bound exceeding 2k-1."""

    lb: int
    bound: int  # the 2k-1 threshold that was exceeded


@dataclass(frozen=True)
class LargeComponent:
    """Connected component of the auxiliary graph with more than k vertices."""

    vertices: frozenset
    b: int


@dataclass(frozen=True)
class BlockDegree:
    """Vertex whose degree inside a quotient block exceeds the threshold.

    Vertex sets are given as the original-graph vertex groups making up the
    quotient block, so the certificate is self-contained.
    """

    block: tuple  # tuple of frozensets of original vertices
    vertex: frozenset  # original vertices of the offending quotient vertex
    degree: int
    threshold: int


@dataclass
class TraceRecord:
    step: str
    fields: dict

    def format(self) -> str:
        parts = [f"step={self.step}"]
        for key in sorted(self.fields):
            val = self.fields[key]
            if isinstance(val, float):
                parts.append(f"{key}={val:.3f}")
            else:
                parts.append(f"{key}={val}")
        return " ".join(parts)


@dataclass
class PipelineOutcome:
    accepted: bool
    tp: TreePartition | None = None
    width: int | None = None
    certificate: object = None
    trace: list = field(default_factory=list)


def _extract_sub_td(td: TreeDecomposition, vertices, new_id) -> TreeDecomposition:
    """Restriction of a decomposition to a connected vertex subset.

    Keeps only the nodes whose bags meet the subset; for a set inducing a
    connected subgraph these nodes form a connected subtree, because
    adjacent vertices share a bag and each vertex's occupancy is connected.
    """
    vset = set(vertices)
    keep = []
    for i, bag in enumerate(td.bags):
        inter = [new_id[v] for v in bag if v in vset]
        if inter:
            keep.append((i, sorted(inter)))
    node_id = {i: j for j, (i, _) in enumerate(keep)}
    bags = [bag for _, bag in keep]
    edges = [
        (node_id[i], node_id[j])
        for i, j in td.tree_edges
        if i in node_id and j in node_id
    ]
    return TreeDecomposition(bags, edges, root=0)


def _step1_td(gc: Graph, params: PipelineParams, old_ids) -> TreeDecomposition:
    if params.step1 == "exact":
        lb = treewidth_lower_bound(gc)
        for k_try in range(max(lb, 0), gc.n + 1):
            td = exact_td(gc, k_try)
            if td is not None:
                return td
        raise AssertionError("exhausted widths without a decomposition")
    if params.step1 == "import":
        new_id = {v: i for i, v in enumerate(old_ids)}
        return _extract_sub_td(params.import_td, old_ids, new_id)
    if params.step1.startswith("heur:"):
        return heuristic_td(gc, params.step1[5:], params.seed)
    raise ValueError(f"unknown step1 mode {params.step1!r}")


def _run_component(gc: Graph, params: PipelineParams, old_ids, stats):
    """Returns ("accept", local TreePartition) or ("reject", certificate)."""
    k = params.k

    t0 = time.perf_counter()
    lb = treewidth_lower_bound(gc)
    if lb > 2 * k - 1:
        return "reject", TreewidthLB(lb, 2 * k - 1)
    td = _step1_td(gc, params, old_ids)
    w = td.width()
    stats["step1"]["w"] = max(stats["step1"].get("w", 0), w)
    stats["step1"]["lb"] = max(stats["step1"].get("lb", 0), lb)
    stats["step1"]["millis"] = stats["step1"].get("millis", 0.0) + 1000 * (
        time.perf_counter() - t0
    )

    t0 = time.perf_counter()
    b = max(2 * k - 1, w + 1)
    if params.b_override is not None:
        if params.b_override < b:
            raise ValueError(f"b_override {params.b_override} below required {b}")
        b = params.b_override
    gb = build_gb(gc, b, candidate_pairs(td), parallel=params.parallel_pairs)
    gb_comps = connected_components(gb)
    stats["step2"]["b"] = max(stats["step2"].get("b", 0), b)
    stats["step2"]["gb_edges"] = stats["step2"].get("gb_edges", 0) + gb.m
    stats["step2"]["max_component"] = max(
        stats["step2"].get("max_component", 0),
        max((len(c) for c in gb_comps), default=0),
    )
    stats["step2"]["millis"] = stats["step2"].get("millis", 0.0) + 1000 * (
        time.perf_counter() - t0
    )
    for comp in gb_comps:
        if len(comp) > k:
            return "reject", LargeComponent(
                frozenset(old_ids[v] for v in comp), b
            )

    t0 = time.perf_counter()
    red = b_reduction(gc, gb)
    h = red.h
    tbags = [sorted({red.part_of[v] for v in bag}) for bag in td.bags]
    tdh = TreeDecomposition(tbags, list(td.tree_edges), td.root if td.root is not None else 0)
    bf = biconnected_components(h)
    stats["step3"]["h_n"] = stats["step3"].get("h_n", 0) + h.n
    stats["step3"]["blocks"] = stats["step3"].get("blocks", 0) + len(bf.blocks)
    stats["step3"]["millis"] = stats["step3"].get("millis", 0.0) + 1000 * (
        time.perf_counter() - t0
    )

    t0 = time.perf_counter()
    thr = degree_threshold(k, max(b, 2))
    delta_h = h.max_degree()
    stats["step4"]["delta_h"] = max(stats["step4"].get("delta_h", 0), delta_h)
    stats["step4"]["threshold"] = thr
    for blk in bf.blocks:
        blkset = set(blk)
        for v in blk:
            d = sum(1 for u in h.adj[v] if u in blkset)
            if d > thr:
                return "reject", BlockDegree(
                    tuple(
                        frozenset(old_ids[x] for x in red.parts[u]) for u in blk
                    ),
                    frozenset(old_ids[x] for x in red.parts[v]),
                    d,
                    thr,
                )
    per_block = {}
    for bidx, blk in enumerate(bf.blocks):
        sub, sub_old = h.induced(blk)
        new_id = {v: i for i, v in enumerate(sub_old)}
        btd = balance_td(sub, _extract_sub_td(tdh, blk, new_id))
        cut = bf.parent_cut[bidx]
        if cut is not None:
            tp_local = partition_isolated(sub, btd, new_id[cut])
        else:
            tp_local = partition_rooted(sub, btd, {0})
        per_block[bidx] = TreePartition(
            [sorted(sub_old[x] for x in bag) for bag in tp_local.bags],
            list(tp_local.tree_edges),
            tp_local.root,
        )
    tp_h = combine_blocks(h, bf, per_block)
    stats["step4"]["millis"] = stats["step4"].get("millis", 0.0) + 1000 * (
        time.perf_counter() - t0
    )

    t0 = time.perf_counter()
    tp = expand(tp_h, red)
    stats["step5"]["millis"] = stats["step5"].get("millis", 0.0) + 1000 * (
        time.perf_counter() - t0
    )
    return "accept", tp


def run(g: Graph, params: PipelineParams) -> PipelineOutcome:
    """Run the full pipeline on g; disconnected inputs are handled per
    component and the resulting trees joined by arbitrary bag-to-bag edges."""
    stats = {s: {} for s in ("step1", "step2", "step3", "step4", "step5")}
    if g.n == 0:
        trace = [TraceRecord(s, stats[s]) for s in stats]
        return PipelineOutcome(
            accepted=True,
            tp=TreePartition([], [], root=None),
            width=0,
            trace=trace,
        )

    bags = []
    edges = []
    roots = []
    for comp in connected_components(g):
        gc, old_ids = g.induced(comp)
        status, payload = _run_component(gc, params, old_ids, stats)
        if status == "reject":
            trace = [TraceRecord(s, stats[s]) for s in stats]
            return PipelineOutcome(accepted=False, certificate=payload, trace=trace)
        offset = len(bags)
        for bag in payload.bags:
            bags.append(sorted(old_ids[v] for v in bag))
        for i, j in payload.tree_edges:
            edges.append((offset + i, offset + j))
        roots.append(offset + (payload.root if payload.root is not None else 0))
    for extra in roots[1:]:
        edges.append((roots[0], extra))
    tp = TreePartition(bags, edges, root=roots[0])
    width = max(len(b) for b in bags)
    stats["step5"]["width"] = width
    trace = [TraceRecord(s, stats[s]) for s in stats]
    return PipelineOutcome(accepted=True, tp=tp, width=width, trace=trace)
