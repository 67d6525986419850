"""Tree-partition construction from a tree decomposition under a degree
bound: balanced-separator walk, boundary recursion with an optional rooted
or isolated-vertex contract, combination of per-block partitions across
cutvertices, and expansion of quotient vertices.

The recursion is correctness-first: every output passes the tree-partition
verifier unconditionally; realized widths are tracked empirically against
the reference bound rather than enforced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .decomp import TreeDecomposition, TreePartition
from .graph import BlockForest, Graph
from .treewidth import occupancy_tables


@dataclass(frozen=True)
class PartitionConstants:
    """Window constants of the separator-based construction.

    alpha and gamma are exact to double precision (~16 digits); windows are
    real-valued products of them, compared with exact integer sizes via
    plain float comparison (sizes well below 2**50 are exact in doubles).
    """

    alpha: float = 1.0 + 1.0 / math.sqrt(2.0)
    gamma: float = 1.0 + math.sqrt(2.0)

    def window_low(self, w: int) -> float:
        return (self.gamma + 1.0) * (w + 1)

    def window_high(self, w: int, delta: int) -> float:
        return 3.0 * (self.gamma + 1.0) * (w + 1) * delta

    def bound(self, w: int, delta: int) -> float:
        """Reference width bound gamma*(w+1)*(3*gamma*delta - 1)."""
        return self.gamma * (w + 1) * (3.0 * self.gamma * delta - 1.0)


CONSTANTS = PartitionConstants()


def _components_within(g: Graph, universe, removed):
    """Components of g[universe - removed], sorted by minimum vertex."""
    left = set(universe) - set(removed)
    comps = []
    while left:
        v = min(left)
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
        left -= comp
    return comps


def _is_balanced(g: Graph, universe, bag, wset) -> bool:
    half = len(wset) / 2.0
    for comp in _components_within(g, universe, bag):
        if len(comp & wset) > half:
            return False
    return True


def _separator_walk(g: Graph, td: TreeDecomposition, tables, universe, wset):
    """Node whose restricted bag is a balanced separator of wset in
    g[universe], found by descending toward the heaviest subtree."""
    top, tin, tout = tables
    adj = td.node_adj()
    node = td.root
    parent = -1
    for _ in range(td.num_nodes):
        bag = set(td.bags[node]) & universe
        if _is_balanced(g, universe, bag, wset):
            return node
        children = [c for c in adj[node] if c != parent]
        if not children:
            break
        best = None
        for c in children:
            count = sum(
                1 for v in wset if tin[c] <= tin[top[v]] <= tout[c]
            )
            if best is None or (-count, c) < best:
                best = (-count, c)
        parent, node = node, best[1]
    # fallback: scan every node (a balanced bag always exists)
    for node in range(td.num_nodes):
        bag = set(td.bags[node]) & universe
        if _is_balanced(g, universe, bag, wset):
            return node
    raise AssertionError("no balanced separator bag found")


def balanced_separator_bag(g: Graph, td: TreeDecomposition, wset) -> int:
    """Node of td whose bag is a balanced separator of wset in g.

    td must be rooted; the walk starts at the root and visits at most
    depth+1 nodes, moving to the child subtree holding the most wset
    vertices whenever the current bag is not balanced.
    """
    if not wset:
        return td.root if td.root is not None else 0
    tables = occupancy_tables(g, td)
    return _separator_walk(g, td, tables, set(range(g.n)), set(wset))


def _group_components(comps, boundaries, cap: float):
    """First-fit-decreasing grouping of components by boundary size.

    Groups keep their combined boundary size at most cap when possible;
    a single component with an oversized boundary forms its own group.
    """
    order = sorted(range(len(comps)), key=lambda i: (-len(boundaries[i]), min(comps[i])))
    groups = []  # (component index list, total boundary)
    for i in order:
        size = len(boundaries[i])
        placed = False
        for grp in groups:
            if grp[1] + size <= cap:
                grp[0].append(i)
                grp[1] += size
                placed = True
                break
        if not placed:
            groups.append([[i], size])
    out = []
    for idx, _ in groups:
        universe = set()
        boundary = set()
        for i in idx:
            universe |= comps[i]
            boundary |= boundaries[i]
        out.append((universe, boundary))
    out.sort(key=lambda t: min(t[0]))
    return out


class _Builder:
    def __init__(self):
        self.bags = []
        self.edges = []

    def emit(self, bag) -> int:
        self.bags.append(sorted(bag))
        return len(self.bags) - 1


def _partition_into(g, td, tables, width, builder, universe, s_set) -> int:
    """Recursive boundary construction; returns the root node id of the
    subtree built for g[universe], whose root bag contains s_set."""
    if len(universe) <= len(s_set) + width + 1:
        return builder.emit(universe)
    sep_node = _separator_walk(g, td, tables, universe, s_set)
    bag = s_set | (set(td.bags[sep_node]) & universe)
    if not bag:
        bag = {min(universe)}
    root = builder.emit(bag)
    comps = _components_within(g, universe, bag)
    boundaries = []
    for comp in comps:
        nb = set()
        for v in bag:
            for w in g.adj[v]:
                if w in comp:
                    nb.add(w)
        boundaries.append(nb)
    for sub_universe, sub_s in _group_components(
        comps, boundaries, CONSTANTS.window_low(width)
    ):
        child = _partition_into(g, td, tables, width, builder, sub_universe, sub_s)
        builder.edges.append((root, child))
    return root


def _rooted_td(td: TreeDecomposition) -> TreeDecomposition:
    if td.root is not None:
        return td
    return TreeDecomposition(td.bags, td.tree_edges, root=0)


def partition_rooted(g: Graph, td: TreeDecomposition, s_set) -> TreePartition:
    """Tree-partition of g whose root bag contains s_set.

    The root bag is s_set plus a balanced-separator bag for it; components
    of the remainder are grouped by boundary size and recursed with their
    neighborhoods of the root bag as the next contract sets.
    """
    s_set = set(s_set)
    if any(not (0 <= v < g.n) for v in s_set):
        raise ValueError("s_set outside the vertex range")
    if g.n == 0:
        return TreePartition([], [], root=None)
    td = _rooted_td(td)
    tables = occupancy_tables(g, td)
    width = td.width()
    builder = _Builder()
    roots = []
    comps = _components_within(g, range(g.n), ())
    for comp in comps:
        roots.append(
            _partition_into(g, td, tables, width, builder, comp, s_set & comp)
        )
    for extra in roots[1:]:
        builder.edges.append((roots[0], extra))
    return TreePartition(builder.bags, builder.edges, root=roots[0])


def partition_isolated(g: Graph, td: TreeDecomposition, v: int) -> TreePartition:
    """Tree-partition of g in which v is the only vertex of its bag.

    Root bag {v}; each component of g-v hangs below it, built with the
    neighborhood of v in the component as its root-bag contract.  Small
    graphs take the two-bag fallback {v}, V-{v}.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    td = _rooted_td(td)
    width = td.width()
    if g.n == 1:
        return TreePartition([[v]], [], root=0)
    if g.n <= CONSTANTS.window_low(width) + 1:
        rest = sorted(u for u in range(g.n) if u != v)
        return TreePartition([[v], rest], [(0, 1)], root=0)
    tables = occupancy_tables(g, td)
    builder = _Builder()
    root = builder.emit({v})
    nv = set(g.adj[v])
    for comp in _components_within(g, range(g.n), {v}):
        child = _partition_into(g, td, tables, width, builder, comp, nv & comp)
        builder.edges.append((root, child))
    return TreePartition(builder.bags, builder.edges, root=root)


def combine_blocks(h: Graph, bf: BlockForest, per_block) -> TreePartition:
    """Merge per-block partitions of h across its cutvertices.

    per_block maps block id -> TreePartition over that block's vertices
    (host vertex ids).  Every non-root block's partition must isolate its
    parent cutvertex; that singleton bag is removed and its tree neighbors
    re-attach to the bag already holding the cutvertex.
    """
    bags = []
    edges = []
    holder = {}  # host vertex -> combined node id

    order = []
    kids = bf.children()
    for b in bf.roots():
        stack = [b]
        while stack:
            x = stack.pop()
            order.append(x)
            stack.extend(sorted(kids[x], reverse=True))

    for b in order:
        tp = per_block[b]
        cut = bf.parent_cut[b]
        skip = None
        if cut is not None:
            for i, bag in enumerate(tp.bags):
                if cut in bag:
                    if list(bag) != [cut]:
                        raise ValueError(
                            f"block {b} does not isolate cutvertex {cut}"
                        )
                    skip = i
                    break
            if skip is None:
                raise ValueError(f"block {b} does not contain cutvertex {cut}")
        remap = {}
        for i, bag in enumerate(tp.bags):
            if i == skip:
                remap[i] = holder[cut]
                continue
            remap[i] = len(bags)
            bags.append(list(bag))
            for u in bag:
                if u not in holder:
                    holder[u] = remap[i]
        for i, j in tp.tree_edges:
            edges.append((remap[i], remap[j]))

    for u in range(h.n):
        if u not in holder:
            holder[u] = len(bags)
            bags.append([u])

    # join remaining tree components (disconnected hosts only)
    if bags:
        comp = list(range(len(bags)))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for i, j in edges:
            ri, rj = find(i), find(j)
            if ri != rj:
                comp[ri] = rj
        for i in range(1, len(bags)):
            ri, r0 = find(i), find(0)
            if ri != r0:
                comp[ri] = r0
                edges.append((0, i))
    return TreePartition(bags, edges, root=0 if bags else None)


def expand(tp_h: TreePartition, red) -> TreePartition:
    """Replace each quotient vertex in a partition of red.h by the member
    vertices of its part."""
    bags = []
    for bag in tp_h.bags:
        out = []
        for hv in bag:
            out.extend(red.parts[hv])
        bags.append(sorted(out))
    return TreePartition(bags, list(tp_h.tree_edges), root=tp_h.root)
