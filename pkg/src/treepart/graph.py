"""Simple undirected graphs with the structural operations the rest of the
library is built on: connected components, blocks (biconnected components),
edge subdivision and quotients.

Vertices are dense 0-based integers.  All set-valued outputs are sorted so
that downstream golden tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class Graph:
    """Immutable simple graph given by sorted adjacency lists."""

    __slots__ = ("n", "adj", "_edge_count")

    def __init__(self, n: int, edges=()):
        adj = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.adj = adj
        self._edge_count = len(seen)

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        if len(self.adj[v]) < len(a):
            a, u, v = self.adj[v], v, u
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def validate(self):
        """Check simplicity and symmetry; raises AssertionError on failure."""
        for u in range(self.n):
            lst = self.adj[u]
            assert all(0 <= v < self.n for v in lst), f"vertex out of range near {u}"
            assert u not in lst, f"self-loop at {u}"
            assert lst == sorted(set(lst)), f"adjacency of {u} unsorted or duplicated"
            for v in lst:
                assert u in self.adj[v], f"asymmetric edge {u},{v}"
        return self

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices):
        """Induced subgraph on `vertices`.

        Returns (subgraph, old_ids) where old_ids[i] is the original id of
        subgraph vertex i.  Vertices are relabelled in sorted order.
        """
        old_ids = sorted(vertices)
        new_id = {v: i for i, v in enumerate(old_ids)}
        keep = set(old_ids)
        edges = [
            (new_id[u], new_id[v])
            for u in old_ids
            for v in self.adj[u]
            if u < v and v in keep
        ]
        return Graph(len(old_ids), edges), old_ids


@dataclass
class SubdivisionMap:
    """For each original edge, the ordered path of new vertex ids replacing it.

    The path for edge (u, v) with u < v runs from the u side to the v side.
    Edges with count zero map to the empty list.
    """

    paths: dict = field(default_factory=dict)

    def new_vertices(self):
        out = []
        for path in self.paths.values():
            out.extend(path)
        return sorted(out)


@dataclass
class BlockForest:
    """Blocks (2-connected components and bridges) with their cut tree.

    blocks: sorted vertex lists, one per block; bridge edges are blocks of
    size two.  parent_cut[b] is the cutvertex separating block b from its
    parent block (None for root blocks).  parent_block[b] is the parent
    block id (None for roots).  Per connected component the root block is
    the one containing the component's minimum vertex.
    """

    blocks: list
    cutvertices: list
    parent_cut: list
    parent_block: list

    def roots(self):
        return [b for b, p in enumerate(self.parent_block) if p is None]

    def children(self):
        kids = [[] for _ in self.blocks]
        for b, p in enumerate(self.parent_block):
            if p is not None:
                kids[p].append(b)
        return kids


def connected_components(g: Graph):
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        comps.append(comp)
    return comps


def biconnected_components(g: Graph) -> BlockForest:
    """Blocks and cutvertices by iterative Hopcroft-Tarjan.

    Isolated vertices belong to no block.  Bridges count as size-2 blocks so
    every edge lies in exactly one block.
    """
    n = g.n
    disc = [0] * n
    low = [0] * n
    timer = 1
    edge_stack = []
    raw_blocks = []
    cutset = set()

    for root in range(n):
        if disc[root]:
            continue
        # iterative DFS: stack of [vertex, parent, next adjacency index]
        stack = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, parent, i = stack[-1]
            if i < len(g.adj[u]):
                stack[-1][2] = i + 1
                v = g.adj[u][i]
                if v == parent:
                    continue  # simple graph: the unique edge back up
                if not disc[v]:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append([v, u, 0])
                elif disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        # p closes a block
                        block = set()
                        while edge_stack and edge_stack[-1] != (p, u):
                            a, b = edge_stack.pop()
                            block.add(a)
                            block.add(b)
                        if edge_stack:
                            a, b = edge_stack.pop()
                            block.add(a)
                            block.add(b)
                        if block:
                            raw_blocks.append(sorted(block))
                        if p != root:
                            cutset.add(p)
        if root_children >= 2:
            cutset.add(root)

    # Articulation flag for roots is handled above; now build the rooted forest.
    blocks = raw_blocks
    cutvertices = sorted(cutset)

    # map vertex -> blocks containing it
    in_blocks = {}
    for b, bl in enumerate(blocks):
        for v in bl:
            in_blocks.setdefault(v, []).append(b)

    parent_cut = [None] * len(blocks)
    parent_block = [None] * len(blocks)
    visited = [False] * len(blocks)
    # root block per component: block containing the component's minimum
    # block-covered vertex, with ties broken by smallest block content.
    order = sorted(range(len(blocks)), key=lambda b: blocks[b])
    for start in order:
        if visited[start]:
            continue
        visited[start] = True
        queue = [start]
        while queue:
            b = queue.pop(0)
            for v in blocks[b]:
                if v not in cutset:
                    continue
                for b2 in in_blocks[v]:
                    if not visited[b2]:
                        visited[b2] = True
                        parent_cut[b2] = v
                        parent_block[b2] = b
                        queue.append(b2)
    return BlockForest(blocks, cutvertices, parent_cut, parent_block)


def subdivide(g: Graph, counts: dict):
    """Subdivide each edge the given number of times.

    counts maps edges (u, v) in either orientation to a nonnegative count;
    missing edges get 0.  New vertices are numbered from g.n on, edge by edge
    in lexicographic edge order.
    """
    norm = {}
    for (u, v), c in counts.items():
        if u > v:
            u, v = v, u
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        if c < 0:
            raise ValueError("negative subdivision count")
        norm[(u, v)] = c
    edges = []
    paths = {}
    nxt = g.n
    for u, v in g.edges():
        c = norm.get((u, v), 0)
        if c == 0:
            paths[(u, v)] = []
            edges.append((u, v))
            continue
        path = list(range(nxt, nxt + c))
        nxt += c
        paths[(u, v)] = path
        chain = [u] + path + [v]
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
    return Graph(nxt, edges), SubdivisionMap(paths)


def quotient(g: Graph, parts):
    """Identify each part to a single vertex; drop loops and multiplicities.

    parts must partition 0..n-1.  Returns (quotient graph, part_of) where
    part_of[v] is the part id of v.  Part ids follow the given order.
    """
    part_of = [-1] * g.n
    for i, part in enumerate(parts):
        for v in part:
            if part_of[v] != -1:
                raise ValueError(f"vertex {v} in two parts")
            part_of[v] = i
    if any(p == -1 for p in part_of):
        raise ValueError("parts do not cover all vertices")
    edges = set()
    for u, v in g.edges():
        pu, pv = part_of[u], part_of[v]
        if pu != pv:
            edges.add((min(pu, pv), max(pu, pv)))
    return Graph(len(parts), sorted(edges)), part_of
