"""Models and verifiers for tree decompositions, tree-partitions, domino
tree decompositions and tree-cut decompositions.

Verifiers recompute everything from scratch and return either the width
(an int, or a (width, nice) pair for tree-cut decompositions) or a
:class:`Violation` naming the first failed clause in deterministic scan
order.  Malformed indices raise ValueError instead, so structural garbage
is never confused with a definitional violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class Violation:
    """First violated clause of a decomposition definition, with a witness."""

    clause: str
    witness: object = None

    def __bool__(self):
        return False

    def __str__(self):
        return f"{self.clause}: {self.witness!r}"


@dataclass
class TreeDecomposition:
    """Tree plus covering bags.  Nodes are 0..len(bags)-1."""

    bags: list  # node -> sorted vertex list
    tree_edges: list  # (i, j) pairs
    root: int | None = None

    @property
    def num_nodes(self):
        return len(self.bags)

    def width(self):
        return max((len(b) for b in self.bags), default=1) - 1

    def node_adj(self):
        adj = [[] for _ in self.bags]
        for i, j in self.tree_edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def depth(self):
        """Depth of the rooted tree (root at depth 0); requires root set."""
        if self.root is None:
            raise ValueError("decomposition is not rooted")
        adj = self.node_adj()
        best = 0
        stack = [(self.root, -1, 0)]
        while stack:
            u, p, d = stack.pop()
            best = max(best, d)
            for v in adj[u]:
                if v != p:
                    stack.append((v, u, d + 1))
        return best


@dataclass
class TreePartition:
    """Tree whose bags partition the host's vertex set."""

    bags: list  # node -> sorted vertex list
    tree_edges: list
    root: int | None = None

    @property
    def num_nodes(self):
        return len(self.bags)

    def width(self):
        return max((len(b) for b in self.bags), default=0)

    def node_adj(self):
        adj = [[] for _ in self.bags]
        for i, j in self.tree_edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def bag_of(self):
        """vertex -> node id table (vertices assumed partitioned)."""
        out = {}
        for i, bag in enumerate(self.bags):
            for v in bag:
                out[v] = i
        return out


@dataclass
class TreeCutDecomposition:
    """Rooted tree with a near partition of the host's vertices.

    Stored adh/tor values, if any, are ignored by the verifier; everything
    is recomputed from the bags and the host graph.
    """

    bags: list
    tree_edges: list
    root: int = 0

    @property
    def num_nodes(self):
        return len(self.bags)

    def node_adj(self):
        adj = [[] for _ in self.bags]
        for i, j in self.tree_edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


def _check_tree_shape(num_nodes: int, tree_edges) -> None:
    """Raise ValueError unless the edges form a tree over 0..num_nodes-1."""
    for i, j in tree_edges:
        if not (0 <= i < num_nodes and 0 <= j < num_nodes) or i == j:
            raise ValueError(f"bad tree edge ({i},{j})")
    if num_nodes == 0:
        if tree_edges:
            raise ValueError("tree edges on zero nodes")
        return
    if len(tree_edges) != num_nodes - 1:
        raise ValueError(
            f"tree must have {num_nodes - 1} edges, got {len(tree_edges)}"
        )
    adj = [[] for _ in range(num_nodes)]
    for i, j in tree_edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * num_nodes
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    if count != num_nodes:
        raise ValueError("tree is disconnected")


def _check_bag_indices(g: Graph, bags) -> None:
    for i, bag in enumerate(bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise ValueError(f"bag {i} mentions vertex {v} outside 0..{g.n - 1}")


def verify_td(g: Graph, td: TreeDecomposition):
    """Width of a valid tree decomposition, or the first Violation."""
    _check_bag_indices(g, td.bags)
    _check_tree_shape(td.num_nodes, td.tree_edges)
    if g.n == 0:
        return max((len(b) for b in td.bags), default=1) - 1

    where = [[] for _ in range(g.n)]
    for i, bag in enumerate(td.bags):
        for v in set(bag):
            where[v].append(i)
    for v in range(g.n):
        if not where[v]:
            return Violation("vertex-coverage", v)
    bag_sets = [set(b) for b in td.bags]
    for u, v in g.edges():
        if not any(v in bag_sets[i] for i in where[u]):
            return Violation("edge-coverage", (u, v))
    adj = td.node_adj()
    for v in range(g.n):
        nodes = set(where[v])
        start = where[v][0]
        stack = [start]
        reached = {start}
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in nodes and j not in reached:
                    reached.add(j)
                    stack.append(j)
        if reached != nodes:
            return Violation("occupancy-connectivity", v)
    return max(len(b) for b in td.bags) - 1


def verify_tp(g: Graph, tp: TreePartition):
    """Width of a valid tree-partition, or the first Violation."""
    _check_bag_indices(g, tp.bags)
    _check_tree_shape(tp.num_nodes, tp.tree_edges)
    if g.n == 0 and tp.num_nodes == 0:
        return 0

    for i, bag in enumerate(tp.bags):
        if not bag:
            return Violation("empty-bag", i)
    node_of = [-1] * g.n
    for i, bag in enumerate(tp.bags):
        for v in bag:
            if node_of[v] != -1:
                return Violation("vertex-in-two-bags", v)
            node_of[v] = i
    for v in range(g.n):
        if node_of[v] == -1:
            return Violation("vertex-coverage", v)
    tree_edge_set = {(min(i, j), max(i, j)) for i, j in tp.tree_edges}
    for u, v in g.edges():
        iu, iv = node_of[u], node_of[v]
        if iu != iv and (min(iu, iv), max(iu, iv)) not in tree_edge_set:
            return Violation("edge-locality", (u, v))
    return max(len(b) for b in tp.bags)


def verify_domino(g: Graph, td: TreeDecomposition):
    """verify_td plus the at-most-two-bags-per-vertex condition."""
    base = verify_td(g, td)
    if isinstance(base, Violation):
        return base
    counts = [0] * g.n
    for bag in td.bags:
        for v in set(bag):
            counts[v] += 1
    for v in range(g.n):
        if counts[v] > 2:
            return Violation("vertex-in-three-bags", v)
    return base


def tcd_cuts(g: Graph, tcd: TreeCutDecomposition):
    """cut(e) sizes for every tree edge, keyed by the child endpoint.

    Requires the tree shape to be valid.  cut(e) counts host edges with one
    endpoint below e and one above.
    """
    adj = [[] for _ in range(tcd.num_nodes)]
    for i, j in tcd.tree_edges:
        adj[i].append(j)
        adj[j].append(i)
    parent = [-1] * tcd.num_nodes
    order = [tcd.root]
    seen = [False] * tcd.num_nodes
    seen[tcd.root] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    node_of = {}
    for i, bag in enumerate(tcd.bags):
        for v in bag:
            node_of[v] = i
    # below[t] = vertex set of the subtree rooted at t
    below = [set(b) for b in tcd.bags]
    for u in reversed(order):
        p = parent[u]
        if p != -1:
            below[p] |= below[u]
    cut = {}
    for t in order[1:]:
        sub = below[t]
        c = 0
        for v in sub:
            for w in g.adj[v]:
                if w not in sub:
                    c += 1
        cut[t] = c
    return cut, parent, order, below, node_of


def verify_tcd(g: Graph, tcd: TreeCutDecomposition):
    """(width, nice) of a valid tree-cut decomposition, or a Violation."""
    _check_bag_indices(g, tcd.bags)
    _check_tree_shape(tcd.num_nodes, tcd.tree_edges)
    if not (0 <= tcd.root < max(tcd.num_nodes, 1)):
        raise ValueError(f"bad root {tcd.root}")

    node_of = [-1] * g.n
    for i, bag in enumerate(tcd.bags):
        for v in bag:
            if node_of[v] != -1:
                return Violation("vertex-in-two-bags", v)
            node_of[v] = i
    for v in range(g.n):
        if node_of[v] == -1:
            return Violation("near-partition-coverage", v)

    cut, parent, order, below, _ = tcd_cuts(g, tcd)
    adj = [[] for _ in range(tcd.num_nodes)]
    for i, j in tcd.tree_edges:
        adj[i].append(j)
        adj[j].append(i)

    width = 0
    for t in range(tcd.num_nodes):
        bold_incident = 0
        for u in adj[t]:
            child = u if parent[u] == t else t
            if cut.get(child, 0) >= 3:
                bold_incident += 1
        tor = len(tcd.bags[t]) + bold_incident
        adh = cut.get(t, 0)  # 0 for the root
        width = max(width, tor, adh)

    # nice: thin nodes' subtrees have no neighbors in sibling subtrees
    nice = True
    for t in order[1:]:
        if cut[t] <= 2:  # thin node
            p = parent[t]
            siblings = [s for s in adj[p] if s != t and parent[s] == p]
            sib_vertices = set()
            for s in siblings:
                sib_vertices |= below[s]
            for v in below[t]:
                if any(w in sib_vertices for w in g.adj[v]):
                    nice = False
                    break
        if not nice:
            break
    return width, nice
