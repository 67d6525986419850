"""Tree decomposition frontend: elimination-order heuristics, certified
treewidth lower bounds, an exact small-instance search, and rebalancing of
a decomposition tree to logarithmic depth.

Decompositions are produced from elimination orders: the bag of a vertex is
itself plus its not-yet-eliminated neighbors at elimination time, and its
tree node attaches to the node of the bag member eliminated next.
"""

from __future__ import annotations

import random
import sys

from .decomp import TreeDecomposition
from .exact import CapacityError
from .graph import Graph


def _td_from_elimination(n: int, order, elim_bags) -> TreeDecomposition:
    """Build a decomposition from an elimination order.

    elim_bags[v] is the bag recorded when v was eliminated (v plus its
    remaining neighbors in the fill graph).  Node i of the tree holds the
    bag of order[i]; the root is the last elimination.
    """
    pos = {v: i for i, v in enumerate(order)}
    bags = [sorted(elim_bags[v]) for v in order]
    edges = []
    for i, v in enumerate(order[:-1]):
        later = [u for u in elim_bags[v] if u != v]
        if later:
            j = min(pos[u] for u in later)
        else:
            j = i + 1  # isolated remainder: chain to the next node
        edges.append((i, j))
    return TreeDecomposition(bags, edges, root=len(order) - 1)


def heuristic_td(g: Graph, strategy: str = "min-degree", seed: int = 0) -> TreeDecomposition:
    """Greedy elimination-order decomposition.

    strategy is "min-degree" or "min-fill"; ties are broken by a seeded
    per-vertex salt and then by vertex id, so the result is deterministic
    for a fixed seed.
    """
    if strategy not in ("min-degree", "min-fill"):
        raise ValueError(f"unknown strategy {strategy!r}")
    n = g.n
    if n == 0:
        return TreeDecomposition([[]], [], root=0)
    rnd = random.Random(seed)
    salt = [rnd.random() for _ in range(n)]
    nbr = [set(g.adj[v]) for v in range(n)]
    alive = set(range(n))
    order = []
    elim_bags = {}

    def fill_score(v):
        nv = sorted(nbr[v])
        return sum(
            1
            for i in range(len(nv))
            for j in range(i + 1, len(nv))
            if nv[j] not in nbr[nv[i]]
        )

    score = (lambda v: len(nbr[v])) if strategy == "min-degree" else fill_score
    for _ in range(n):
        v = min(alive, key=lambda u: (score(u), salt[u], u))
        order.append(v)
        elim_bags[v] = nbr[v] | {v}
        nv = nbr[v]
        for u in nv:
            nbr[u] |= nv
            nbr[u].discard(u)
            nbr[u].discard(v)
        alive.remove(v)
    return _td_from_elimination(n, order, elim_bags)


def treewidth_lower_bound(g: Graph) -> int:
    """Certified treewidth lower bound: max of the degeneracy and the
    minor-min-degree bound obtained by contracting minimum-degree vertices
    into least-common-neighbor neighbors."""
    n = g.n
    if n == 0:
        return 0

    # degeneracy by repeated minimum-degree deletion
    nbr = [set(g.adj[v]) for v in range(n)]
    alive = set(range(n))
    degen = 0
    while alive:
        v = min(alive, key=lambda u: (len(nbr[u]), u))
        degen = max(degen, len(nbr[v]))
        for u in nbr[v]:
            nbr[u].discard(v)
        alive.remove(v)

    # contraction refinement
    nbr = [set(g.adj[v]) for v in range(n)]
    alive = set(range(n))
    mmd = 0
    while len(alive) > 1:
        v = min(alive, key=lambda u: (len(nbr[u]), u))
        d = len(nbr[v])
        mmd = max(mmd, d)
        alive.remove(v)
        if d == 0:
            continue
        u = min(nbr[v], key=lambda w: (len(nbr[w] & nbr[v]), w))
        for w in nbr[v]:
            nbr[w].discard(v)
            if w != u:
                nbr[w].add(u)
                nbr[u].add(w)
        nbr[u].discard(u)
        nbr[v].clear()
    return max(degen, mmd)


def exact_td(g: Graph, k: int, cap: int = 15):
    """A tree decomposition of width <= k, or None if none exists.

    Exhaustive search over elimination orders with memoization on the set
    of already-eliminated vertices; the cost of eliminating v after S is
    the number of vertices outside S reachable from v through S.
    """
    n = g.n
    if n > cap:
        raise CapacityError(f"n={n} exceeds cap {cap}")
    if k < 0:
        return None
    if n == 0:
        return TreeDecomposition([[]], [], root=0)
    adj_mask = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            adj_mask[u] |= 1 << v

    def q_mask(s_mask: int, v: int) -> int:
        """Neighborhood outside s_mask of the through-S component of v."""
        reach = 1 << v
        nb = adj_mask[v]
        frontier = nb & s_mask & ~reach
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            reach |= 1 << u
            nb |= adj_mask[u]
            frontier = nb & s_mask & ~reach
        return nb & ~s_mask & ~(1 << v)

    full = (1 << n) - 1
    memo = {}

    def feasible(s_mask: int) -> bool:
        if s_mask == full:
            return True
        hit = memo.get(s_mask)
        if hit is not None:
            return hit
        rest = full & ~s_mask
        cands = []
        for v in _bits(rest):
            q = q_mask(s_mask, v)
            c = bin(q).count("1")
            if c <= k:
                cands.append((c, v))
        cands.sort()
        result = any(feasible(s_mask | (1 << v)) for _, v in cands)
        memo[s_mask] = result
        return result

    if not feasible(0):
        return None
    order = []
    elim_bags = {}
    s_mask = 0
    while s_mask != full:
        for v in _bits(full & ~s_mask):
            q = q_mask(s_mask, v)
            if bin(q).count("1") <= k and feasible(s_mask | (1 << v)):
                order.append(v)
                elim_bags[v] = {v} | set(_bits(q))
                s_mask |= 1 << v
                break
    return _td_from_elimination(n, order, elim_bags)


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# ---------------------------------------------------------------------------
# rebalancing to logarithmic depth
# ---------------------------------------------------------------------------


def balance_td(g: Graph, td: TreeDecomposition) -> TreeDecomposition:
    """Rebalance a decomposition to a rooted binary tree of logarithmic depth.

    The tree is first binarized (high-degree nodes expand into chains of
    duplicate bags), then recursively split.  A region of the tree carries
    at most two boundary edges to the outside; each new node's bag is the
    split node's bag united with the bags just outside the boundary edges,
    so bags combine at most three input bags: width <= 3*w(td) + 2.

    Split-node choice alternates implicitly between pure centroids (at most
    one boundary edge) and nodes on the path between the two boundary
    attachment points (chosen so both boundary-retaining components at most
    halve), which bounds the depth by O(log #nodes).
    """
    if td.num_nodes == 0:
        return TreeDecomposition([[]], [], root=0)
    bags = [sorted(set(b)) for b in td.bags]
    if td.num_nodes == 1:
        return TreeDecomposition([bags[0]], [], root=0)

    # --- root at 0 and binarize with duplicate-bag chains ---------------
    adj = td.node_adj()
    parent = [-1] * td.num_nodes
    order = [0]
    seen = [False] * td.num_nodes
    seen[0] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    kids = [[] for _ in range(td.num_nodes)]
    for v in order[1:]:
        kids[parent[v]].append(v)

    nb = list(bags)  # bags of the binarized tree (shared lists are fine)
    chl = {}
    for u in range(td.num_nodes):
        cs = kids[u]
        cur = u
        while len(cs) > 2:
            dup = len(nb)
            nb.append(nb[u])
            chl[cur] = [cs[0], dup]
            cs = cs[1:]
            cur = dup
        chl[cur] = cs
    badj = [[] for _ in range(len(nb))]
    for u, cs in chl.items():
        for v in cs:
            badj[u].append(v)
            badj[v].append(u)

    # --- recursive splitting --------------------------------------------
    out_bags = []
    out_edges = []

    def emit(bag) -> int:
        out_bags.append(sorted(bag))
        return len(out_bags) - 1

    def component_of(region, removed, start):
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in badj[u]:
                if v in region and v != removed and v not in comp:
                    comp.add(v)
                    stack.append(v)
        return comp

    def centroid(region) -> int:
        best = None
        for c in sorted(region):
            worst = 0
            left = region - {c}
            while left:
                comp = component_of(region, c, min(left))
                worst = max(worst, len(comp))
                left -= comp
            if best is None or (worst, c) < best:
                best = (worst, c)
        return best[1]

    def tree_path(region, a, b):
        prev = {a: None}
        queue = [a]
        qi = 0
        while queue[qi] != b:
            u = queue[qi]
            qi += 1
            for v in badj[u]:
                if v in region and v not in prev:
                    prev[v] = u
                    queue.append(v)
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path

    def build(region, boundary) -> int:
        if len(region) == 1:
            c = next(iter(region))
        elif len(boundary) <= 1:
            c = centroid(region)
        else:
            (_, a1), (_, a2) = boundary
            best = None
            for cand in tree_path(region, a1, a2):
                worst = 0
                for _, a in boundary:
                    if a != cand:
                        worst = max(worst, len(component_of(region, cand, a)))
                if best is None or (worst, cand) < best:
                    best = (worst, cand)
            c = best[1]
        bag = set(nb[c])
        for x, _ in boundary:
            bag |= set(nb[x])
        node = emit(bag)
        children = []
        left = region - {c}
        comps = []
        while left:
            comp = component_of(region, c, min(left))
            comps.append(comp)
            left -= comp
        comps.sort(key=min)
        for comp in comps:
            bnd = [(x, a) for x, a in boundary if a in comp]
            entry = min(v for v in badj[c] if v in comp)
            bnd.append((c, entry))
            children.append(build(comp, bnd))
        if len(children) <= 2:
            for ch in children:
                out_edges.append((node, ch))
        else:
            inter = emit(bag)
            out_edges.append((node, children[0]))
            out_edges.append((node, inter))
            out_edges.append((inter, children[1]))
            out_edges.append((inter, children[2]))
        return node

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(nb) + 100))
    try:
        build(set(range(len(nb))), [])
    finally:
        sys.setrecursionlimit(old_limit)
    return TreeDecomposition(out_bags, out_edges, root=0)


def occupancy_tables(g: Graph, td: TreeDecomposition):
    """Constant-time subtree-membership tables for a rooted decomposition.

    Returns (top, tin, tout): top[v] is the highest node containing v, and
    tin/tout are preorder intervals of the nodes.  Vertex v occupies a node
    in the subtree of t iff tin[t] <= tin[top[v]] <= tout[t], or v lies in
    the bag of t itself.
    """
    if td.root is None:
        raise ValueError("decomposition is not rooted")
    adj = td.node_adj()
    tin = [-1] * td.num_nodes
    tout = [-1] * td.num_nodes
    timer = 0
    stack = [(td.root, -1, False)]
    while stack:
        u, p, closing = stack.pop()
        if closing:
            tout[u] = timer - 1
            continue
        tin[u] = timer
        timer += 1
        stack.append((u, p, True))
        for v in adj[u]:
            if v != p:
                stack.append((v, u, False))
    top = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if v not in top or tin[i] < tin[top[v]]:
                top[v] = i
    return top, tin, tout
