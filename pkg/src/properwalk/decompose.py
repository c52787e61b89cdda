"""Structural decompositions: bridges, blocks, the bridge-deleted core,
bipartitions, odd cycles, disjoint paths, and the core contraction.

All operations are pure functions of immutable graphs.  Ties are broken by
lowest vertex id and lexicographic edge order throughout, so results are
reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, canonical_edge


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("graph is not connected")


def bridges(g: Graph) -> frozenset[tuple[int, int]]:
    """Cut edges of a connected graph, via the classic low-link DFS."""
    _require_connected(g)
    n = g.n
    disc = [0] * n          # 1-based discovery index, 0 = unvisited
    low = [0] * n
    out = []
    counter = 1
    for root in range(n):
        if disc[root]:
            continue
        # stack entries: (vertex, parent, index into adjacency)
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack.pop()
            adj = g.neighbors(v)
            if i < len(adj):
                stack.append((v, parent, i + 1))
                w = adj[i]
                if w == parent:
                    continue
                if disc[w]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
            else:
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] == disc[v]:
                        out.append(canonical_edge(parent, v))
    return frozenset(out)


def blocks(g: Graph) -> tuple[frozenset[int], ...]:
    """Blocks of a connected graph: maximal 2-connected subgraphs plus bridge
    edges, each given by its vertex set (blocks are induced subgraphs)."""
    _require_connected(g)
    n = g.n
    if n == 1:
        return ()
    disc = [0] * n
    low = [0] * n
    counter = 1
    edge_stack: list[tuple[int, int]] = []
    found: list[frozenset[int]] = []

    root = 0
    disc[root] = low[root] = counter
    counter += 1
    stack = [(root, -1, 0)]
    while stack:
        v, parent, i = stack.pop()
        adj = g.neighbors(v)
        if i < len(adj):
            stack.append((v, parent, i + 1))
            w = adj[i]
            if w == parent:
                continue
            if disc[w]:
                if disc[w] < disc[v]:     # back edge, seen once from below
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, 0))
        else:
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    # parent closes a block; pop edges down to (parent, v)
                    members = set()
                    while True:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (parent, v):
                            break
                    found.append(frozenset(members))
    return tuple(sorted(found, key=lambda s: (min(s), sorted(s))))


@dataclass(frozen=True)
class CoreComponent:
    """One component of the graph minus its bridges."""

    vertices: frozenset[int]
    incident_bridges: tuple[tuple[int, int], ...]

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 1


def bridgeless_core(g: Graph) -> tuple[CoreComponent, ...]:
    """Components of the spanning subgraph left after deleting every bridge,
    each tagged with the bridges incident to it.

    The components are 2-edge-connected unless they are single vertices.
    """
    cut = bridges(g)
    n = g.n
    comp = [-1] * n
    comps: list[set[int]] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        cid = len(comps)
        comps.append({s})
        comp[s] = cid
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if comp[y] < 0 and canonical_edge(x, y) not in cut:
                    comp[y] = cid
                    comps[cid].add(y)
                    queue.append(y)
    incident: list[list[tuple[int, int]]] = [[] for _ in comps]
    for e in sorted(cut):
        u, v = e
        incident[comp[u]].append(e)
        incident[comp[v]].append(e)
    out = [CoreComponent(frozenset(vs), tuple(inc)) for vs, inc in zip(comps, incident)]
    return tuple(sorted(out, key=lambda c: min(c.vertices)))


def meets_two_bridge_rule(cores) -> bool:
    """True when every core component touches at most two bridges."""
    return all(len(c.incident_bridges) <= 2 for c in cores)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two vertex classes with no internal edge, or None if an odd cycle
    exists.  BFS from the lowest id of each component; that vertex lands in
    the first class."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def shortest_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest odd cycle as a vertex tuple, or None if the graph is
    bipartite.

    BFS in the parity double cover from every vertex: the shortest odd closed
    walk through any vertex is attained on a shortest odd cycle, and a
    globally shortest odd closed walk is necessarily simple.
    """
    n = g.n
    best_len = None
    best_start = None
    for s in range(n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            x, par = queue.popleft()
            d = dist[(x, par)]
            if best_len is not None and d + 1 >= best_len:
                continue
            for y in g.neighbors(x):
                state = (y, par ^ 1)
                if state not in dist:
                    dist[state] = d + 1
                    queue.append(state)
        d_odd = dist.get((s, 1))
        if d_odd is not None and (best_len is None or d_odd < best_len):
            best_len = d_odd
            best_start = s
    if best_len is None:
        return None

    # Rebuild the closed walk from best_start with parent pointers.
    s = best_start
    dist = {(s, 0): 0}
    parent = {(s, 0): None}
    queue = deque([(s, 0)])
    while queue:
        x, par = queue.popleft()
        for y in g.neighbors(x):
            state = (y, par ^ 1)
            if state not in dist:
                dist[state] = dist[(x, par)] + 1
                parent[state] = (x, par)
                queue.append(state)
    walk = []
    state = (s, 1)
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    walk.reverse()              # s .. s, odd number of edges
    cyc = tuple(walk[:-1])
    assert len(cyc) == best_len and len(cyc) % 2 == 1
    assert len(set(cyc)) == len(cyc), "shortest odd closed walk was not simple"
    for i in range(len(cyc)):
        assert g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])
    return cyc


# ---------------------------------------------------------------------------
# Two internally disjoint paths via unit-capacity max flow
# ---------------------------------------------------------------------------

def two_disjoint_paths(g: Graph, w: int, targets) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two paths from w to the target set that share only w, end at distinct
    targets, and avoid targets internally.

    Computed by two augmentations of unit-capacity max flow with vertex
    splitting; raises ValueError when no such pair exists.
    """
    targets = set(targets)
    if w in targets:
        raise ValueError("start vertex lies in the target set")
    if len(targets) < 2:
        raise ValueError("need at least two target vertices")
    n = g.n

    # Node encoding: in(v) = 2v, out(v) = 2v + 1, sink = 2n.  Targets have no
    # in->out arc, so paths cannot pass through them.
    sink = 2 * n
    source = 2 * w + 1
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add(a, b, c):
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        cap[(a, b)] += c

    for v in range(n):
        if v in targets:
            add(2 * v, sink, 1)
        elif v != w:
            add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    for a in adj:
        adj[a] = sorted(set(adj[a]))

    flow: dict[tuple[int, int], int] = {e: 0 for e in cap}

    def augment() -> bool:
        prev = {source: None}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            if x == sink:
                break
            for y in adj.get(x, ()):
                if y not in prev and cap.get((x, y), 0) - flow[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            return False
        y = sink
        while prev[y] is not None:
            x = prev[y]
            flow[(x, y)] += 1
            flow[(y, x)] -= 1
            y = x
        return True

    got = 0
    while got < 2 and augment():
        got += 1
    if got < 2:
        raise ValueError(f"no two internally disjoint paths from {w} to the targets")

    # Decompose the flow into two vertex paths.
    paths = []
    for _ in range(2):
        path = [w]
        node = source
        while node != sink:
            nxt = None
            for y in adj.get(node, ()):
                if flow.get((node, y), 0) > 0:
                    nxt = y
                    break
            assert nxt is not None, "flow decomposition ran dry"
            flow[(node, nxt)] -= 1
            node = nxt
            if node != sink and node % 2 == 0:
                path.append(node // 2)
        paths.append(tuple(path))
    paths.sort(key=lambda p: (p[-1], p))
    p1, p2 = paths

    assert p1[-1] != p2[-1]
    assert set(p1[1:-1]).isdisjoint(targets) and set(p2[1:-1]).isdisjoint(targets)
    assert set(p1[1:]).isdisjoint(set(p2[1:])), "paths share an internal vertex"
    return p1, p2


# ---------------------------------------------------------------------------
# Two edge-disjoint odd cycles (semi-decision)
# ---------------------------------------------------------------------------

def _cycle_edges(cyc) -> set[tuple[int, int]]:
    return {canonical_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}


def cycle_connector(g: Graph, c1, c2) -> tuple[int, ...]:
    """Lowest shared vertex as a singleton, else a shortest path from c1 to
    c2 whose interior avoids both cycles."""
    shared = sorted(set(c1) & set(c2))
    if shared:
        return (shared[0],)
    side1 = set(c1)
    side2 = set(c2)
    prev: dict[int, int | None] = {v: None for v in sorted(side1)}
    queue = deque(sorted(side1))
    while queue:
        x = queue.popleft()
        if x in side2:
            path = []
            node: int | None = x
            while node is not None:
                path.append(node)
                node = prev[node]
            return tuple(reversed(path))
        for y in g.neighbors(x):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("cycles lie in different components")


def disjoint_odd_cycles(g: Graph):
    """Two edge-disjoint odd cycles plus a connector, or None if not found.

    Returns (cycle1, cycle2, connector) where the connector is a vertex path
    whose first vertex lies on cycle1 and last on cycle2; a single-vertex
    connector means the cycles share that vertex.  Detection is a
    semi-decision: None means "not found", never a proof of absence.
    """
    _require_connected(g)

    # Two nonbipartite blocks give cycles in different blocks immediately.
    odd_blocks = []
    for blk in blocks(g):
        if len(blk) < 3:
            continue
        sub, old = g.induced(blk)
        cyc = shortest_odd_cycle(sub)
        if cyc is not None:
            odd_blocks.append(tuple(old[v] for v in cyc))
            if len(odd_blocks) == 2:
                c1, c2 = odd_blocks
                conn = cycle_connector(g, c1, c2)
                return _orient_result(c1, c2, conn)

    # Otherwise remove a shortest odd cycle and search the remainder.
    c1 = shortest_odd_cycle(g)
    if c1 is None:
        return None
    used = _cycle_edges(c1)
    rest = Graph(g.n, [e for e in g.edges if e not in used])
    c2 = shortest_odd_cycle(rest)
    if c2 is None:
        return None
    conn = cycle_connector(g, c1, c2)
    return _orient_result(c1, c2, conn)


def rotate_cycle(cyc, v):
    i = cyc.index(v)
    return tuple(cyc[i:] + cyc[:i])


def _orient_result(c1, c2, conn):
    c1 = rotate_cycle(c1, conn[0])
    c2 = rotate_cycle(c2, conn[-1])
    return c1, c2, conn


# ---------------------------------------------------------------------------
# Core contraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoreContraction:
    """The graph obtained by contracting each nontrivial bridgeless-core
    component to a single vertex; its edges are exactly the bridges."""

    graph: Graph
    vertex_map: tuple[int, ...]                       # original vertex -> contracted vertex
    edge_map: dict[tuple[int, int], tuple[int, int]]  # bridge -> contracted edge
    is_path: bool


def contract_core_graph(g: Graph) -> CoreContraction:
    """Contract every nontrivial core component; the result is a tree, and it
    is a path exactly when every component touches at most two bridges."""
    cores = bridgeless_core(g)
    vmap = [0] * g.n
    for cid, comp in enumerate(cores):
        for v in comp.vertices:
            vmap[v] = cid
    cut = sorted(bridges(g))
    fedges = [(vmap[u], vmap[v]) for u, v in cut]
    f = Graph(len(cores), fedges)
    assert f.m == f.n - 1, "contraction of the bridgeless core must be a tree"
    emap = {e: canonical_edge(vmap[e[0]], vmap[e[1]]) for e in cut}
    return CoreContraction(f, tuple(vmap), emap, f.max_degree() <= 2)


@dataclass(frozen=True)
class Decomposition:
    """Bundle of the structural facts the coloring constructions rely on."""

    bridges: frozenset[tuple[int, int]]
    blocks: tuple[frozenset[int], ...]
    cores: tuple[CoreComponent, ...]
    bipartition: tuple[frozenset[int], frozenset[int]] | None

    @property
    def two_bridge_rule(self) -> bool:
        return meets_two_bridge_rule(self.cores)


def decomposition(g: Graph) -> Decomposition:
    _require_connected(g)
    return Decomposition(bridges(g), blocks(g), bridgeless_core(g), bipartition(g))
