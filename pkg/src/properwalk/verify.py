"""Decision procedures for properly colored walk and path reachability.

These are the acceptors every emitted coloring must pass.  The walk variants
run a BFS over (vertex, last color) states; the path variants do exhaustive
simple-path search and are guarded to desk scale.
"""

from __future__ import annotations

from collections import deque

from .graphs import Digraph, EdgeColoring, Graph, Walk

PATH_SEARCH_LIMIT = 16


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")


def _colored_adjacency(g: Graph, c: EdgeColoring):
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        col = c.color(u, v)
        adj[u].append((v, col))
        adj[v].append((u, col))
    return [sorted(a) for a in adj]


def _colored_out_adjacency(d: Digraph, c: EdgeColoring):
    adj = [[] for _ in range(d.n)]
    for u, v in d.arcs:
        adj[u].append((v, c.assignment[(u, v)]))
    return [sorted(a) for a in adj]


def _state_search(adj, u, v, start_colors, end_colors):
    """BFS over (vertex, last color) states; returns a witness vertex tuple
    or None.  Never uses the empty walk."""
    parent = {}
    queue = deque()
    for y, col in adj[u]:
        if start_colors is not None and col not in start_colors:
            continue
        state = (y, col)
        if state not in parent:
            parent[state] = None
            if y == v and (end_colors is None or col in end_colors):
                return _rebuild(parent, state, u)
            queue.append(state)
    while queue:
        x, last = queue.popleft()
        for y, col in adj[x]:
            if col == last:
                continue
            state = (y, col)
            if state not in parent:
                parent[state] = (x, last)
                if y == v and (end_colors is None or col in end_colors):
                    return _rebuild(parent, state, u)
                queue.append(state)
    return None


def _rebuild(parent, state, u):
    out = []
    while state is not None:
        out.append(state[0])
        state = parent[state]
    out.append(u)
    return tuple(reversed(out))


def walk_reachable(g: Graph, c: EdgeColoring, u: int, v: int,
                   start_colors=None, end_colors=None) -> tuple[bool, Walk | None]:
    """Is there a properly colored u-v walk, optionally with prescribed first
    and last edge colors?  u = v with no constraints holds via the empty walk.

    Returns (answer, witness); the witness has at most n*k edges.
    """
    c.validate_for(g)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v and start_colors is None and end_colors is None:
        return True, Walk((u,))
    witness = _state_search(_colored_adjacency(g, c), u, v,
                            _as_color_set(start_colors), _as_color_set(end_colors))
    if witness is None:
        return False, None
    return True, Walk(witness)


def _as_color_set(colors):
    return None if colors is None else set(colors)


def verify_all_pairs(g: Graph, c: EdgeColoring) -> tuple[bool, tuple[int, int] | None]:
    """Does every unordered vertex pair have a properly colored walk?

    One state BFS per source; on failure returns the lexicographically first
    failing pair.
    """
    if not g.is_connected():
        raise ValueError("graph is not connected")
    c.validate_for(g)
    adj = _colored_adjacency(g, c)
    for src in range(g.n - 1):
        reached = _reached_from(adj, src)
        for tgt in range(src + 1, g.n):
            if tgt not in reached:
                return False, (src, tgt)
    return True, None


def _reached_from(adj, src):
    seen_states = set()
    reached = {src}
    queue = deque()
    for y, col in adj[src]:
        state = (y, col)
        if state not in seen_states:
            seen_states.add(state)
            reached.add(y)
            queue.append(state)
    while queue:
        x, last = queue.popleft()
        for y, col in adj[x]:
            if col == last:
                continue
            state = (y, col)
            if state not in seen_states:
                seen_states.add(state)
                reached.add(y)
                queue.append(state)
    return reached


def path_reachable(g: Graph, c: EdgeColoring, u: int, v: int) -> bool:
    """Is there a properly colored simple u-v path?  Exhaustive DFS over
    simple paths; guarded to graphs with at most 16 vertices."""
    if g.n > PATH_SEARCH_LIMIT:
        raise ValueError(f"path search is limited to {PATH_SEARCH_LIMIT} vertices")
    c.validate_for(g)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return True
    adj = _colored_adjacency(g, c)
    return _path_dfs(adj, u, v, 1 << u, 0)


def _path_dfs(adj, x, v, visited, last):
    for y, col in adj[x]:
        if col == last or visited & (1 << y):
            continue
        if y == v:
            return True
        if _path_dfs(adj, y, v, visited | (1 << y), col):
            return True
    return False


def walk_reachable_directed(d: Digraph, c: EdgeColoring, u: int, v: int) -> tuple[bool, Walk | None]:
    """Directed variant: properly colored directed walk from u to v."""
    c.validate_for(d)
    _check_vertex(d, u)
    _check_vertex(d, v)
    if u == v:
        return True, Walk((u,))
    witness = _state_search(_colored_out_adjacency(d, c), u, v, None, None)
    if witness is None:
        return False, None
    return True, Walk(witness)


def verify_all_pairs_directed(d: Digraph, c: EdgeColoring) -> tuple[bool, tuple[int, int] | None]:
    """All ordered pairs must be joined by a properly colored directed walk."""
    c.validate_for(d)
    adj = _colored_out_adjacency(d, c)
    for src in range(d.n):
        reached = _reached_from(adj, src)
        for tgt in range(d.n):
            if tgt != src and tgt not in reached:
                return False, (src, tgt)
    return True, None


def path_reachable_directed(d: Digraph, c: EdgeColoring, u: int, v: int) -> bool:
    if d.n > PATH_SEARCH_LIMIT:
        raise ValueError(f"path search is limited to {PATH_SEARCH_LIMIT} vertices")
    c.validate_for(d)
    _check_vertex(d, u)
    _check_vertex(d, v)
    if u == v:
        return True
    return _path_dfs(_colored_out_adjacency(d, c), u, v, 1 << u, 0)
