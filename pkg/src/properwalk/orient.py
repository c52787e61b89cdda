"""Orientations: strongly connected orientations of 2-edge-connected graphs,
and the path-anchored orientation used for coloring around an anchor path."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Digraph, Graph
from .decompose import bridges, two_disjoint_paths


def robbins_orientation(h: Graph) -> Digraph:
    """Orient every edge of a 2-edge-connected graph so the result is
    strongly connected: DFS tree edges point away from the root, every other
    edge points back toward an ancestor.  Strong connectivity is asserted
    before returning."""
    if h.n < 2:
        raise ValueError("need at least 2 vertices to orient")
    if not h.is_connected():
        raise ValueError("graph is not connected")
    if bridges(h):
        raise ValueError("graph has a bridge; no strongly connected orientation exists")

    disc = [0] * h.n
    arcs = []
    oriented = set()
    counter = 1
    disc[0] = counter
    counter += 1
    stack = [(0, 0)]
    while stack:
        v, i = stack.pop()
        adj = h.neighbors(v)
        if i >= len(adj):
            continue
        stack.append((v, i + 1))
        w = adj[i]
        e = (v, w) if v < w else (w, v)
        if e in oriented:
            continue
        oriented.add(e)
        arcs.append((v, w))
        if not disc[w]:
            disc[w] = counter
            counter += 1
            stack.append((w, 0))

    d = Digraph(h.n, arcs)
    assert d.is_strongly_connected(), "orientation of a bridgeless graph must be strong"
    return d


@dataclass(frozen=True)
class PathAnchoredOrientation:
    """A spanning oriented subgraph anchored on a directed path.

    ``anchors`` maps every vertex off the path to a pair (q, r) of path
    vertices with q strictly nearer the path's end: a directed walk exists
    from q to the vertex and from the vertex to r.
    """

    arcs: Digraph
    path: tuple[int, ...]
    anchors: dict[int, tuple[int, int]]


def path_anchored_orientation(h: Graph, p) -> PathAnchoredOrientation:
    """Orient a spanning subgraph of ``h`` so that the path ``p`` runs from
    its first vertex u to its last vertex v, u reaches everything, and every
    vertex pair is connected by a directed walk in at least one direction.

    Grows the oriented subgraph one missing vertex at a time: take the two
    internally disjoint paths from the lowest missing vertex to ``p``, cut
    each at its first contact with the current subgraph, orient the contact
    whose q-anchor sits nearer v toward the new vertex and the other one away
    from it.  Requires every off-path vertex to have two internally disjoint
    paths to ``p`` ending at distinct vertices.
    """
    p = tuple(p)
    if len(set(p)) != len(p):
        raise ValueError("anchor path repeats a vertex")
    for i in range(len(p) - 1):
        if not h.has_edge(p[i], p[i + 1]):
            raise ValueError(f"anchor path edge ({p[i]}, {p[i + 1]}) missing from graph")
    pos = {v: i for i, v in enumerate(p)}

    in_sub = set(p)
    arcs = [(p[i], p[i + 1]) for i in range(len(p) - 1)]
    anchors: dict[int, tuple[int, int]] = {}

    def anchor_of(x: int) -> tuple[int, int]:
        return (x, x) if x in pos else anchors[x]

    while len(in_sub) < h.n:
        w = min(v for v in range(h.n) if v not in in_sub)
        pa, pb = two_disjoint_paths(h, w, set(p))
        trunc = []
        for full in (pa, pb):
            cut = [w]
            for x in full[1:]:
                cut.append(x)
                if x in in_sub:
                    break
            trunc.append(tuple(cut))
        ta, tb = trunc
        qa, ra = anchor_of(ta[-1])
        qb, rb = anchor_of(tb[-1])
        if pos[qa] > pos[rb]:
            toward, away, q, r = ta, tb, qa, rb
        elif pos[qb] > pos[ra]:
            toward, away, q, r = tb, ta, qb, ra
        else:
            raise AssertionError(
                f"no contact ordering with a strictly nearer q-anchor at vertex {w}; "
                f"contacts {ta[-1]}/{tb[-1]} anchored {qa, ra}/{qb, rb}")
        # "toward" carries flow from its contact down to w, "away" from w out.
        for i in range(len(toward) - 1, 0, -1):
            arcs.append((toward[i], toward[i - 1]))
        for i in range(len(away) - 1):
            arcs.append((away[i], away[i + 1]))
        for x in set(toward) | set(away):
            if x not in in_sub:
                in_sub.add(x)
                anchors[x] = (q, r)

    return PathAnchoredOrientation(Digraph(h.n, arcs), p, anchors)


def reaches(d: Digraph, src: int) -> set[int]:
    """Vertices reachable from src along arcs."""
    seen = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in d.out_neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen
