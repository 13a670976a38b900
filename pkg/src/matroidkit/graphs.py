"""Small labeled multigraphs: contraction, simplification, connectivity,
minor containment.  Sized for exhaustive work on graphs of at most a dozen
vertices; all scans are brute force with memoization where it matters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Label, Matroid
from .errors import InputError


@dataclass(frozen=True)
class Graph:
    nv: int
    edges: tuple[tuple[Label, int, int], ...]

    def edge_labels(self) -> tuple:
        return tuple(lab for lab, _, _ in self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for _, u, w in self.edges)

    def vertex_pairs(self) -> set[tuple[int, int]]:
        return {(min(u, w), max(u, w)) for _, u, w in self.edges if u != w}

    def is_simple(self) -> bool:
        seen = set()
        for _, u, w in self.edges:
            if u == w:
                return False
            key = (min(u, w), max(u, w))
            if key in seen:
                return False
            seen.add(key)
        return True


def from_matroid(m: Matroid) -> Graph | None:
    """Unwrap a directly graphic matroid; None for any other backend."""
    desc = m.describe()
    if desc[0] != "graph":
        return None
    _, nv, endpoints = desc
    return Graph(nv, tuple((lab, u, v) for lab, (u, v) in zip(m.ground, endpoints)))


def _components(nv: int, pairs) -> int:
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = nv
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def is_connected(g: Graph) -> bool:
    return g.nv <= 1 or _components(g.nv, ((u, v) for _, u, v in g.edges)) == 1


def is_3connected_graph(g: Graph) -> bool:
    """Vertex connectivity >= 3, by removing every vertex pair (brute force)."""
    if g.nv < 4 or not g.is_simple() or not is_connected(g):
        return False
    for drop in itertools.combinations(range(g.nv), 2):
        kept = [v for v in range(g.nv) if v not in drop]
        renum = {v: i for i, v in enumerate(kept)}
        pairs = [(renum[u], renum[w]) for _, u, w in g.edges
                 if u not in drop and w not in drop]
        if _components(len(kept), pairs) != 1:
            return False
    return True


def contract_edge(g: Graph, label: Label) -> Graph:
    """Contract one edge; the merged vertex keeps the smaller id and vertex
    ids are compacted, so contraction sequences commute on labeled results."""
    target = next((e for e in g.edges if e[0] == label), None)
    if target is None:
        raise InputError(f"no edge labeled {label!r}")
    _, a, b = target
    if a == b:  # contracting a loop is deletion
        return Graph(g.nv, tuple(e for e in g.edges if e[0] != label))
    lo, hi = min(a, b), max(a, b)
    kept = [v for v in range(g.nv) if v != hi]
    renum = {v: i for i, v in enumerate(kept)}
    renum[hi] = renum[lo]
    edges = tuple((lab, renum[u], renum[w]) for lab, u, w in g.edges if lab != label)
    return Graph(g.nv - 1, edges)


def delete_edge(g: Graph, label: Label) -> Graph:
    return Graph(g.nv, tuple(e for e in g.edges if e[0] != label))


def simplify_graph(g: Graph) -> Graph:
    """Drop loops; keep the first edge of every parallel bundle."""
    seen = set()
    out = []
    for lab, u, w in g.edges:
        if u == w:
            continue
        key = (min(u, w), max(u, w))
        if key in seen:
            continue
        seen.add(key)
        out.append((lab, u, w))
    return Graph(g.nv, tuple(out))


def _embeds_as_subgraph(h: Graph, g: Graph) -> bool:
    """Injective vertex map carrying every H edge onto a G edge."""
    gpairs = g.vertex_pairs()
    hpairs = sorted(h.vertex_pairs())
    hdeg = [h.degree(v) for v in range(h.nv)]
    gdeg = [g.degree(v) for v in range(g.nv)]
    order = sorted(range(h.nv), key=lambda v: -hdeg[v])
    assign = {}

    def extend(pos: int) -> bool:
        if pos == h.nv:
            return True
        hv = order[pos]
        for gv in range(g.nv):
            if gv in assign.values() or gdeg[gv] < hdeg[hv]:
                continue
            ok = True
            for a, b in hpairs:
                if a == hv and b in assign:
                    if (min(gv, assign[b]), max(gv, assign[b])) not in gpairs:
                        ok = False
                        break
                if b == hv and a in assign:
                    if (min(gv, assign[a]), max(gv, assign[a])) not in gpairs:
                        ok = False
                        break
            if ok:
                assign[hv] = gv
                if extend(pos + 1):
                    return True
                del assign[hv]
        return False

    return extend(0)


def has_graph_minor(g: Graph, h: Graph, deadline=None) -> bool:
    """H-minor containment for simple H: contract edges, then look for H as a
    subgraph.  Complete because every minor is a subgraph of some contraction;
    memoized on the labeled shape reached (contraction order commutes)."""
    h = simplify_graph(h)
    memo: dict = {}

    def shape(gr: Graph):
        return (gr.nv, tuple(sorted((min(u, w), max(u, w)) for _, u, w in gr.edges)))

    def search(gr: Graph) -> bool:
        if deadline is not None:
            deadline.check()
        if gr.nv < h.nv or len(gr.vertex_pairs()) < len(h.vertex_pairs()):
            return False
        key = shape(gr)
        if key in memo:
            return memo[key]
        gs = simplify_graph(gr)
        if _embeds_as_subgraph(h, gs):
            memo[key] = True
            return True
        for lab, u, w in gs.edges:
            if u != w and search(contract_edge(gs, lab)):
                memo[key] = True
                return True
        memo[key] = False
        return False

    return search(g)
