"""Cocircuit configurations and triangle/triad contractibility patterns.

A configuration for a pair (M, N) is a rank-3 cocircuit C* together with an
attachment point p in cl(C*) - C* such that {x, p} is vertically
N-contractible for at least one x in C*.  The restriction M|(C* + p) is
either connected (and then carries a 4-element circuit) or splits into a
line plus a single coloop; both classifications are recorded and re-checked.

Web patterns are detected in two phases: pure triangle/triad incidence
combinatorics first (cheap), contractibility conditions second (expensive,
injected as callables so callers can memoize them).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .connectivity import is_connected
from .core import Label, Matroid
from .errors import InputError
from . import minors


@dataclass(frozen=True)
class Configuration:
    """A classified (M, N) cocircuit configuration."""

    m: Matroid
    cstar: frozenset
    p: Label
    witness_x: Label
    connected: bool
    minimum: bool                  # |C*| == 3
    line: frozenset | None         # disconnected case
    coloop: Label | None           # disconnected case
    four_circuit: frozenset | None  # connected case
    decomposition_ok: bool

    def summary(self) -> str:
        cs = ",".join(str(x) for x in self.m.sorted_labels(self.cstar))
        tag = "conn" if self.connected else "disc"
        extra = ""
        if not self.connected and self.line is not None:
            ln = ",".join(str(x) for x in self.m.sorted_labels(self.line))
            extra = f" line[{ln}] coloop={self.coloop}"
        return f"C*[{cs}] p={self.p} {tag}{extra}"


@dataclass(frozen=True)
class WebRecord:
    """A biweb / triweb / prism instance with its per-condition verdicts."""

    kind: str
    edges: tuple
    triangle_p: tuple
    triangle_q: tuple | None
    conditions: dict

    def elements(self) -> frozenset:
        out = set(self.edges) | set(self.triangle_p)
        if self.triangle_q:
            out |= set(self.triangle_q)
        return frozenset(out)

    def summary(self) -> str:
        e = ",".join(str(x) for x in self.edges)
        tp = ",".join(str(x) for x in self.triangle_p)
        out = f"edges[{e}] P[{tp}]"
        if self.triangle_q:
            tq = ",".join(str(x) for x in self.triangle_q)
            out += f" Q[{tq}]"
        return out


PairTest = Callable[[Label, Label], bool]
SetTest = Callable[[frozenset], bool]


def rank3_cocircuits(m: Matroid) -> tuple[frozenset, ...]:
    return tuple(c for c in (m.labels_of(mask) for mask in m.cocircuit_masks())
                 if m.rank(c) == 3)


def classify_restriction(m: Matroid, cstar: frozenset, p: Label):
    """Classify H = M|(C* + p): connected with a 4-circuit, or line + coloop.

    Returns (connected, line, coloop, four_circuit, ok); `ok` is False when
    neither decomposition fits, which would contradict the expected dichotomy
    for rank-3 restrictions and is reported upstream rather than raised.
    """
    members = set(cstar) | {p}
    h = m.restrict(members)
    if is_connected(h):
        four = next((h.labels_of(cm) for cm in h.circuit_masks()
                     if cm.bit_count() == 4), None)
        return True, None, None, four, four is not None
    coloops = [x for x in h.ground if h.corank([x]) == 0]
    if len(coloops) != 1:
        return False, None, None, None, False
    coloop = coloops[0]
    line = frozenset(x for x in members if x != coloop)
    ok = (m.rank(line) == 2 and m.closure(line) == line and p in line)
    return False, line, coloop, None, ok


def classify_configuration(m: Matroid, cstar: frozenset, p: Label,
                           witness_x: Label) -> Configuration:
    """Fill the classification fields for a validated (C*, p) pair."""
    connected, line, coloop, four, ok = classify_restriction(m, cstar, p)
    return Configuration(
        m=m, cstar=frozenset(cstar), p=p, witness_x=witness_x,
        connected=connected, minimum=len(cstar) == 3,
        line=line, coloop=coloop, four_circuit=four,
        decomposition_ok=ok)


def find_configurations(m: Matroid, n: Matroid,
                        vnc_pair: PairTest | None = None,
                        deadline=None) -> tuple[Configuration, ...]:
    """All configurations (C*, p), canonically ordered and classified."""
    if vnc_pair is None:
        vnc_pair = lambda x, p: minors.is_vnc_set(m, n, frozenset((x, p)))
    out = []
    for cstar in rank3_cocircuits(m):
        attach = m.closure(cstar) - cstar
        for p in m.sorted_labels(attach):
            if deadline is not None:
                deadline.check()
            witness = next((x for x in m.sorted_labels(cstar) if vnc_pair(x, p)), None)
            if witness is None:
                continue
            out.append(classify_configuration(m, cstar, p, witness))
    return tuple(out)


# -- incidence patterns -----------------------------------------------------


def fan_patterns(m: Matroid) -> tuple[tuple, ...]:
    """5-tuples (x1, x2, p1, p2, p3): T = {p1,p2,p3} a triangle and
    {x1,p2,p3}, {p1,x2,p3} triads.  Canonical form: x1 before x2."""
    triads = set(m.triads())
    out = []
    for tri_mask in m.circuit_masks():
        if tri_mask.bit_count() != 3:
            continue
        t = m.sorted_labels(m.labels_of(tri_mask))
        tset = set(t)
        for p3 in t:
            others = [x for x in t if x != p3]
            for p1, p2 in (others, others[::-1]):
                # triad {x1, p2, p3} pairs x1 with p1; {p1, x2, p3} pairs x2 with p2
                xs1 = [x for x in m.ground
                       if x not in tset and frozenset((x, p2, p3)) in triads]
                xs2 = [x for x in m.ground
                       if x not in tset and frozenset((x, p1, p3)) in triads]
                for x1 in xs1:
                    for x2 in xs2:
                        if x1 == x2:
                            continue
                        if m.index_of(x1) < m.index_of(x2):
                            out.append((x1, x2, p1, p2, p3))
    return tuple(sorted(set(out), key=lambda tpl: tuple(m.index_of(x) for x in tpl)))


def triweb_patterns(m: Matroid) -> tuple[tuple, ...]:
    """6-tuples (x1, x2, x3, p1, p2, p3): T a triangle and each {x_i} + (T - p_i)
    a triad.  The p_i are in canonical order, so each pattern appears once."""
    triads = set(m.triads())
    out = []
    for tri_mask in m.circuit_masks():
        if tri_mask.bit_count() != 3:
            continue
        t = m.sorted_labels(m.labels_of(tri_mask))
        tset = set(t)
        cands = []
        for p in t:
            rest = frozenset(x for x in t if x != p)
            cands.append([x for x in m.ground
                          if x not in tset and frozenset({x}) | rest in triads])
        for x1 in cands[0]:
            for x2 in cands[1]:
                for x3 in cands[2]:
                    if len({x1, x2, x3}) == 3:
                        out.append((x1, x2, x3, t[0], t[1], t[2]))
    return tuple(out)


# -- webs -------------------------------------------------------------------


@dataclass
class WebTests:
    """Contractibility predicates used by web detection (memoizable)."""

    vnc_set: SetTest          # si(M/X) 3-connected with an N-minor
    n_contractible: SetTest   # M/X 3-connected with an N-minor


def default_web_tests(m: Matroid, n: Matroid) -> WebTests:
    return WebTests(
        vnc_set=lambda xs: minors.is_vnc_set(m, n, xs),
        n_contractible=lambda xs: minors.is_n_contractible_set(m, n, xs),
    )


def _biweb_conditions(tests: WebTests, x1, x2, p1, p2, p3) -> dict:
    t = frozenset((p1, p2, p3))
    bw1 = tests.vnc_set(t)
    bw2 = tests.vnc_set(frozenset((x1,))) and tests.vnc_set(frozenset((x2,)))
    bw3 = tests.vnc_set(frozenset((x1, p1))) and tests.vnc_set(frozenset((x2, p2)))
    bw = tests.vnc_set(frozenset((x1, p1)))
    return {"BW1": bw1, "BW2": bw2, "BW3": bw3, "BW": bw}


def find_biwebs(m: Matroid, n: Matroid, tests: WebTests | None = None,
                deadline=None) -> tuple[WebRecord, ...]:
    tests = tests or default_web_tests(m, n)
    out = []
    for x1, x2, p1, p2, p3 in fan_patterns(m):
        if deadline is not None:
            deadline.check()
        conds = _biweb_conditions(tests, x1, x2, p1, p2, p3)
        if conds["BW1"] and conds["BW2"] and conds["BW3"]:
            out.append(WebRecord("biweb", (x1, x2), (p1, p2, p3), None, conds))
    return tuple(out)


def _triweb_conditions(tests: WebTests, xs, ps) -> dict:
    t = frozenset(ps)
    tw1 = (tests.vnc_set(t)
           and all(tests.vnc_set(frozenset((x,))) for x in xs)
           and all(tests.vnc_set(frozenset((x, p))) for x, p in zip(xs, ps)))
    tw2 = (all(tests.n_contractible(frozenset((x,))) for x in xs)
           and tests.n_contractible(t))
    return {"TW1": tw1, "TW2": tw2}


def find_triwebs(m: Matroid, n: Matroid, tests: WebTests | None = None,
                 deadline=None) -> tuple[WebRecord, ...]:
    tests = tests or default_web_tests(m, n)
    out = []
    for x1, x2, x3, p1, p2, p3 in triweb_patterns(m):
        if deadline is not None:
            deadline.check()
        conds = _triweb_conditions(tests, (x1, x2, x3), (p1, p2, p3))
        if conds["TW1"] and conds["TW2"]:
            out.append(WebRecord("triweb", (x1, x2, x3), (p1, p2, p3), None, conds))
    return tuple(out)


def find_prisms(m: Matroid, n: Matroid, tests: WebTests | None = None,
                deadline=None) -> tuple[WebRecord, ...]:
    """Two triwebs sharing their edge triple, with disjoint triangles."""
    tests = tests or default_web_tests(m, n)
    triwebs = find_triwebs(m, n, tests, deadline)
    by_edges: dict[frozenset, list[WebRecord]] = {}
    for w in triwebs:
        by_edges.setdefault(frozenset(w.edges), []).append(w)
    out = []
    for edge_set in sorted(by_edges, key=lambda s: tuple(m.index_of(x) for x in m.sorted_labels(s))):
        group = by_edges[edge_set]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                a, b = group[i], group[j]
                ta, tb = set(a.triangle_p), set(b.triangle_p)
                if ta & tb or ta & edge_set or tb & edge_set:
                    continue
                first, second = sorted(
                    (a, b), key=lambda w: min(m.index_of(x) for x in w.triangle_p))
                # Align the q-triangle with the edge order of the p-record.
                q_by_edge = dict(zip(second.edges, second.triangle_p))
                tri_q = tuple(q_by_edge[x] for x in first.edges)
                conds = dict(first.conditions)
                for k, v in second.conditions.items():
                    conds[k] = conds.get(k, True) and v
                out.append(WebRecord("prism", first.edges, first.triangle_p,
                                     tri_q, conds))
    return tuple(out)


def find_webs(m: Matroid, n: Matroid, kind: str, tests: WebTests | None = None,
              deadline=None) -> tuple[WebRecord, ...]:
    if kind == "biweb":
        return find_biwebs(m, n, tests, deadline)
    if kind == "triweb":
        return find_triwebs(m, n, tests, deadline)
    if kind == "prism":
        return find_prisms(m, n, tests, deadline)
    raise InputError(f"unknown web kind {kind!r} (expected biweb, triweb or prism)")
