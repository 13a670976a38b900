"""Executable statement checkers over (M, N) corpora.

Every statement is evaluated as an implication: the hypothesis is computed
from kernel primitives (never assumed from another statement's conclusion),
and the outcome is one of

    vacuous   - the hypothesis never triggered,
    verified  - it triggered and every instance satisfied the conclusion,
    violated  - some instance failed; the witness is re-checkable,
    timeout   - the per-check deadline or an enumeration cap was hit.

A manifest may prefix a statement with `!` to skip hypothesis verification
and test the bare conclusion; that is the hook harness self-tests use to
produce a reachable `violated` outcome.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import connectivity, graphs, minors, structures
from .catalog import resolve, whirl
from .core import Matroid
from .errors import CheckTimeout
from .iso import are_isomorphic


class Deadline:
    """Cooperative time budget; long loops poll `check()`."""

    def __init__(self, seconds: float | None):
        self.expires = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.expires is not None and time.monotonic() > self.expires:
            raise CheckTimeout("per-check time budget exhausted")


@dataclass(frozen=True)
class TheoremReport:
    statement: str
    pair: str
    outcome: str  # vacuous | verified | violated | timeout
    witness: str
    millis: int

    def tsv(self) -> str:
        return "\t".join((self.statement, self.pair, self.outcome,
                          self.witness, str(self.millis)))


@dataclass(frozen=True)
class CriticalScene:
    """Recomputed premise flags for the extremal statements of a pair."""

    pair: str
    m_3connected: bool
    n_3connected: bool
    has_minor: bool
    rank_gap: int
    vnc_rank: int

    @property
    def holds(self) -> bool:
        return (self.m_3connected and self.n_3connected and self.has_minor
                and self.rank_gap >= 4 and self.vnc_rank == 3)


def _fmt(m: Matroid, elems) -> str:
    return ",".join(str(x) for x in m.sorted_labels(elems))


class PairContext:
    """Shared caches for one (M, N) pair; all checkers read through here."""

    def __init__(self, m: Matroid, n: Matroid, pair_name: str):
        self.m = m
        self.n = n
        self.pair_name = pair_name
        self.deadline = Deadline(None)
        self._vnc_sets: dict[frozenset, bool] = {}
        self._ncontract: dict[frozenset, bool] = {}
        self._contract: dict[frozenset, bool] = {}
        self._si: dict[tuple, Matroid] = {}
        self._vn: frozenset | None = None
        self._configs = None
        self._webs: dict[str, tuple] = {}
        self._fans = None
        self._rank3 = None
        self._sub_vnc: dict[tuple, frozenset] = {}

    # -- cached primitives ------------------------------------------------

    def si(self, elems, prefer=()) -> Matroid:
        key = (frozenset(elems), frozenset(prefer))
        got = self._si.get(key)
        if got is None:
            got = minors.si_after_contraction(self.m, key[0], prefer)
            self._si[key] = got
        return got

    def vnc_set(self, elems) -> bool:
        key = frozenset(elems)
        got = self._vnc_sets.get(key)
        if got is None:
            simplified = self.si(key)
            got = (connectivity.is_3connected(simplified)
                   and minors.has_minor(simplified, self.n) is not None)
            self._vnc_sets[key] = got
        return got

    def vnc_pair(self, x, p) -> bool:
        return self.vnc_set(frozenset((x, p)))

    def n_contractible(self, elems) -> bool:
        key = frozenset(elems)
        got = self._ncontract.get(key)
        if got is None:
            got = minors.is_n_contractible_set(self.m, self.n, key)
            self._ncontract[key] = got
        return got

    def contractible(self, elems) -> bool:
        key = frozenset(elems)
        got = self._contract.get(key)
        if got is None:
            got = minors.is_contractible_set(self.m, key)
            self._contract[key] = got
        return got

    @property
    def vn(self) -> frozenset:
        if self._vn is None:
            self._vn = frozenset(x for x in self.m.ground
                                 if self.vnc_set(frozenset((x,))))
        return self._vn

    def vn_of(self, sub: Matroid, key) -> frozenset:
        """Vertically contractible elements of a derived matroid, cached."""
        got = self._sub_vnc.get(key)
        if got is None:
            got = minors.vnc_elements(sub, self.n).elements
            self._sub_vnc[key] = got
        return got

    @property
    def configurations(self):
        if self._configs is None:
            self._configs = structures.find_configurations(
                self.m, self.n, vnc_pair=self.vnc_pair, deadline=self.deadline)
        return self._configs

    def webs(self, kind: str):
        got = self._webs.get(kind)
        if got is None:
            tests = structures.WebTests(vnc_set=self.vnc_set,
                                        n_contractible=self.n_contractible)
            got = structures.find_webs(self.m, self.n, kind, tests, self.deadline)
            self._webs[kind] = got
        return got

    @property
    def fan_patterns(self):
        if self._fans is None:
            self._fans = structures.fan_patterns(self.m)
        return self._fans

    @property
    def rank3_cocircuits(self):
        if self._rank3 is None:
            self._rank3 = structures.rank3_cocircuits(self.m)
        return self._rank3

    # -- hypothesis flags --------------------------------------------------

    def base_flags(self) -> dict:
        m, n = self.m, self.n
        return {
            "M3conn": connectivity.is_3connected(m),
            "N3conn": connectivity.is_3connected(n),
            "minor": minors.has_minor(m, n) is not None,
            "gap": m.full_rank - n.full_rank,
        }

    def failed_flags(self, flags: dict, need_gap: int = 0) -> list[str]:
        out = []
        if not flags["M3conn"]:
            out.append("M-not-3connected")
        if not flags["N3conn"]:
            out.append("N-not-3connected")
        if not flags["minor"]:
            out.append("no-N-minor")
        if flags["gap"] < need_gap:
            out.append(f"rank-gap={flags['gap']}<{need_gap}")
        return out

    def scene(self) -> CriticalScene:
        flags = self.base_flags()
        return CriticalScene(self.pair_name, flags["M3conn"], flags["N3conn"],
                             flags["minor"], flags["gap"], self.m.rank(self.vn))

    def critical_scene(self) -> tuple[bool, str]:
        flags = self.base_flags()
        failed = self.failed_flags(flags, need_gap=4)
        if failed:
            return False, ";".join(failed)
        rk = self.m.rank(self.vn)
        if rk != 3:
            return False, f"rank(vnc-elements)={rk}!=3"
        return True, "critical-scene"


# -- individual checkers ----------------------------------------------------
# Each returns (outcome, witness).  `assume` skips the hypothesis gate and
# evaluates the conclusion directly.

def check_t1(ctx: PairContext, k: int, assume: bool = False):
    flags = ctx.base_flags()
    failed = ctx.failed_flags(flags, need_gap=k)
    if not (ctx.n.is_simple() or ctx.m.full_rank != 2):
        failed.append("N-not-simple-and-rank(M)=2")
    if failed and not assume:
        note = ""
        if ctx.m.size <= 10:
            note = f" vnc-elements=[{_fmt(ctx.m, ctx.vn)}]"
        return "vacuous", "hypothesis-unsatisfied:" + ";".join(failed) + note
    vn = ctx.vn
    if ctx.m.rank(vn) >= k:
        chosen = []
        mask = 0
        for x in ctx.m.sorted_labels(vn):
            bit = 1 << ctx.m.index_of(x)
            if ctx.m.rank_mask(mask | bit) > ctx.m.rank_mask(mask):
                chosen.append(x)
                mask |= bit
            if len(chosen) == k:
                break
        return "verified", f"independent-vnc-set=[{','.join(map(str, chosen))}]"
    return "violated", (f"rank(vnc-elements)={ctx.m.rank(vn)}<k={k};"
                        f" vnc-elements=[{_fmt(ctx.m, vn)}]")


def check_cw32(ctx: PairContext, assume: bool = False):
    flags = ctx.base_flags()
    failed = ctx.failed_flags(flags, need_gap=3)
    if failed and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + ";".join(failed)
    vn = ctx.vn
    checked = 0
    example = ""
    for x in ctx.m.sorted_labels(vn):
        ctx.deadline.check()
        found = None
        for y in ctx.m.sorted_labels(vn):
            if y == x or not ctx.vnc_pair(x, y):
                continue
            for z in ctx.m.sorted_labels(vn):
                if z in (x, y):
                    continue
                if ctx.m.rank((x, y, z)) == 3:
                    found = (x, y, z)
                    break
            if found:
                break
        if found is None:
            return "violated", f"x={x} has no (y,z); vnc-elements=[{_fmt(ctx.m, vn)}]"
        checked += 1
        if not example:
            example = "(" + ",".join(map(str, found)) + ")"
    if checked == 0:
        return "vacuous", "no-vertically-contractible-elements"
    return "verified", f"checked={checked} first={example}"


def check_t2(ctx: PairContext, assume: bool = False):
    flags = ctx.base_flags()
    failed = ctx.failed_flags(flags, need_gap=4)
    if ctx.m.full_rank < 5:
        failed.append(f"rank(M)={ctx.m.full_rank}<5")
    if not failed:
        rk = ctx.m.rank(ctx.vn)
        if rk > 3:
            failed.append(f"rank(vnc-elements)={rk}>3")
    if failed and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + ";".join(failed)
    vn = ctx.vn
    rk = ctx.m.rank(vn)
    gap = flags["gap"]
    triwebs = ctx.webs("triweb")
    a_hits = [w for w in triwebs if frozenset(w.edges) == vn]
    biwebs = ctx.webs("biweb")
    b_hits = [w for w in biwebs
              if frozenset((w.edges[0], w.edges[1], w.triangle_p[2])) == vn]
    case = "a" if a_hits else ("b" if b_hits else "none")
    detail = f"rank(vnc)={rk} case={case}"
    if case == "none":
        return "violated", detail + " no-triweb-or-biweb-matches-vnc-set"
    if gap >= 5 and not a_hits:
        return "violated", detail + f" gap={gap}>=5-requires-case-a"
    if gap >= 6 and not ctx.webs("prism"):
        return "violated", detail + f" gap={gap}>=6-requires-prism"
    wit = (a_hits or b_hits)[0]
    return "verified", detail + " " + wit.summary()


def check_t2cor(ctx: PairContext, assume: bool = False):
    flags = ctx.base_flags()
    failed = ctx.failed_flags(flags, need_gap=4)
    if ctx.m.full_rank < 5:
        failed.append(f"rank(M)={ctx.m.full_rank}<5")
    if not failed and ctx.m.rank(ctx.vn) > 3:
        failed.append("rank(vnc-elements)>3")
    if failed and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + ";".join(failed)
    if ctx.webs("prism"):
        return "vacuous", "prism-present"
    vn = ctx.vn
    b_hits = [w for w in ctx.webs("biweb")
              if frozenset((w.edges[0], w.edges[1], w.triangle_p[2])) == vn]
    if not b_hits:
        return "vacuous", "case-b-never-triggered"
    for w in b_hits:
        five = w.elements()
        ok = True
        for x in ctx.m.sorted_labels(vn):
            sub = ctx.si((x,), prefer=five)
            sub_vn = ctx.vn_of(sub, (x, frozenset(five)))
            if not sub_vn <= five:
                ok = False
                break
        if ok:
            return "verified", f"biweb {w.summary()} bounds-vnc-after-contraction"
    return "violated", "no-case-b-biweb-bounds-vnc-of-si(M/x)"


def check_t4(ctx: PairContext, assume: bool = False):
    g = graphs.from_matroid(ctx.m)
    h = graphs.from_matroid(ctx.n)
    if g is None or h is None:
        return "vacuous", "hypothesis-unsatisfied:not-graphic-backends"
    failed = []
    if not g.is_simple() or not graphs.is_3connected_graph(g):
        failed.append("G-not-simple-3connected")
    if not h.is_simple() or not graphs.is_3connected_graph(h):
        failed.append("H-not-simple-3connected")
    if not graphs.has_graph_minor(g, h, ctx.deadline):
        failed.append("no-H-minor")
    if g.nv - h.nv < 6:
        failed.append(f"vertex-gap={g.nv - h.nv}<6")
    if failed and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + ";".join(failed)
    good = []
    for lab in g.edge_labels():
        ctx.deadline.check()
        gx = graphs.simplify_graph(graphs.contract_edge(g, lab))
        if graphs.is_3connected_graph(gx) and graphs.has_graph_minor(gx, h, ctx.deadline):
            good.append(lab)
    import itertools as _it

    for combo in _it.combinations(good, 4):
        if ctx.m.rank(combo) == 4:
            return "verified", f"4-independent-contractible-edges=[{','.join(map(str, combo))}]"
    return "violated", f"good-edges=[{','.join(map(str, good))}] contain-no-4-forest"


# -- configuration lemmas -----------------------------------------------


def _pair_gate(ctx: PairContext, assume: bool):
    flags = ctx.base_flags()
    failed = ctx.failed_flags(flags)
    if failed and not assume:
        return "hypothesis-unsatisfied:" + ";".join(failed)
    return None


def check_w36(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    vn = ctx.vn
    checked = 0
    for x in ctx.m.sorted_labels(vn):
        for p in ctx.m.ground:
            if p == x or p in vn:
                continue
            ctx.deadline.check()
            if not ctx.vnc_pair(x, p):
                continue
            checked += 1
            if not any(cfg.p == p and x in cfg.cstar for cfg in ctx.configurations):
                return "violated", f"x={x} p={p}: no configuration contains x"
    if checked == 0:
        return "vacuous", "no (x,p) with x,{x,p} contractible and p not"
    return "verified", f"triggered={checked}"


def check_w37a(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    checked = 0
    for cfg in ctx.configurations:
        xs = ctx.m.sorted_labels(cfg.cstar)
        base = ctx.si((cfg.p, xs[0]))
        for y in xs[1:]:
            ctx.deadline.check()
            other = ctx.si((cfg.p, y))
            checked += 1
            if not are_isomorphic(base, other):
                return "violated", cfg.summary() + f" si(M/p,{xs[0]}) != si(M/p,{y})"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


def check_w37b(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    checked = 0
    for cfg in ctx.configurations:
        for x in ctx.m.sorted_labels(cfg.cstar):
            ctx.deadline.check()
            checked += 1
            if not ctx.vnc_pair(x, cfg.p):
                return "violated", cfg.summary() + f" pair({x},{cfg.p}) not contractible"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


def check_w38(ctx: PairContext, assume: bool = False):
    # Statement about M alone; N plays no role.
    if not connectivity.is_3connected(ctx.m) and not assume:
        return "vacuous", "hypothesis-unsatisfied:M-not-3connected"
    import itertools as _it

    m = ctx.m
    checked = 0
    for cstar in ctx.rank3_cocircuits:
        cl = m.closure(cstar)
        for x in m.sorted_labels(cstar):
            ctx.deadline.check()
            rest = m.sorted_labels(cl - {x})
            mx = m.contract((x,))
            has_triangle = False
            for tri in _it.combinations(rest, 3):
                if mx.rank(tri) == 2 and all(
                        mx.rank(pair) == 2 for pair in _it.combinations(tri, 2)):
                    has_triangle = True
                    break
            if not has_triangle:
                continue
            checked += 1
            if not connectivity.is_3connected(ctx.si((x,))):
                return "violated", f"C*=[{_fmt(m, cstar)}] x={x}: si(M/x) not 3-connected"
    if checked == 0:
        return "vacuous", "no rank-3 cocircuit with a contracted triangle in its closure"
    return "verified", f"triggered={checked}"


def check_melo(ctx: PairContext, assume: bool = False):
    if not connectivity.is_3connected(ctx.m) and not assume:
        return "vacuous", "hypothesis-unsatisfied:M-not-3connected"
    m = ctx.m
    checked = 0
    for t in m.triangles():
        for tstar in m.triads():
            diff = tstar - t
            if len(diff) != 1:
                continue
            ctx.deadline.check()
            (x,) = diff
            checked += 1
            if not connectivity.is_3connected(ctx.si((x,))):
                return "violated", (f"T=[{_fmt(m, t)}] T*=[{_fmt(m, tstar)}]"
                                    f" x={x}: si(M/x) not 3-connected")
    if checked == 0:
        return "vacuous", "no triangle meets a triad in two elements"
    return "verified", f"triggered={checked}"


def check_4circuit(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    # "removable" is read as "vertically contractible"; see the docs.
    m = ctx.m
    checked = 0
    for cfg in ctx.configurations:
        h = m.restrict(set(cfg.cstar) | {cfg.p})
        four_circuits = [h.labels_of(cm) for cm in h.circuit_masks()
                         if cm.bit_count() == 4]
        for circ in four_circuits:
            for x in m.sorted_labels(circ & cfg.cstar):
                checked += 1
                if x not in ctx.vn:
                    return "violated", cfg.summary() + f" x={x} in a 4-circuit but not contractible"
        if cfg.connected:
            checked += 1
            rk = m.rank(ctx.vn & cfg.cstar)
            if rk != 3:
                return "violated", cfg.summary() + f" connected but rank(vnc&C*)={rk}"
    if checked == 0:
        return "vacuous", "no-4-circuit-or-connected-configuration"
    return "verified", f"triggered={checked} reading=vertically-contractible"


def check_coloop(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    checked = 0
    for cfg in ctx.configurations:
        if cfg.connected:
            continue
        checked += 1
        if cfg.coloop not in ctx.vn:
            return "violated", cfg.summary() + " coloop not vertically contractible"
    if checked == 0:
        return "vacuous", "no-disconnected-configurations"
    return "verified", f"triggered={checked}"


def check_cfg_dichotomy(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    checked = 0
    for cfg in ctx.configurations:
        checked += 1
        if not cfg.decomposition_ok:
            return "violated", cfg.summary() + " classification-dichotomy-failed"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


def check_rank3pair(ctx: PairContext, assume: bool = False):
    m = ctx.m
    if (m.full_rank < 4 or not connectivity.is_3connected(m)) and not assume:
        return "vacuous", "hypothesis-unsatisfied:needs-3connected-rank>=4"
    cocs = ctx.rank3_cocircuits
    closures = [m.closure(c) for c in cocs]
    checked = 0
    for i in range(len(cocs)):
        for j in range(i + 1, len(cocs)):
            checked += 1
            if closures[i] == closures[j]:
                return "violated", (f"C1=[{_fmt(m, cocs[i])}] C2=[{_fmt(m, cocs[j])}]"
                                    " share a closure")
    if checked == 0:
        return "vacuous", f"rank-3-cocircuits={len(cocs)}"
    return "verified", f"pairs-checked={checked}"


def check_same_coloop_line(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if not gate and ctx.m.full_rank < 4 and not assume:
        gate = "hypothesis-unsatisfied:rank<4"
    if gate:
        return "vacuous", gate
    disc = [c for c in ctx.configurations if not c.connected]
    checked = 0
    for i in range(len(disc)):
        for j in range(i + 1, len(disc)):
            checked += 1
            a, b = disc[i], disc[j]
            if a.coloop == b.coloop and a.line == b.line:
                return "violated", a.summary() + " and " + b.summary()
    if checked == 0:
        return "vacuous", f"disconnected-configurations={len(disc)}"
    return "verified", f"pairs-checked={checked}"


def _configuration_exists(ctx: PairContext, cstar: frozenset, y) -> bool:
    m = ctx.m
    if y not in m.closure(cstar) or y in cstar:
        return False
    return any(ctx.vnc_pair(x, y) for x in m.sorted_labels(cstar))


def check_second_cfg(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    checked = 0
    for cfg in ctx.configurations:
        if cfg.connected:
            continue
        line, coloop = cfg.line, cfg.coloop
        # y ranges over the line points other than p: the attachment point's
        # own case is covered by the original configuration and carries no
        # second witness avoiding cl(D*).
        outside = line - (ctx.vn | {cfg.p})
        if len(outside) < 2:
            continue
        for y in m.sorted_labels(outside):
            ctx.deadline.check()
            checked += 1
            ok = False
            for dstar in ctx.rank3_cocircuits:
                if not (line - {y}) <= dstar:
                    continue
                if coloop in m.closure(dstar):
                    continue
                if _configuration_exists(ctx, dstar, y):
                    ok = True
                    break
            if not ok:
                return "violated", cfg.summary() + f" y={y}: no second configuration"
    if checked == 0:
        return "vacuous", "side-conditions-never-met"
    return "verified", f"triggered={checked}"


def check_third_cfg(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    checked = 0
    for cfg in ctx.configurations:
        if cfg.connected:
            continue
        for y in m.sorted_labels(cfg.line - ctx.vn):
            ctx.deadline.check()
            checked += 1
            ok = any((cfg.line - {y}) <= dstar and _configuration_exists(ctx, dstar, y)
                     for dstar in ctx.rank3_cocircuits)
            if not ok:
                return "violated", cfg.summary() + f" y={y}: no covering configuration"
    if checked == 0:
        return "vacuous", "no-disconnected-configuration-with-uncontractible-line-point"
    return "verified", f"triggered={checked}"


def check_triangle_cor(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    cfgs = ctx.configurations
    if not cfgs or not all((not c.connected) and c.minimum for c in cfgs):
        if not assume:
            return "vacuous", "configurations-not-all-disconnected-and-minimum"
    m = ctx.m
    triads = set(m.triads())
    checked = 0
    for cfg in cfgs:
        if cfg.connected or cfg.line is None or len(cfg.line) != 3:
            continue
        x1, x2 = m.sorted_labels(cfg.line - {cfg.p})
        sides = []
        for xi, xj in ((x1, x2), (x2, x1)):
            if xi in ctx.vn:
                sides.append(None)
                continue
            checked += 1
            ys = frozenset(y for y in ctx.vn - {cfg.coloop}
                           if frozenset((xj, y, cfg.p)) in triads)
            if not ys:
                return "violated", cfg.summary() + f" x_i={xi}: no triad partner in vnc set"
            sides.append(ys)
        if sides.count(None) == 0 and sides[0] == sides[1] and len(sides[0]) == 1:
            return "violated", cfg.summary() + " partners cannot be chosen distinct"
    if checked == 0:
        return "vacuous", "no-minimum-disconnected-configuration-with-uncontractible-line-point"
    return "verified", f"triggered={checked}"


def check_novolema(ctx: PairContext, assume: bool = False):
    gate = _pair_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    cfgs = ctx.configurations
    if any(c.connected for c in cfgs) and not assume:
        return "vacuous", "connected-configuration-exists"
    checked = 0
    for cfg in cfgs:
        if cfg.connected or cfg.line is None:
            continue
        checked += 1
        lhs = ctx.m.rank(ctx.vn)
        rhs = len(cfg.line - ctx.vn)
        if lhs < rhs:
            return "violated", cfg.summary() + f" rank(vnc)={lhs} < |line-vnc|={rhs}"
    if checked == 0:
        return "vacuous", "no-disconnected-configurations"
    return "verified", f"triggered={checked}"


# -- fan patterns -----------------------------------------------------------


def _fan_gate(ctx: PairContext, assume: bool):
    m = ctx.m
    if assume:
        return None
    if not connectivity.is_3connected(m):
        return "hypothesis-unsatisfied:M-not-3connected"
    if m.size == 6 and m.full_rank == 3 and are_isomorphic(m, resolve("wheel:3")):
        return "hypothesis-unsatisfied:M-is-rank3-wheel"
    return None


def check_3fan_a(ctx: PairContext, assume: bool = False):
    gate = _fan_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    checked = 0
    for x1, x2, p1, p2, p3 in ctx.fan_patterns:
        if m.rank((x1, x2, p1, p2, p3)) != 3:
            continue
        checked += 1
        if not are_isomorphic(m, whirl(3)):
            return "violated", f"pattern=({x1},{x2},{p1},{p2},{p3}) rank 3 but M is not the rank-3 whirl"
    if checked == 0:
        return "vacuous", f"patterns={len(ctx.fan_patterns)} none-of-rank-3"
    return "verified", f"triggered={checked}"


def check_3fan_b(ctx: PairContext, assume: bool = False):
    gate = _fan_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    checked = 0
    for x1, x2, p1, p2, p3 in ctx.fan_patterns:
        checked += 1
        t = frozenset((p1, p2, p3))
        for tri in m.triangles():
            if p3 in tri and tri != t:
                return "violated", f"pattern=({x1},{x2},{p1},{p2},{p3}): p3 in extra triangle [{_fmt(m, tri)}]"
    if checked == 0:
        return "vacuous", "no-fan-patterns"
    return "verified", f"triggered={checked}"


def check_3fan_c(ctx: PairContext, assume: bool = False):
    gate = _fan_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    triads = set(m.triads())
    checked = 0
    for x1, x2, p1, p2, p3 in ctx.fan_patterns:
        third = [x for x in m.ground if x not in (p1, p2)
                 and frozenset((p1, p2, x)) in triads]
        for x3 in third:
            ctx.deadline.check()
            checked += 1
            bad = [x for x in (x1, x2, x3) if not ctx.contractible((x,))]
            if bad:
                return "violated", (f"pattern=({x1},{x2},{p1},{p2},{p3}) x3={x3}:"
                                    f" not contractible: {bad}")
            if not m.contract((p1, p2, p3)).is_simple():
                return "violated", (f"pattern=({x1},{x2},{p1},{p2},{p3}) x3={x3}:"
                                    " M/T not simple")
    if checked == 0:
        return "vacuous", "no-fan-pattern-extends-by-a-third-triad"
    return "verified", f"triggered={checked}"


def check_3fan_d(ctx: PairContext, assume: bool = False):
    gate = _fan_gate(ctx, assume)
    if gate:
        return "vacuous", gate
    m = ctx.m
    triads = set(m.triads())
    checked = 0
    for x1, x2, p1, p2, p3 in ctx.fan_patterns:
        hyp = ctx.vnc_set(frozenset((x1, p1))) or ctx.vnc_set(frozenset((x2, p2)))
        if not hyp:
            continue
        ctx.deadline.check()
        checked += 1
        conds = structures._biweb_conditions(
            structures.WebTests(ctx.vnc_set, ctx.n_contractible), x1, x2, p1, p2, p3)
        if not (conds["BW1"] and conds["BW2"] and conds["BW3"]):
            bad = [k for k in ("BW1", "BW2", "BW3") if not conds[k]]
            return "violated", f"pattern=({x1},{x2},{p1},{p2},{p3}) fails {bad}"
        third = [x for x in m.ground if x not in (p1, p2, p3, x1, x2)
                 and frozenset((p1, p2, x)) in triads]
        for x3 in third:
            tconds = structures._triweb_conditions(
                structures.WebTests(ctx.vnc_set, ctx.n_contractible),
                (x1, x2, x3), (p1, p2, p3))
            if not (tconds["TW1"] and tconds["TW2"]):
                bad = [k for k in tconds if not tconds[k]]
                return "violated", f"pattern=({x1},{x2},{p1},{p2},{p3}) x3={x3} fails {bad}"
    if checked == 0:
        return "vacuous", "no-fan-pattern-with-contractible-edge-pair"
    return "verified", f"triggered={checked}"


# -- critical scenes ---------------------------------------------------------


def check_in_cl(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if not scene and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + why
    checked = 0
    for cfg in ctx.configurations:
        if not cfg.connected:
            continue
        checked += 1
        cl = ctx.m.closure(cfg.cstar)
        if not ctx.vn <= cl:
            return "violated", cfg.summary() + f" vnc-elements escape cl(C*)"
    if checked == 0:
        return "vacuous", "no-connected-configurations"
    return "verified", f"triggered={checked}"


def check_nocircuit(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if not scene and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + why
    m = ctx.m
    checked = 0
    for cfg in ctx.configurations:
        checked += 1
        sub = m.restrict(cfg.cstar)
        for cm in sub.circuit_masks():
            circ = sub.labels_of(cm)
            if circ & ctx.vn:
                return "violated", cfg.summary() + f" circuit [{_fmt(m, circ)}] meets vnc set"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


def check_min_connected(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if not scene and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + why
    checked = 0
    for cfg in ctx.configurations:
        if not cfg.connected:
            continue
        checked += 1
        if not cfg.minimum:
            return "violated", cfg.summary() + " connected-but-not-minimum"
    if checked == 0:
        return "vacuous", "no-connected-configurations"
    return "verified", f"triggered={checked}"


def check_disconnected(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if (not scene or ctx.m.full_rank < 5) and not assume:
        why = why if not scene else f"rank(M)={ctx.m.full_rank}<5"
        return "vacuous", "hypothesis-unsatisfied:" + why
    checked = 0
    for cfg in ctx.configurations:
        checked += 1
        if cfg.connected:
            return "violated", cfg.summary() + " connected-configuration-exists"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


def check_minimum(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if (not scene or ctx.m.full_rank < 5) and not assume:
        why = why if not scene else f"rank(M)={ctx.m.full_rank}<5"
        return "vacuous", "hypothesis-unsatisfied:" + why
    checked = 0
    for cfg in ctx.configurations:
        checked += 1
        if cfg.connected or not cfg.minimum:
            return "violated", cfg.summary() + " not-disconnected-and-minimum"
    if checked == 0:
        return "vacuous", "no-configurations"
    return "verified", f"triggered={checked}"


SCENE_LEMMAS = ("C-INCL", "L-NOCIRCUIT", "L-MINCONN", "L-DISCONN",
                "L-MINIMUM", "L-PRISM")


def check_scene_lemmas(ctx: PairContext, assume: bool = False) -> list[tuple[str, str, str]]:
    """All critical-scene lemma checks for one pair: (id, outcome, witness)."""
    checkers = {
        "C-INCL": check_in_cl,
        "L-NOCIRCUIT": check_nocircuit,
        "L-MINCONN": check_min_connected,
        "L-DISCONN": check_disconnected,
        "L-MINIMUM": check_minimum,
        "L-PRISM": check_prism_lemma,
    }
    out = []
    for sid in SCENE_LEMMAS:
        outcome, witness = checkers[sid](ctx, assume)
        out.append((sid, outcome, witness))
    return out


def check_prism_lemma(ctx: PairContext, assume: bool = False):
    scene, why = ctx.critical_scene()
    if not scene and not assume:
        return "vacuous", "hypothesis-unsatisfied:" + why
    m = ctx.m
    checked = 0
    for cfg in ctx.configurations:
        if cfg.connected or cfg.line is None or len(cfg.line) != 3:
            continue
        x1 = cfg.coloop
        line = cfg.line
        sub = ctx.si((x1,), prefer=line)  # ground chosen to keep line members
        sub_vn = ctx.vn_of(sub, (x1, frozenset(line)))
        candidates = sub_vn - (ctx.vn | line)
        for q1 in m.sorted_labels(candidates):
            ctx.deadline.check()
            checked += 1
            hit = False
            for w in ctx.webs("prism"):
                tri_p, tri_q = set(w.triangle_p), set(w.triangle_q)
                if x1 in w.edges and (
                        (tri_p == set(line) and q1 in tri_q)
                        or (tri_q == set(line) and q1 in tri_p)):
                    hit = True
                    break
            if not hit:
                return "violated", cfg.summary() + f" q1={q1}: no matching prism"
    if checked == 0:
        return "vacuous", "preconditions-never-met"
    return "verified", f"triggered={checked}"
