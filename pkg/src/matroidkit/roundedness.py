"""Finite roundedness decision procedures at desk scale.

For a finite class F of 3-connected matroids and an ambient class, the
pinned-minor property is tested on every 3-connected ambient matroid with an
F-minor up to a rank bound of rbar(F) + k + floor((k-1)/2) -- truncated by
user caps, so the decision reported is `rounded-within-caps`, never the
unbounded statement.

The GF(p) generator grows matrices from representations of the members by
single-column extensions and dual-side coextensions, pruning states that are
not connected as matroids.  Completeness within caps rests on two standard
facts: a connected minor of a connected matroid links to it through a chain
of connected single-element extensions/coextensions, and binary or ternary
matroids are uniquely representable, so column appends on one representation
realize every abstract extension.  For p >= 5 representations need not be
unique and the census may undercount; the report carries the caveat.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from . import gf
from .connectivity import is_3connected, is_connected
from .core import Matroid, _mask_indices
from .errors import CheckTimeout, InputError
from .formats import ClassSpec
from .iso import are_isomorphic
from .minors import has_minor
from .theorems import Deadline


def rank_bound(rbar_value: int, k: int) -> int:
    if k not in (1, 2, 3):
        raise InputError("k must be 1, 2 or 3")
    return rbar_value + k + (k - 1) // 2


def minimal_members(members: list[tuple[str, Matroid]]) -> list[tuple[str, Matroid]]:
    """Members with no other member isomorphic to a proper minor."""
    out = []
    for name, m in members:
        dominated = False
        for other_name, other in members:
            if other.size < m.size and has_minor(m, other) is not None:
                dominated = True
                break
        if not dominated:
            out.append((name, m))
    return out


def rbar(members: list[tuple[str, Matroid]]) -> int:
    if not members:
        raise InputError("rbar needs a nonempty class")
    return max(m.full_rank for _, m in minimal_members(members))


def rbar_dual(members: list[tuple[str, Matroid]]) -> int:
    return rbar([(name, m.dual()) for name, m in members])


# -- representations ---------------------------------------------------------


def linear_representation(m: Matroid, p: int) -> list[tuple[int, ...]]:
    """Columns over GF(p) representing M, full row rank; raises when no
    construction is known for the backend."""
    gf.check_prime(p)
    desc = m.describe()
    kind = desc[0]
    if kind == "linear":
        if desc[1] != p:
            raise InputError(f"matroid is represented over gf{desc[1]}, not gf{p}")
        return _trim_rows(list(desc[2]), p)
    if kind == "graph":
        _, nv, endpoints = desc
        cols = []
        for u, v in endpoints:
            col = [0] * max(nv - 1, 1)
            if u:
                col[u - 1] = (col[u - 1] + 1) % p
            if v:
                col[v - 1] = (col[v - 1] - 1) % p
            cols.append(tuple(col))
        return _trim_rows(cols, p)
    if kind == "uniform":
        _, r, n = desc
        if r == 0:
            raise InputError("rank-0 matroids have no nonzero representation")
        if r == n:
            return [tuple(1 if j == i else 0 for j in range(r)) for i in range(n)]
        if r == 1:
            return [(1,)] * n
        if r == n - 1:
            # identity columns plus the all-ones column: the single circuit
            # is the whole ground set, over any field
            cols = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
            cols.append((1,) * r)
            return cols
        if n > p + 1:
            raise InputError(f"no uniform({r},{n}) representation over gf{p}")
        cols = [tuple(pow(t, i, p) for i in range(r)) for t in range(min(n, p))]
        if n == p + 1:
            col = [0] * r
            col[r - 1] = 1
            cols.append(tuple(col))
        return cols
    if kind == "dual":
        inner_cols = linear_representation(desc[1], p)
        rows = _cols_to_rows(inner_cols)
        null = gf.nullspace(rows, p, len(inner_cols))
        if not null:
            raise InputError("dual has rank 0; no nonzero representation")
        return _rows_to_cols(null, len(inner_cols))
    if kind == "minor":
        _, inner, cmask, dmask = desc
        inner_cols = linear_representation(inner, p)
        return _minor_of_columns(inner_cols, cmask, dmask, p)
    raise InputError(f"no known gf{p} representation for backend {kind!r}")


def _cols_to_rows(cols):
    if not cols:
        return []
    return [tuple(c[i] for c in cols) for i in range(len(cols[0]))]


def _rows_to_cols(rows, ncols):
    return [tuple(r[j] for r in rows) for j in range(ncols)]


def _trim_rows(cols, p):
    rows = gf.rref(_cols_to_rows(cols), p)
    if not rows:
        raise InputError("zero-rank representation")
    return _rows_to_cols(rows, len(cols))


def _minor_of_columns(cols, cmask, dmask, p):
    rows = [list(r) for r in gf.rref(_cols_to_rows(cols), p)]
    used_rows: list[int] = []
    for ci in _mask_indices(cmask):
        pivot = None
        for ri in range(len(rows)):
            if ri not in used_rows and rows[ri][ci] % p:
                pivot = ri
                break
        if pivot is None:
            raise InputError("contracted set is dependent in the representation")
        inv = gf.inverse(rows[pivot][ci] % p, p)
        rows[pivot] = [(x * inv) % p for x in rows[pivot]]
        for ri in range(len(rows)):
            if ri != pivot and rows[ri][ci] % p:
                c = rows[ri][ci]
                rows[ri] = [(a - c * b) % p for a, b in zip(rows[ri], rows[pivot])]
        used_rows.append(pivot)
    gone = cmask | dmask
    keep_cols = [i for i in range(len(cols)) if not (gone >> i) & 1]
    keep_rows = [ri for ri in range(len(rows)) if ri not in used_rows]
    out = [tuple(rows[ri][i] for ri in keep_rows) for i in keep_cols]
    if not keep_rows:
        raise InputError("contraction used all rows; rank-0 minor")
    return out


def matroid_of_columns(cols, p) -> Matroid:
    return Matroid.linear(p, [(f"e{i + 1}", c) for i, c in enumerate(cols)])


def certainly_not_representable(m: Matroid, p: int) -> bool:
    """True only when non-representability over GF(p) is certain.  Rank-2
    uniform matroids (and their duals) need n <= p+1 exactly; skipping such
    members is sound because no GF(p) matroid can then carry them as minors."""
    desc = m.describe()
    if desc[0] != "uniform":
        return False
    _, r, n = desc
    if r == 2 or n - r == 2:
        return n > p + 1 and r not in (0, 1, n - 1, n)
    return False


# -- the extension enumerator -------------------------------------------------


@dataclass
class TestSetItem:
    matroid: Matroid
    provenance: str
    in_fk: bool
    in_fk_dual: bool


@dataclass
class Census:
    states: int = 0
    items: int = 0
    by_shape: Counter = field(default_factory=Counter)  # (elements, rank) -> count
    partial: bool = False
    partial_reasons: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)  # sound member skips

    def note_partial(self, reason: str):
        self.partial = True
        if reason not in self.partial_reasons:
            self.partial_reasons.append(reason)


def _invariant(m: Matroid):
    spectrum = Counter(cm.bit_count() for cm in m.circuit_masks())
    return (m.size, m.full_rank, tuple(sorted(spectrum.items())))


class _IsoCatalog:
    """Isomorphism-deduplicated collection with invariant prefilter."""

    def __init__(self):
        self.buckets: dict[tuple, list[Matroid]] = {}

    def add(self, m: Matroid) -> bool:
        """True if m was new (no isomorphic member present)."""
        key = _invariant(m)
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if are_isomorphic(m, other):
                return False
        bucket.append(m)
        return True


def _normalize_key(cols, p):
    return tuple(sorted(gf.normalize_point(c, p) for c in cols))


def enumerate_gf_states(spec: ClassSpec, p: int, rank_ceiling: int,
                        deadline: Deadline, census: Census):
    """All connected GF(p) matroids with an F-minor inside the caps, up to
    isomorphism, grown from member representations.  Yields
    (matroid, columns, provenance)."""
    caps = spec.caps
    seen_keys: set = set()
    catalog = _IsoCatalog()
    frontier: list[tuple[list[tuple[int, ...]], str]] = []
    out = []
    for name, member in spec.members:
        try:
            cols = linear_representation(member, p)
        except InputError:
            if certainly_not_representable(member, p):
                # Sound skip: minors of GF(p) matroids are GF(p) matroids,
                # so this member contributes nothing to the test set.
                census.skipped.append(f"{name}: not gf{p}-representable")
            else:
                census.note_partial(
                    f"member {name}: no gf{p} representation construction known")
            continue
        key = (len(cols[0]), _normalize_key(cols, p))
        if key in seen_keys:
            continue
        seen_keys.add(key)
        m = matroid_of_columns(cols, p)
        if m.full_rank > rank_ceiling or m.size > caps.max_elements:
            census.note_partial(f"seed {name} exceeds caps")
            continue
        if catalog.add(m):
            out.append((m, cols, name))
            frontier.append((cols, name))
            census.states += 1
    idx = 0
    while idx < len(frontier):
        try:
            deadline.check()
        except CheckTimeout:
            census.note_partial("time budget exhausted during enumeration")
            break
        cols, prov = frontier[idx]
        idx += 1
        n = len(cols)
        if n >= caps.max_elements:
            census.note_partial("element cap reached while extensions remained")
            continue
        r = len(cols[0])
        candidates = []
        for pt in gf.projective_points(r, p):
            candidates.append((cols + [pt], f"{prov}+e"))
        if r < rank_ceiling and n - r >= 1:
            dual_rows = gf.nullspace(_cols_to_rows(cols), p, n)
            dual_cols = _rows_to_cols(dual_rows, n)
            for pt in gf.projective_points(n - r, p):
                ext = dual_cols + [pt]
                back_rows = gf.nullspace(_cols_to_rows(ext), p, n + 1)
                candidates.append((_rows_to_cols(back_rows, n + 1), f"{prov}+c"))
        for new_cols, new_prov in candidates:
            key = (len(new_cols[0]), _normalize_key(new_cols, p))
            if key in seen_keys:
                continue
            seen_keys.add(key)
            m = matroid_of_columns(new_cols, p)
            if not is_connected(m):
                # Safe to drop: a connected minor of a connected matroid is
                # linked to it by a chain of connected single-element
                # extensions and coextensions, so every connected target
                # stays reachable through connected states.
                continue
            if not catalog.add(m):
                continue
            census.states += 1
            out.append((m, new_cols, new_prov))
            frontier.append((new_cols, new_prov))
    return out


# -- graph ambient ------------------------------------------------------------


def enumerate_graphic_states(spec: ClassSpec, rank_ceiling: int,
                             deadline: Deadline, census: Census,
                             dualize: bool = False):
    """All 3-connected graphic (or cographic) matroids within caps, up to
    isomorphism, by scanning labeled simple graphs on <= rank+1 vertices."""
    caps = spec.caps
    max_v = min(rank_ceiling + 1, 6)
    if rank_ceiling + 1 > max_v:
        census.note_partial(f"graph enumeration capped at {max_v} vertices")
    catalog = _IsoCatalog()
    out = []
    for nv in range(4, max_v + 1):
        pairs = list(itertools.combinations(range(nv), 2))
        for edge_bits in range(1 << len(pairs)):
            if edge_bits.bit_count() > caps.max_elements:
                continue
            try:
                deadline.check()
            except CheckTimeout:
                census.note_partial("time budget exhausted during enumeration")
                return out
            edges = [(f"e{i}", *pairs[i]) for i in _mask_indices(edge_bits)]
            if len(edges) < nv:  # cannot be 3-connected: too few edges
                continue
            m = Matroid.graphic(nv, edges)
            if dualize:
                m = m.dual()
            if m.full_rank > rank_ceiling or not is_3connected(m):
                continue
            if catalog.add(m):
                census.states += 1
                out.append((m, None, f"{'cograph' if dualize else 'graph'}v{nv}#{edge_bits}"))
    return out


# -- pinned-minor checks -------------------------------------------------------


def check_3kr(m: Matroid, members, k: int, deadline: Deadline | None = None):
    """First k-subset X with no F-minor containing X, else None."""
    ground = m.ground
    for combo in itertools.combinations(ground, k):
        if deadline is not None:
            deadline.check()
        if not any(has_minor(m, f, pinned=combo) is not None for _, f in members):
            return frozenset(combo)
    return None


def check_3klr(m: Matroid, members, k: int, l: int, deadline: Deadline | None = None):
    """As check_3kr but only over X with rank(X) <= l."""
    ground = m.ground
    for combo in itertools.combinations(ground, k):
        if m.rank(combo) > l:
            continue
        if deadline is not None:
            deadline.check()
        if not any(has_minor(m, f, pinned=combo) is not None for _, f in members):
            return frozenset(combo)
    return None


# -- decision ------------------------------------------------------------------


@dataclass
class RoundedDecision:
    outcome: str  # rounded-within-caps | violation | inconclusive
    spec_name: str
    k: int
    l: int | None
    bound: int
    bound_dual: int
    census: Census
    items: list[TestSetItem]
    violation: tuple | None  # (provenance, sorted X labels)
    notes: list[str]

    def render(self) -> str:
        lines = [f"class {self.spec_name}: k={self.k}"
                 + (f" l={self.l}" if self.l is not None else "")]
        lines.append(f"rank bound rbar+k+floor((k-1)/2) = {self.bound}"
                     f" (dual side {self.bound_dual})")
        lines.append(f"states explored: {self.census.states};"
                     f" test-set items: {self.census.items}")
        for (n, r), cnt in sorted(self.census.by_shape.items()):
            lines.append(f"  items with {n} elements, rank {r}: {cnt}")
        if self.census.partial:
            lines.append("partial enumeration: " + "; ".join(self.census.partial_reasons))
        for skip in self.census.skipped:
            lines.append("skipped member: " + skip)
        for note in self.notes:
            lines.append("note: " + note)
        if self.violation:
            prov, xs = self.violation
            lines.append(f"violation: {prov} pinned-set [{','.join(map(str, xs))}]")
        lines.append(f"decision: {self.outcome}")
        return "\n".join(lines) + "\n"


def _ambient_states(spec: ClassSpec, rank_ceiling: int, deadline: Deadline,
                    census: Census, notes: list[str]):
    ambient = spec.ambient
    if ambient == "all":
        raise InputError(
            "ambient 'all' is not enumerable: matroids without a representation "
            "generator cannot be listed; pick gf2/gf3/gf5..., graphic, cographic, "
            "binary, or list:<file>")
    if ambient == "binary":
        ambient = "gf2"
    if ambient.startswith("gf"):
        p = int(ambient[2:])
        if p >= 5:
            notes.append(f"gf{p} representations are not unique; census may undercount")
        return enumerate_gf_states(spec, p, rank_ceiling, deadline, census)
    if ambient == "graphic":
        return enumerate_graphic_states(spec, rank_ceiling, deadline, census)
    if ambient == "cographic":
        return enumerate_graphic_states(spec, rank_ceiling, deadline, census,
                                        dualize=True)
    if ambient.startswith("list:"):
        from .formats import parse_matroid_file

        with open(ambient[5:], "r", encoding="utf-8") as fh:
            parsed = parse_matroid_file(fh.read())
        states = [(m, None, name) for name, m in parsed]
        census.states = len(states)
        return states
    raise InputError(f"unknown ambient {ambient!r}")


def enumerate_test_set(spec: ClassSpec, k: int, census: Census | None = None,
                       deadline: Deadline | None = None,
                       notes: list[str] | None = None):
    """Stream of TestSetItem: 3-connected ambient carriers within caps,
    deduplicated by isomorphism, flagged for the rank-bounded class and its
    dual-side counterpart.  Every yielded item has its 3-connectivity and
    class-minor possession re-verified here, independent of the generator."""
    if not spec.members:
        return
    census = census if census is not None else Census()
    deadline = deadline if deadline is not None else Deadline(spec.caps.seconds)
    notes = notes if notes is not None else []
    bound = rank_bound(rbar(list(spec.members)), k)
    bound_dual = rank_bound(rbar_dual(list(spec.members)), k)
    rank_ceiling = min(spec.caps.max_rank, bound)
    if rank_ceiling < bound:
        census.note_partial(f"rank cap {rank_ceiling} below theorem bound {bound}")
    for m, _, prov in _ambient_states(spec, rank_ceiling, deadline, census, notes):
        if m.size > spec.caps.max_elements or m.full_rank > rank_ceiling:
            continue
        if not is_3connected(m):
            continue
        if not any(has_minor(m, f) is not None for _, f in spec.members):
            continue
        in_fk = m.full_rank <= bound
        in_fk_dual = (m.full_rank <= bound_dual
                      and any(has_minor(m, f.dual()) is not None for _, f in spec.members))
        yield TestSetItem(m, prov, in_fk, in_fk_dual)


def decide_rounded(spec: ClassSpec, k: int, l: int | None = None) -> RoundedDecision:
    for name, m in spec.members:
        if not is_3connected(m):
            raise InputError(f"class member {name} is not 3-connected")
    if not spec.members:
        raise InputError("class has no members")
    bound = rank_bound(rbar(list(spec.members)), k)
    bound_dual = rank_bound(rbar_dual(list(spec.members)), k)
    census = Census()
    notes: list[str] = []
    deadline = Deadline(spec.caps.seconds)
    items = list(enumerate_test_set(spec, k, census, deadline, notes))
    items.sort(key=lambda it: (it.matroid.size, it.matroid.full_rank, it.provenance))
    for it in items:
        census.items += 1
        census.by_shape[(it.matroid.size, it.matroid.full_rank)] += 1

    if l is None:
        testable = [it for it in items if it.in_fk and it.in_fk_dual]
        note = "test set: rank-bounded carriers intersected with the dual-side class"
    else:
        testable = [it for it in items if it.in_fk]
        note = "test set: rank-bounded carriers (single-sided for the l-variant)"
    notes.append(note + f"; {len(testable)} of {len(items)} items testable")

    violation = None
    timed_out = False
    for it in testable:
        try:
            bad = (check_3kr(it.matroid, spec.members, k, deadline) if l is None
                   else check_3klr(it.matroid, spec.members, k, l, deadline))
        except CheckTimeout:
            census.note_partial("time budget exhausted during pinned-minor checks")
            timed_out = True
            break
        if bad is not None:
            violation = (it.provenance, it.matroid.sorted_labels(bad))
            break

    if violation is not None:
        outcome = "violation"
    elif timed_out or (not testable and census.partial):
        outcome = "inconclusive"
    else:
        if not testable:
            notes.append("no ambient carriers within caps; the pinned-minor "
                         "property holds vacuously")
        outcome = "rounded-within-caps"
    return RoundedDecision(outcome, spec.name, k, l, bound, bound_dual, census,
                           items, violation, notes)
