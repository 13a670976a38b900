"""Minor detection and vertically contractible elements.

`has_minor(M, N, pinned)` searches for a minor of M isomorphic to N whose
ground set avoids touching `pinned` (the pinned elements must survive into
the minor).  The search is exhaustive: contraction sets are enumerated as
independent sets of size r(M) - r(N) in canonical order, then deletions.
When N is simple the deletion stage only has to decide which parallel
classes of M/C survive, since keeping a different member of a class yields
an isomorphic restriction (parallel swaps are automorphisms); pinned
elements are forced keepers of their own classes.  That restriction loses
no witnesses, so the search stays complete.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .connectivity import is_3connected
from .core import Label, Matroid, _mask_indices
from .errors import ResourceLimitError
from .iso import isomorphism
from .limits import MINOR_GAP_BOUND, MINOR_SIZE_BOUND, enumeration_bound


@dataclass(frozen=True)
class MinorWitness:
    """A certified minor embedding: contract, delete, then relabel."""

    contracted: tuple
    deleted: tuple
    mapping: dict  # minor label -> target label

    def summary(self) -> str:
        c = ",".join(str(x) for x in self.contracted)
        d = ",".join(str(x) for x in self.deleted)
        return f"contract[{c}] delete[{d}]"


_minor_cache: dict = {}


def _independent_sets(m: Matroid, size: int, avoid_mask: int):
    """All independent subsets of E - avoid of the given size, masks in
    canonical (lexicographic index) order."""
    n = m.size
    allowed = [i for i in range(n) if not (avoid_mask >> i) & 1]

    def grow(start: int, mask: int, have: int):
        if have == size:
            yield mask
            return
        for pos in range(start, len(allowed)):
            i = allowed[pos]
            bit = 1 << i
            if m.rank_mask(mask | bit) == have + 1:
                yield from grow(pos + 1, mask | bit, have + 1)

    if size == 0:
        yield 0
    else:
        yield from grow(0, 0, 0)


def has_minor(m: Matroid, n: Matroid, pinned: Iterable[Label] = ()) -> MinorWitness | None:
    """First minor of M isomorphic to N keeping `pinned` in the ground set."""
    if n.size > MINOR_SIZE_BOUND:
        raise ResourceLimitError(
            f"minor target must have <= {MINOR_SIZE_BOUND} elements, got {n.size}")
    if m.size > enumeration_bound():
        raise ResourceLimitError(
            f"minor search needs |E| <= {enumeration_bound()}, matroid has {m.size}")
    pinned_mask = m.mask_of(pinned)
    key = (m, n, pinned_mask)
    if key in _minor_cache:
        return _minor_cache[key]
    result = _has_minor_uncached(m, n, pinned_mask)
    _minor_cache[key] = result
    return result


def _has_minor_uncached(m: Matroid, n: Matroid, pinned_mask: int) -> MinorWitness | None:
    gap = m.full_rank - n.full_rank
    dgap = m.size - n.size - gap
    if gap < 0 or dgap < 0:
        return None
    if gap > MINOR_GAP_BOUND:
        raise ResourceLimitError(
            f"rank gap {gap} exceeds the search bound {MINOR_GAP_BOUND}")
    simple_target = n.is_simple()
    pinned_labels = m.sorted_labels(pinned_mask)
    for cmask in _independent_sets(m, gap, pinned_mask):
        mc = m.contract(m.labels_of(cmask))
        witness = (_scan_deletions_simple(m, mc, n, pinned_labels, cmask)
                   if simple_target else
                   _scan_deletions_general(m, mc, n, pinned_labels, cmask))
        if witness is not None:
            return witness
    return None


def _finish(m: Matroid, mc: Matroid, n: Matroid, cmask: int, kept) -> MinorWitness | None:
    candidate = mc.restrict(kept)
    if candidate.full_rank != n.full_rank:
        return None
    mapping = isomorphism(candidate, n)
    if mapping is None:
        return None
    kept_set = set(kept)
    deleted = tuple(x for x in mc.ground if x not in kept_set)
    return MinorWitness(m.sorted_labels(cmask), deleted, mapping)


def _scan_deletions_simple(m, mc, n, pinned_labels, cmask):
    # Loops of M/C must be deleted; a pinned loop kills this contraction.
    loop_labels = mc.loops()
    if any(x in loop_labels for x in pinned_labels):
        return None
    classes = mc.parallel_class_masks()
    forced = []
    free = []
    pinned_mask_mc = mc.mask_of(pinned_labels)
    for cls in classes:
        hit = cls & pinned_mask_mc
        if hit:
            if hit.bit_count() > 1:
                return None  # two pinned elements in parallel cannot both survive
            forced.append(hit)
        else:
            free.append(cls & -cls)  # canonical member; parallel swap is an automorphism
    need = n.size - len(forced)
    if need < 0 or need > len(free):
        return None
    base = 0
    for bit in forced:
        base |= bit
    for combo in itertools.combinations(free, need):
        kept_mask = base
        for bit in combo:
            kept_mask |= bit
        witness = _finish(m, mc, n, cmask, mc.labels_of(kept_mask))
        if witness is not None:
            return witness
    return None


def _scan_deletions_general(m, mc, n, pinned_labels, cmask):
    pinned_mask_mc = mc.mask_of(pinned_labels)
    rest = [i for i in range(mc.size) if not (pinned_mask_mc >> i) & 1]
    need = n.size - len(pinned_labels)
    if need < 0 or need > len(rest):
        return None
    for combo in itertools.combinations(rest, need):
        kept_mask = pinned_mask_mc
        for i in combo:
            kept_mask |= 1 << i
        witness = _finish(m, mc, n, cmask, mc.labels_of(kept_mask))
        if witness is not None:
            return witness
    return None


def verify_witness(m: Matroid, n: Matroid, witness: MinorWitness,
                   sample: int = 1000, seed: int = 0) -> bool:
    """Re-check a witness: the mapped minor agrees with N on subset ranks
    (all subsets up to 10 elements, a seeded sample beyond that)."""
    minor = m.contract(witness.contracted).delete(witness.deleted)
    if set(minor.ground) != set(witness.mapping):
        return False
    if set(witness.mapping.values()) != set(n.ground):
        return False
    k = minor.size
    if k <= 10:
        subsets = range(1 << k)
    else:
        rng = random.Random(seed)
        subsets = (rng.randrange(1 << k) for _ in range(sample))
    ground = minor.ground
    for sub in subsets:
        labels = [ground[i] for i in _mask_indices(sub)]
        if minor.rank(labels) != n.rank(witness.mapping[x] for x in labels):
            return False
    return True


# -- vertically contractible machinery ------------------------------------


def si_after_contraction(m: Matroid, elems: Iterable[Label],
                         prefer: Iterable[Label] = ()) -> Matroid:
    """Simplification of M/X, keeping `prefer` representatives when possible."""
    simplified, _ = m.contract(elems).simplify(prefer)
    return simplified


def is_contractible_set(m: Matroid, elems: Iterable[Label]) -> bool:
    """M/X is 3-connected (no simplification)."""
    return is_3connected(m.contract(elems))


def is_n_contractible_set(m: Matroid, n: Matroid, elems: Iterable[Label]) -> bool:
    """M/X is 3-connected and has an N-minor."""
    mc = m.contract(elems)
    return is_3connected(mc) and has_minor(mc, n) is not None


def is_vnc_set(m: Matroid, n: Matroid, elems: Iterable[Label],
               prefer: Iterable[Label] = ()) -> bool:
    """si(M/X) is 3-connected and has an N-minor."""
    simplified = si_after_contraction(m, elems, prefer)
    return is_3connected(simplified) and has_minor(simplified, n) is not None


@dataclass(frozen=True)
class VncReport:
    """The vertically N-contractible elements of M, with their rank."""

    m: Matroid
    n: Matroid
    elements: frozenset
    rank: int
    pairs: frozenset  # requested 2-subsets that tested contractible

    def sorted_elements(self) -> tuple:
        return self.m.sorted_labels(self.elements)


def vnc_elements(m: Matroid, n: Matroid,
                 pairs: Iterable[frozenset] = ()) -> VncReport:
    """Exact per-element scan; `pairs` are extra 2-subsets to test on demand."""
    members = frozenset(x for x in m.ground if is_vnc_set(m, n, [x]))
    good_pairs = frozenset(frozenset(p) for p in pairs
                           if is_vnc_set(m, n, frozenset(p)))
    return VncReport(m, n, members, m.rank(members), good_pairs)
