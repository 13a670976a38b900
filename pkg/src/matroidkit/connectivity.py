"""Tutte connectivity: exhaustive separation search and 3-connectivity tests.

A k-separation is a partition (A, B) of the ground set with both sides of
size at least k and order r(A) + r(B) - r(M) + 1 at most k.  A matroid is
3-connected when it has no 1- and no 2-separation.  No special cases are
bolted on for tiny ground sets: the bare definition already makes U_{1,1},
U_{1,2}, U_{1,3} and U_{2,3} 3-connected (no partition can satisfy the size
requirement) while a loop or a coloop beside other elements yields an
order-1 split.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Label, Matroid
from .errors import ResourceLimitError
from .limits import enumeration_bound


@dataclass(frozen=True)
class Separation:
    """A certified partition witness; `order` is r(A) + r(B) - r(M) + 1."""

    owner: Matroid
    side_a: frozenset
    side_b: frozenset
    order: int

    def verify(self) -> bool:
        m = self.owner
        a = m.mask_of(self.side_a)
        b = m.mask_of(self.side_b)
        if a & b or a | b != m.full_mask:
            return False
        return m.rank_mask(a) + m.rank_mask(b) - m.full_rank + 1 == self.order


def find_separation(matroid: Matroid, k: int) -> Separation | None:
    """Exhaustive search for a separation of order <= k with both sides >= k.

    Scans every bipartition once (element 0 pinned to side A, masks ascending)
    so the returned witness is the lexicographically least one.  No pruning is
    applied; completeness is by enumeration.
    """
    n = matroid.size
    bound = enumeration_bound()
    if n > bound:
        raise ResourceLimitError(
            f"separation search needs |E| <= {bound}, matroid has {n}")
    if n < 2 * k:
        return None
    full = matroid.full_mask
    rank = matroid.rank_mask
    r = matroid.full_rank
    for mask in range(1, full, 2):  # bit 0 always on side A
        ca = mask.bit_count()
        if ca < k or n - ca < k:
            continue
        order = rank(mask) + rank(full ^ mask) - r + 1
        if order <= k:
            return Separation(matroid, matroid.labels_of(mask),
                              matroid.labels_of(full ^ mask), order)
    return None


@lru_cache(maxsize=65536)
def _three_connected(matroid: Matroid) -> bool:
    return find_separation(matroid, 1) is None and find_separation(matroid, 2) is None


def is_connected(matroid: Matroid) -> bool:
    return find_separation(matroid, 1) is None


def is_3connected(matroid: Matroid) -> bool:
    return _three_connected(matroid)


def is_vertically_contractible(matroid: Matroid, elems: Iterable[Label],
                               prefer: Iterable[Label] = ()) -> bool:
    """True iff the simplification of M/X is 3-connected."""
    simplified, _ = matroid.contract(elems).simplify(prefer)
    return is_3connected(simplified)
