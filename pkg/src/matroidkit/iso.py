"""Matroid isomorphism by backtracking over circuit structure.

Two matroids on equally many elements are isomorphic iff some ground-set
bijection maps the circuit family of one onto the other's, so the search
walks element assignments and prunes with cheap invariants first: element
count, rank, circuit-size spectrum, and each element's occurrence profile
across circuit sizes.
"""

from __future__ import annotations

from collections import Counter

from .core import Matroid, _mask_indices
from .errors import ResourceLimitError
from .limits import ISO_BOUND


def _spectrum(circuit_masks) -> Counter:
    return Counter(m.bit_count() for m in circuit_masks)


def _element_profiles(n: int, circuit_masks) -> list[tuple]:
    per = [Counter() for _ in range(n)]
    for m in circuit_masks:
        size = m.bit_count()
        for i in _mask_indices(m):
            per[i][size] += 1
    return [tuple(sorted(c.items())) for c in per]


def isomorphism(m1: Matroid, m2: Matroid) -> dict | None:
    """A rank-preserving ground-set bijection (label -> label), or None."""
    if m1.size > ISO_BOUND or m2.size > ISO_BOUND:
        raise ResourceLimitError(f"isomorphism search is limited to {ISO_BOUND} elements")
    n = m1.size
    if n != m2.size or m1.full_rank != m2.full_rank:
        return None
    c1 = m1.circuit_masks()
    c2 = m2.circuit_masks()
    if _spectrum(c1) != _spectrum(c2):
        return None
    prof1 = _element_profiles(n, c1)
    prof2 = _element_profiles(n, c2)
    if Counter(prof1) != Counter(prof2):
        return None

    c2set = set(c2)
    # Assign rarest profiles first: fewer candidates near the root.
    freq = Counter(prof1)
    order = sorted(range(n), key=lambda i: (freq[prof1[i]], i))
    position = {e: pos for pos, e in enumerate(order)}
    # Circuits become fully assigned exactly when their latest element is.
    ready: list[list[int]] = [[] for _ in range(n)]
    for cm in c1:
        last = max(position[i] for i in _mask_indices(cm))
        ready[last].append(cm)

    assign = [-1] * n  # m1 index -> m2 index
    used = [False] * n

    def consistent(pos: int) -> bool:
        for cm in ready[pos]:
            img = 0
            for i in _mask_indices(cm):
                img |= 1 << assign[i]
            if img not in c2set:
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        e = order[pos]
        want = prof1[e]
        for t in range(n):
            if used[t] or prof2[t] != want:
                continue
            assign[e] = t
            used[t] = True
            if consistent(pos) and extend(pos + 1):
                return True
            used[t] = False
            assign[e] = -1
        return False

    if not extend(0):
        return None
    # Forward circuit bijection plus equal counts makes the map onto, hence
    # a matroid isomorphism.
    g1 = m1.ground
    g2 = m2.ground
    return {g1[i]: g2[assign[i]] for i in range(n)}


def are_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    return isomorphism(m1, m2) is not None
