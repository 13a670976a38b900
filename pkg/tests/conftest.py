"""Shared fixtures and the independent rank oracle.

The oracle recomputes ranks from backend definitions with algorithms that
share nothing with the kernel: determinant-by-permutation-expansion for
linear backends, DFS cycle detection for graphic ones, subset-of-a-basis
for basis lists, and plain counting for uniform matroids.  Wrapper backends
reduce through the defining formulas.
"""

from __future__ import annotations

import itertools

import pytest

from matroidkit import catalog
from matroidkit.core import Matroid


def _perm_det(rows, p):
    """Determinant mod p by permutation expansion; fine for k <= 5."""
    k = len(rows)
    total = 0
    for perm in itertools.permutations(range(k)):
        sign = 1
        seen = list(perm)
        # count inversions for the sign
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(k):
            prod = (prod * rows[i][perm[i]]) % p
        total = (total + sign * prod) % p
    return total % p


def oracle_independent(m: Matroid, labels: tuple) -> bool:
    desc = m.describe()
    kind = desc[0]
    if kind == "uniform":
        return len(labels) <= desc[1]
    if kind == "linear":
        _, p, cols = desc
        vecs = [cols[m.index_of(x)] for x in labels]
        k = len(vecs)
        if k == 0:
            return True
        if k > len(vecs[0]):
            return False
        # independent iff some k x k submatrix has nonzero determinant
        for rowsel in itertools.combinations(range(len(vecs[0])), k):
            rows = [[vecs[j][i] for j in range(k)] for i in rowsel]
            if _perm_det(rows, p) != 0:
                return True
        return False
    if kind == "graph":
        _, nv, endpoints = desc
        adj: dict[int, list[tuple[int, int]]] = {}
        for idx, x in enumerate(labels):
            u, v = endpoints[m.index_of(x)]
            if u == v:
                return False
            adj.setdefault(u, []).append((v, idx))
            adj.setdefault(v, []).append((u, idx))
        # acyclic iff DFS never revisits a vertex
        seen: set[int] = set()
        for start in list(adj):
            if start in seen:
                continue
            stack = [(start, -1)]
            seen.add(start)
            while stack:
                vert, via = stack.pop()
                for nxt, eidx in adj.get(vert, []):
                    if eidx == via:
                        continue
                    if nxt in seen:
                        return False
                    seen.add(nxt)
                    stack.append((nxt, eidx))
        return True
    if kind == "bases":
        basis_masks = desc[1]
        mask = m.mask_of(labels)
        return any(mask & b == mask for b in basis_masks)
    if kind == "dual":
        inner = desc[1]
        # independent in the dual iff the complement spans the inner matroid
        complement = tuple(x for x in inner.ground if x not in labels)
        return oracle_rank(inner, complement) == oracle_rank(inner, inner.ground)
    if kind == "minor":
        _, inner, cmask, dmask = desc
        contracted = tuple(inner.sorted_labels(cmask))
        return (oracle_rank(inner, tuple(labels) + contracted)
                - oracle_rank(inner, contracted)) == len(labels)
    raise AssertionError(f"oracle has no rule for backend {kind!r}")


def oracle_rank(m: Matroid, labels) -> int:
    labels = tuple(labels)
    best = 0
    for k in range(len(labels), -1, -1):
        if k <= best:
            break
        for sub in itertools.combinations(labels, k):
            if oracle_independent(m, sub):
                best = k
                break
    return best


@pytest.fixture(scope="session")
def corpus():
    return catalog.standard_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [(name, m) for name, m in corpus if m.size <= 10]
