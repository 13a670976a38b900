"""Linear algebra over prime fields GF(p), p <= 13.

Matrices are lists of rows; vectors are tuples of ints already reduced mod p.
Everything here is plain incremental Gaussian elimination on small matrices.
"""

from __future__ import annotations

from .errors import InputError
from .limits import MAX_FIELD_PRIME

_PRIMES = (2, 3, 5, 7, 11, 13)


def check_prime(p: int) -> int:
    if p not in _PRIMES:
        raise InputError(f"field order must be a prime <= {MAX_FIELD_PRIME}, got {p}")
    return p


def inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


class Eliminator:
    """Incremental column eliminator: feed vectors, track the accumulated rank."""

    def __init__(self, p: int):
        self.p = p
        self.pivots: list[tuple[int, tuple[int, ...]]] = []  # (pivot position, reduced vector)

    def reduce(self, vec) -> tuple[int, ...]:
        p = self.p
        v = list(vec)
        for pos, pv in self.pivots:
            c = v[pos]
            if c:
                for i in range(len(v)):
                    v[i] = (v[i] - c * pv[i]) % p
        return tuple(v)

    def add(self, vec) -> bool:
        """Insert a vector; True if it increased the rank."""
        v = self.reduce(vec)
        for pos, c in enumerate(v):
            if c:
                inv = inverse(c, self.p)
                v = tuple((x * inv) % self.p for x in v)
                self.pivots.append((pos, v))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_of_columns(cols, p: int) -> int:
    elim = Eliminator(p)
    for c in cols:
        elim.add(c)
    return elim.rank


def rref(rows: list[tuple[int, ...]], p: int) -> list[tuple[int, ...]]:
    """Reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    out: list[list[int]] = []
    col = 0
    rows_left = mat
    while rows_left and col < ncols:
        pivot_row = None
        for r in rows_left:
            if r[col]:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        rows_left = [r for r in rows_left if r is not pivot_row]
        inv = inverse(pivot_row[col], p)
        pivot_row = [(x * inv) % p for x in pivot_row]
        for r in out + rows_left:
            c = r[col]
            if c:
                for i in range(ncols):
                    r[i] = (r[i] - c * pivot_row[i]) % p
        out.append(pivot_row)
        col += 1
    return [tuple(r) for r in out]


def nullspace(rows: list[tuple[int, ...]], p: int, ncols: int) -> list[tuple[int, ...]]:
    """Basis of {x : R x = 0} for the row space R, as a list of row vectors."""
    reduced = rref(rows, p)
    pivot_cols = []
    for r in reduced:
        for i, x in enumerate(r):
            if x:
                pivot_cols.append(i)
                break
    free_cols = [i for i in range(ncols) if i not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [0] * ncols
        vec[f] = 1
        for r, pc in zip(reduced, pivot_cols):
            vec[pc] = (-r[f]) % p
        basis.append(tuple(vec))
    return basis


def projective_points(dim: int, p: int) -> list[tuple[int, ...]]:
    """All nonzero vectors in GF(p)^dim with first nonzero coordinate 1."""
    pts = []

    def grow(prefix, seen_one):
        if len(prefix) == dim:
            if seen_one:
                pts.append(tuple(prefix))
            return
        if not seen_one:
            grow(prefix + [0], False)
            grow(prefix + [1], True)
        else:
            for a in range(p):
                grow(prefix + [a], True)

    grow([], False)
    return pts


def normalize_point(vec: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1 (identity for zero vectors)."""
    for x in vec:
        if x:
            inv = inverse(x % p, p)
            return tuple((v * inv) % p for v in vec)
    return tuple(v % p for v in vec)
