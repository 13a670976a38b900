"""Exact matroid kernel.

A `Matroid` couples an ordered ground set of labels with a rank oracle
backend.  Supported backends: uniform, linear over a prime field, graphic,
explicit basis list, plus lazy dual and minor wrappers.  Subsets are handled
internally as bit masks over the construction order of the ground set; that
construction order is the canonical order used by every "sorted canonically"
output in the package.

Matroid values are immutable after construction and all operations are pure,
so instances may be shared freely between threads.  Rank queries are memoized
per instance (dict writes are atomic under the GIL).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import gf
from .errors import InputError, ResourceLimitError
from .limits import enumeration_bound

Label = str | int


def _mask_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BasisExchangeError(InputError):
    """Basis-exchange axiom failure; carries the offending masks."""

    def __init__(self, b1: int, b2: int, x: int):
        self.b1 = b1
        self.b2 = b2
        self.x = x
        super().__init__(
            f"basis-exchange axiom fails between bases {b1:#x} and {b2:#x}"
            f" at element index {x}")


@dataclass(frozen=True)
class SubsetRecord:
    """A named subset of a matroid's ground set (circuit, triad, basis, ...)."""

    owner: "Matroid"
    members: frozenset
    kind: str

    def verify(self) -> bool:
        m = self.owner
        x = self.members
        k = self.kind
        if k in ("circuit", "triangle"):
            if k == "triangle" and len(x) != 3:
                return False
            return m.is_circuit(x)
        if k in ("cocircuit", "triad"):
            if k == "triad" and len(x) != 3:
                return False
            return m.dual().is_circuit(x)
        if k == "basis":
            return len(x) == m.full_rank and m.rank(x) == m.full_rank
        if k == "independent":
            return m.rank(x) == len(x)
        if k == "flat":
            return m.closure(x) == frozenset(x)
        if k == "line":
            return m.rank(x) == 2 and m.closure(x) == frozenset(x)
        raise InputError(f"unknown subset kind {self.kind!r}")

    def sorted_members(self) -> tuple:
        return self.owner.sorted_labels(self.members)


class _Backend:
    def rank_mask(self, mask: int) -> int:  # pragma: no cover - interface
        raise NotImplementedError

    def describe(self):  # pragma: no cover - interface
        raise NotImplementedError


class _Uniform(_Backend):
    def __init__(self, r: int, n: int):
        if r < 0 or r > n:
            raise InputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        self.r = r
        self.n = n

    def rank_mask(self, mask: int) -> int:
        return min(mask.bit_count(), self.r)

    def describe(self):
        return ("uniform", self.r, self.n)


class _Linear(_Backend):
    def __init__(self, p: int, cols: tuple[tuple[int, ...], ...]):
        self.p = gf.check_prime(p)
        if cols:
            arity = len(cols[0])
            for c in cols:
                if len(c) != arity:
                    raise InputError("all columns must have the same number of entries")
        self.cols = tuple(tuple(x % p for x in c) for c in cols)

    def rank_mask(self, mask: int) -> int:
        elim = gf.Eliminator(self.p)
        for i in _mask_indices(mask):
            elim.add(self.cols[i])
        return elim.rank

    def describe(self):
        return ("linear", self.p, self.cols)


class _Graphic(_Backend):
    def __init__(self, nv: int, endpoints: tuple[tuple[int, int], ...]):
        if nv < 0:
            raise InputError("vertex count must be nonnegative")
        for u, v in endpoints:
            if not (0 <= u < nv and 0 <= v < nv):
                raise InputError(f"edge endpoint out of range: ({u}, {v})")
        self.nv = nv
        self.endpoints = endpoints

    def rank_mask(self, mask: int) -> int:
        parent = list(range(self.nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        rank = 0
        for i in _mask_indices(mask):
            u, v = self.endpoints[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    def describe(self):
        return ("graph", self.nv, self.endpoints)


class _BasisList(_Backend):
    def __init__(self, basis_masks: tuple[int, ...], n: int):
        if not basis_masks:
            raise InputError("basis list may not be empty")
        sizes = {b.bit_count() for b in basis_masks}
        if len(sizes) != 1:
            raise InputError("all bases must have the same cardinality")
        self.basis_masks = tuple(sorted(set(basis_masks)))
        self.n = n
        self._check_exchange()

    def _check_exchange(self):
        # Basis exchange: for B1, B2 and x in B1-B2 there is y in B2-B1
        # with B1 - x + y a basis.
        bset = set(self.basis_masks)
        for b1 in self.basis_masks:
            for b2 in self.basis_masks:
                diff = b1 & ~b2
                for x in _mask_indices(diff):
                    base = b1 ^ (1 << x)
                    if not any(base | (1 << y) in bset for y in _mask_indices(b2 & ~b1)):
                        raise BasisExchangeError(b1, b2, x)

    def rank_mask(self, mask: int) -> int:
        return max((mask & b).bit_count() for b in self.basis_masks)

    def describe(self):
        return ("bases", self.basis_masks)


class _Dual(_Backend):
    def __init__(self, inner: "Matroid"):
        self.inner = inner

    def rank_mask(self, mask: int) -> int:
        inner = self.inner
        return mask.bit_count() + inner.rank_mask(inner.full_mask ^ mask) - inner.full_rank

    def describe(self):
        return ("dual", self.inner)


class _Minor(_Backend):
    """Minor inner / contracted \\ deleted; `contracted` is independent in inner."""

    def __init__(self, inner: "Matroid", contracted_mask: int, deleted_mask: int,
                 kept_inner_bits: tuple[int, ...]):
        self.inner = inner
        self.contracted_mask = contracted_mask
        self.deleted_mask = deleted_mask
        self.kept_inner_bits = kept_inner_bits
        self._contracted_rank = inner.rank_mask(contracted_mask)

    def lift(self, mask: int) -> int:
        out = 0
        bits = self.kept_inner_bits
        for i in _mask_indices(mask):
            out |= bits[i]
        return out

    def rank_mask(self, mask: int) -> int:
        return self.inner.rank_mask(self.lift(mask) | self.contracted_mask) - self._contracted_rank

    def describe(self):
        return ("minor", self.inner, self.contracted_mask, self.deleted_mask)


class Matroid:
    """Immutable matroid over an ordered ground set of labels."""

    __slots__ = ("_labels", "_index", "_backend", "_rcache", "_full_mask",
                 "_full_rank", "_circuit_masks", "_parallel_info")

    def __init__(self, labels: Iterable[Label], backend: _Backend):
        labels = tuple(labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise InputError(f"duplicate element label {lab!r}")
            index[lab] = i
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_backend", backend)
        object.__setattr__(self, "_rcache", {})
        object.__setattr__(self, "_full_mask", (1 << len(labels)) - 1)
        object.__setattr__(self, "_circuit_masks", None)
        object.__setattr__(self, "_parallel_info", None)
        object.__setattr__(self, "_full_rank", self.rank_mask(self._full_mask))
        if self.rank_mask(0) != 0:
            raise InputError("backend violates rank(empty) = 0")

    def __setattr__(self, name, value):
        raise AttributeError("Matroid instances are immutable")

    # -- ground set ------------------------------------------------------

    @property
    def ground(self) -> tuple:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def full_mask(self) -> int:
        return self._full_mask

    @property
    def full_rank(self) -> int:
        return self._full_rank

    @property
    def backend(self) -> _Backend:
        return self._backend

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown element label {label!r}") from None

    def mask_of(self, elems: Iterable[Label]) -> int:
        mask = 0
        for e in elems:
            mask |= 1 << self.index_of(e)
        return mask

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(self._labels[i] for i in _mask_indices(mask))

    def sorted_labels(self, elems) -> tuple:
        if isinstance(elems, int):
            return tuple(self._labels[i] for i in _mask_indices(elems))
        return tuple(sorted(elems, key=self.index_of))

    # -- rank machinery --------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        cache = self._rcache
        r = cache.get(mask)
        if r is None:
            r = self._backend.rank_mask(mask)
            cache[mask] = r
        return r

    def rank(self, elems: Iterable[Label]) -> int:
        return self.rank_mask(self.mask_of(elems))

    def corank(self, elems: Iterable[Label]) -> int:
        mask = self.mask_of(elems)
        return self.corank_mask(mask)

    def corank_mask(self, mask: int) -> int:
        return mask.bit_count() + self.rank_mask(self._full_mask ^ mask) - self._full_rank

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        rest = self._full_mask ^ mask
        for i in _mask_indices(rest):
            if self.rank_mask(mask | (1 << i)) == r:
                out |= 1 << i
        return out

    def closure(self, elems: Iterable[Label]) -> frozenset:
        return self.labels_of(self.closure_mask(self.mask_of(elems)))

    def coclosure(self, elems: Iterable[Label]) -> frozenset:
        d = self.dual()
        return d.labels_of(d.closure_mask(d.mask_of(elems)))

    def is_independent(self, elems: Iterable[Label]) -> bool:
        mask = self.mask_of(elems)
        return self.rank_mask(mask) == mask.bit_count()

    def is_circuit(self, elems: Iterable[Label]) -> bool:
        mask = self.mask_of(elems)
        k = mask.bit_count()
        if k == 0 or self.rank_mask(mask) >= k:
            return False
        for i in _mask_indices(mask):
            sub = mask ^ (1 << i)
            if self.rank_mask(sub) != sub.bit_count():
                return False
        return True

    # -- circuits --------------------------------------------------------

    def circuit_masks(self) -> tuple[int, ...]:
        cached = self._circuit_masks
        if cached is not None:
            return cached
        bound = enumeration_bound()
        if self.size > bound:
            raise ResourceLimitError(
                f"circuit enumeration needs |E| <= {bound}, matroid has {self.size}")
        found: list[int] = []
        idx = range(self.size)
        for k in range(1, self._full_rank + 2):
            for combo in itertools.combinations(idx, k):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if any(c & mask == c for c in found):
                    continue
                if self.rank_mask(mask) < k:
                    found.append(mask)
        result = tuple(found)
        object.__setattr__(self, "_circuit_masks", result)
        return result

    def circuits(self) -> tuple[SubsetRecord, ...]:
        return tuple(SubsetRecord(self, self.labels_of(m), "circuit")
                     for m in self.circuit_masks())

    def cocircuit_masks(self) -> tuple[int, ...]:
        return self.dual().circuit_masks()

    def cocircuits(self) -> tuple[SubsetRecord, ...]:
        return tuple(SubsetRecord(self, self.labels_of(m), "cocircuit")
                     for m in self.cocircuit_masks())

    def triangles(self) -> tuple[frozenset, ...]:
        return tuple(self.labels_of(m) for m in self.circuit_masks() if m.bit_count() == 3)

    def triads(self) -> tuple[frozenset, ...]:
        return tuple(self.labels_of(m) for m in self.cocircuit_masks() if m.bit_count() == 3)

    def fundamental_circuit(self, x: Label, indep: Iterable[Label]) -> SubsetRecord:
        """The unique circuit inside I + x, for I independent spanning x."""
        imask = self.mask_of(indep)
        xbit = 1 << self.index_of(x)
        if imask & xbit:
            raise InputError("x must lie outside the independent set")
        if self.rank_mask(imask) != imask.bit_count():
            raise InputError("the given set is not independent")
        if self.rank_mask(imask | xbit) != self.rank_mask(imask):
            raise InputError("x is not spanned by the given independent set")
        cmask = xbit
        for i in _mask_indices(imask):
            reduced = imask ^ (1 << i)
            if self.rank_mask(reduced | xbit) == reduced.bit_count() + 1:
                cmask |= 1 << i
        return SubsetRecord(self, self.labels_of(cmask), "circuit")

    # -- wrappers --------------------------------------------------------

    def dual(self) -> "Matroid":
        backend = self._backend
        if isinstance(backend, _Dual):
            return backend.inner
        return Matroid(self._labels, _Dual(self))

    def _as_minor(self, extra_contract_mask: int, extra_delete_mask: int) -> "Matroid":
        """Build a minor wrapper, flattening when self already is one."""
        if extra_contract_mask & extra_delete_mask:
            raise InputError("contracted and deleted sets must be disjoint")
        # Normalize: contract a maximal independent subset, delete the rest.
        cmask = 0
        for i in _mask_indices(extra_contract_mask):
            bit = 1 << i
            if self.rank_mask(cmask | bit) > self.rank_mask(cmask):
                cmask |= bit
        dmask = (extra_contract_mask ^ cmask) | extra_delete_mask

        backend = self._backend
        if isinstance(backend, _Minor):
            inner = backend.inner
            lift_c = backend.lift(cmask) | backend.contracted_mask
            lift_d = backend.lift(dmask) | backend.deleted_mask
            return inner._raw_minor(lift_c, lift_d)
        return self._raw_minor(cmask, dmask)

    def _raw_minor(self, cmask: int, dmask: int) -> "Matroid":
        kept_labels = []
        kept_bits = []
        gone = cmask | dmask
        for i, lab in enumerate(self._labels):
            bit = 1 << i
            if not gone & bit:
                kept_labels.append(lab)
                kept_bits.append(bit)
        backend = _Minor(self, cmask, dmask, tuple(kept_bits))
        return Matroid(kept_labels, backend)

    def contract(self, elems: Iterable[Label]) -> "Matroid":
        return self._as_minor(self.mask_of(elems), 0)

    def delete(self, elems: Iterable[Label]) -> "Matroid":
        return self._as_minor(0, self.mask_of(elems))

    def restrict(self, elems: Iterable[Label]) -> "Matroid":
        keep = self.mask_of(elems)
        return self._as_minor(0, self._full_mask ^ keep)

    # -- loops / parallel classes / simplification ------------------------

    def _parallel(self):
        cached = self._parallel_info
        if cached is not None:
            return cached
        loops = 0
        nonloops = []
        for i in range(self.size):
            bit = 1 << i
            if self.rank_mask(bit) == 0:
                loops |= bit
            else:
                nonloops.append(i)
        parent = {i: i for i in nonloops}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in itertools.combinations(nonloops, 2):
            if find(a) != find(b) and self.rank_mask((1 << a) | (1 << b)) == 1:
                parent[find(b)] = find(a)
        groups: dict[int, int] = {}
        for i in nonloops:
            root = find(i)
            groups[root] = groups.get(root, 0) | (1 << i)
        classes = tuple(sorted(groups.values(), key=lambda m: (m & -m)))
        result = (loops, classes)
        object.__setattr__(self, "_parallel_info", result)
        return result

    def loops(self) -> frozenset:
        return self.labels_of(self._parallel()[0])

    def parallel_class_masks(self) -> tuple[int, ...]:
        return self._parallel()[1]

    def is_simple(self) -> bool:
        loops, classes = self._parallel()
        return loops == 0 and all(c.bit_count() == 1 for c in classes)

    def simplify(self, prefer: Iterable[Label] = ()) -> tuple["Matroid", dict]:
        """Drop loops, keep one element per parallel class.

        Within a class a member of `prefer` wins if present, ties broken by
        the smallest canonical label.  Returns the simplified matroid and the
        map from each non-loop element to its retained representative.
        """
        prefer_mask = self.mask_of(prefer)
        _, classes = self._parallel()
        keep_mask = 0
        mapping = {}
        for cls in classes:
            pref_hits = cls & prefer_mask
            chosen_bit = (pref_hits or cls) & -(pref_hits or cls)
            keep_mask |= chosen_bit
            rep = self._labels[chosen_bit.bit_length() - 1]
            for i in _mask_indices(cls):
                mapping[self._labels[i]] = rep
        simplified = self._as_minor(0, self._full_mask ^ keep_mask)
        return simplified, mapping

    # -- materialization and comparisons ----------------------------------

    def bases_masks(self) -> tuple[int, ...]:
        r = self._full_rank
        out = []
        for combo in itertools.combinations(range(self.size), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if self.rank_mask(mask) == r:
                out.append(mask)
        return tuple(out)

    def materialize(self) -> "Matroid":
        """Explicit basis-list copy (fast repeated ranks for small matroids)."""
        if self.size > 12:
            raise ResourceLimitError("materialize is limited to 12 elements")
        return Matroid(self._labels, _BasisList(self.bases_masks(), self.size))

    def rank_equal(self, other: "Matroid") -> bool:
        """Same labels (in any order) and the same rank on every subset."""
        if set(self._labels) != set(other.ground):
            return False
        for sub in range(self._full_mask + 1):
            if self.rank_mask(sub) != other.rank(self.labels_of(sub)):
                return False
        return True

    def describe(self):
        return self._backend.describe()

    def __repr__(self):
        return f"Matroid(n={self.size}, r={self._full_rank}, backend={type(self._backend).__name__})"

    # -- constructors ------------------------------------------------------

    @staticmethod
    def uniform(r: int, n: int, labels: Iterable[Label] | None = None) -> "Matroid":
        if labels is None:
            labels = default_labels(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise InputError("label count must match n")
        return Matroid(labels, _Uniform(r, n))

    @staticmethod
    def linear(p: int, columns: Iterable[tuple[Label, Iterable[int]]]) -> "Matroid":
        cols = []
        labels = []
        for lab, vec in columns:
            labels.append(lab)
            cols.append(tuple(int(x) for x in vec))
        return Matroid(labels, _Linear(p, tuple(cols)))

    @staticmethod
    def graphic(nv: int, edges: Iterable[tuple[Label, int, int]]) -> "Matroid":
        labels = []
        endpoints = []
        for lab, u, v in edges:
            labels.append(lab)
            endpoints.append((int(u), int(v)))
        return Matroid(labels, _Graphic(nv, tuple(endpoints)))

    @staticmethod
    def from_bases(labels: Iterable[Label], bases: Iterable[Iterable[Label]]) -> "Matroid":
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        masks = []
        for b in bases:
            mask = 0
            for e in b:
                if e not in index:
                    raise InputError(f"basis element {e!r} missing from ground set")
                mask |= 1 << index[e]
            masks.append(mask)
        try:
            backend = _BasisList(tuple(masks), len(labels))
        except BasisExchangeError as exc:
            names = lambda m: "{" + ",".join(str(labels[i]) for i in _mask_indices(m)) + "}"
            raise InputError(
                "basis-exchange axiom fails between "
                f"{names(exc.b1)} and {names(exc.b2)} at {labels[exc.x]!r}") from None
        return Matroid(labels, backend)


def default_labels(n: int) -> tuple[str, ...]:
    """a, b, c, ... for small ground sets; e1, e2, ... beyond 26 elements."""
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"e{i + 1}" for i in range(n))
