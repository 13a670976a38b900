"""Named matroid constructors with construction-time self-tests.

Entries are cached per parameter tuple; every build re-verifies a small
table of expected facts (element count, rank, 3-connectivity for small
instances) so a regression in the kernel surfaces at the first `build`.
"""

from __future__ import annotations

import itertools

from . import connectivity, iso
from .core import Matroid
from .errors import InputError


def uniform(r: int, n: int) -> Matroid:
    return Matroid.uniform(r, n)


def wheel_graph_edges(n: int):
    """Hub 0, rim 1..n; spokes s1..sn then rim edges r1..rn."""
    spokes = [(f"s{i}", 0, i) for i in range(1, n + 1)]
    rim = [(f"r{i}", i, i % n + 1) for i in range(1, n + 1)]
    return n + 1, spokes + rim


def wheel(n: int) -> Matroid:
    if n < 3:
        raise InputError("wheel needs n >= 3")
    nv, edges = wheel_graph_edges(n)
    return Matroid.graphic(nv, edges)


def whirl(n: int) -> Matroid:
    """Rim relaxation of the rank-n wheel, as an explicit basis list."""
    if n < 2:
        raise InputError("whirl needs n >= 2")
    if n == 2:
        return Matroid.uniform(2, 4, ("s1", "s2", "r1", "r2"))
    w = wheel(n)
    rim_mask = w.mask_of(f"r{i}" for i in range(1, n + 1))
    bases = w.bases_masks() + (rim_mask,)
    return Matroid(w.ground, _basis_backend(bases, w.size))


def _basis_backend(masks, n):
    from .core import _BasisList

    return _BasisList(tuple(masks), n)


def relax(m: Matroid, circuit_hyperplane=None) -> Matroid:
    """Add a circuit-hyperplane as a basis; defaults to the canonically
    least one (smallest sorted index tuple)."""
    r = m.full_rank
    candidates = []
    for cmask in m.circuit_masks():
        if cmask.bit_count() == r and m.rank_mask(cmask) == r - 1 \
                and m.closure_mask(cmask) == cmask:
            candidates.append(cmask)
    if circuit_hyperplane is not None:
        want = m.mask_of(circuit_hyperplane)
        if want not in candidates:
            raise InputError("the given set is not a circuit-hyperplane")
        chosen = want
    else:
        if not candidates:
            raise InputError("matroid has no circuit-hyperplane to relax")
        chosen = candidates[0]
    return Matroid(m.ground, _basis_backend(m.bases_masks() + (chosen,), m.size))


def complete_graph(n: int) -> Matroid:
    edges = [(f"e{u}{v}", u, v) for u, v in itertools.combinations(range(n), 2)]
    return Matroid.graphic(n, edges)


def complete_bipartite(a: int, b: int) -> Matroid:
    edges = [(f"e{u}{v}", u, v) for u in range(a) for v in range(a, a + b)]
    return Matroid.graphic(a + b, edges)


def fano() -> Matroid:
    cols = [
        ("a", (1, 0, 0)), ("b", (0, 1, 0)), ("c", (0, 0, 1)),
        ("d", (0, 1, 1)), ("e", (1, 0, 1)), ("f", (1, 1, 0)), ("g", (1, 1, 1)),
    ]
    return Matroid.linear(2, cols)


def prism_graph() -> Matroid:
    """Two triangles joined by a perfect matching; each vertex star is a triad
    pairing the matching edge x_i with the opposite triangle edge."""
    edges = [
        ("p1", 1, 2), ("p2", 0, 2), ("p3", 0, 1),
        ("q1", 4, 5), ("q2", 3, 5), ("q3", 3, 4),
        ("x1", 0, 3), ("x2", 1, 4), ("x3", 2, 5),
    ]
    return Matroid.graphic(6, edges)


def q6() -> Matroid:
    """Double relaxation of the rank-3 wheel: exactly two 3-point lines."""
    return relax(relax(wheel(3)))


def p6() -> Matroid:
    """Triple relaxation: exactly one 3-point line remains."""
    return relax(q6())


_BUILDERS = {
    "uniform": (2, lambda r, n: uniform(r, n)),
    "wheel": (1, wheel),
    "whirl": (1, whirl),
    "mk": (1, complete_graph),
    "km": (2, complete_bipartite),
    "f7": (0, fano),
    "f7dual": (0, lambda: fano().dual()),
    "p6": (0, p6),
    "q6": (0, q6),
    "u36": (0, lambda: uniform(3, 6)),
    "mk33dual": (0, lambda: complete_bipartite(3, 3).dual()),
    "prismgraph": (0, prism_graph),
}

_EXPECTED = {
    # name: (elements, rank, check 3-connectivity, self-dual)
    "f7": (7, 3, True, False),
    "f7dual": (7, 4, True, False),
    "p6": (6, 3, True, None),
    "q6": (6, 3, True, None),
    "u36": (6, 3, True, True),
    "mk33dual": (9, 4, True, False),
    "prismgraph": (9, 5, True, None),
}

_cache: dict = {}
_checked: set = set()


def build(name: str, *params: int) -> Matroid:
    if name not in _BUILDERS:
        raise InputError(f"unknown catalog name {name!r}; known: {', '.join(sorted(_BUILDERS))}")
    arity, fn = _BUILDERS[name]
    if len(params) != arity:
        raise InputError(f"catalog entry {name!r} takes {arity} parameter(s), got {len(params)}")
    key = (name, params)
    if key in _cache:
        return _cache[key]
    m = fn(*params)
    _self_test(name, params, m)
    _cache[key] = m
    return m


def _self_test(name: str, params, m: Matroid):
    key = (name, params)
    if key in _checked:
        return
    _checked.add(key)
    if name in _EXPECTED:
        elements, rank, conn, selfdual = _EXPECTED[name]
    elif name == "uniform":
        r, n = params
        elements, rank, conn, selfdual = n, r, None, None
    elif name in ("wheel", "whirl"):
        n = params[0]
        elements, rank, selfdual = 2 * n, n, None
        conn = n >= 3 and 2 * n <= 12
    elif name == "mk":
        n = params[0]
        elements, rank = n * (n - 1) // 2, n - 1
        conn = n >= 3 and elements <= 12
        selfdual = None
    else:
        return
    if m.size != elements:
        raise InputError(f"catalog self-test: {name}{params} has {m.size} elements, expected {elements}")
    if m.full_rank != rank:
        raise InputError(f"catalog self-test: {name}{params} has rank {m.full_rank}, expected {rank}")
    if conn and not connectivity.is_3connected(m):
        raise InputError(f"catalog self-test: {name}{params} should be 3-connected")
    if selfdual is not None and m.size <= 10:
        got = iso.are_isomorphic(m, m.dual())
        if got != selfdual:
            raise InputError(f"catalog self-test: {name}{params} self-duality mismatch")


def resolve(ref: str, extra: dict | None = None) -> Matroid:
    """Resolve a textual matroid reference: a file-defined name from `extra`,
    a catalog call like wheel:5 / uniform:2,4, or an alias like u24, whirl3."""
    if extra and ref in extra:
        return extra[ref]
    if ":" in ref:
        name, _, arg = ref.partition(":")
        try:
            params = tuple(int(x) for x in arg.split(",") if x != "")
        except ValueError:
            raise InputError(f"bad catalog parameters in {ref!r}") from None
        return build(name, *params)
    if ref in _BUILDERS and _BUILDERS[ref][0] == 0:
        return build(ref)
    alias = _parse_alias(ref)
    if alias is not None:
        return build(*alias)
    known = sorted(_BUILDERS) + ["u<r><n>", "wheel<n>", "whirl<n>", "k<n>"]
    extras = sorted(extra) if extra else []
    raise InputError(
        f"cannot resolve matroid reference {ref!r}; known names: "
        + ", ".join(extras + known))


def _parse_alias(ref: str):
    if len(ref) == 3 and ref[0] == "u" and ref[1:].isdigit():
        return ("uniform", int(ref[1]), int(ref[2]))
    for prefix, name in (("wheel", "wheel"), ("whirl", "whirl"), ("k", "mk")):
        if ref.startswith(prefix) and ref[len(prefix):].isdigit():
            return (name, int(ref[len(prefix):]))
    return None


def standard_corpus() -> list[tuple[str, Matroid]]:
    """The named instances exercised by the exhaustive kernel suites."""
    refs = [
        "u11", "u12", "u13", "u23", "u24", "u25", "u36",
        "wheel:3", "wheel:4", "wheel:5", "wheel:6",
        "whirl:3", "whirl:4", "whirl:5",
        "mk:4", "mk:5", "km:3,3", "mk33dual",
        "f7", "f7dual", "p6", "q6", "prismgraph",
    ]
    return [(ref, resolve(ref)) for ref in refs]
