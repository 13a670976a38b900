"""Pinned minor search, witnesses, and vertically contractible elements."""

import itertools

import pytest

from matroidkit import catalog, minors
from matroidkit.core import Matroid
from matroidkit.errors import ResourceLimitError
from matroidkit.minors import has_minor, is_vnc_set, verify_witness, vnc_elements


def test_u25_has_pinned_u24():
    u25 = catalog.resolve("u25")
    u24 = catalog.resolve("u24")
    w = has_minor(u25, u24, pinned=("a", "b"))
    assert w is not None
    assert not w.contracted
    assert len(w.deleted) == 1 and w.deleted[0] in ("c", "d", "e")
    assert verify_witness(u25, u24, w)


def test_k4_has_no_u24_minor():
    assert has_minor(catalog.resolve("mk:4"), catalog.resolve("u24")) is None


def test_binary_excludes_u24(small_corpus):
    u24 = catalog.resolve("u24")
    for name, m in small_corpus:
        if name in ("wheel:3", "wheel:4", "wheel:5", "mk:4", "f7", "f7dual",
                    "km:3,3", "mk33dual"):
            assert has_minor(m, u24) is None, name


def test_wheel6_contains_wheel3():
    w = has_minor(catalog.resolve("wheel:6"), catalog.resolve("wheel:3"))
    assert w is not None
    assert verify_witness(catalog.resolve("wheel:6"), catalog.resolve("wheel:3"), w)


def test_pinned_witness_avoids_pins():
    w5 = catalog.resolve("wheel:5")
    k4 = catalog.resolve("mk:4")
    w = has_minor(w5, k4, pinned=("s1", "r1"))
    assert w is not None
    touched = set(w.contracted) | set(w.deleted)
    assert not touched & {"s1", "r1"}


def test_every_u25_pair_extends_to_u24():
    u25 = catalog.resolve("u25")
    u24 = catalog.resolve("u24")
    for pair in itertools.combinations(u25.ground, 2):
        assert has_minor(u25, u24, pinned=pair) is not None


def test_minor_of_dual_is_dual_of_minor(small_corpus):
    cases = [("wheel:4", "wheel:3"), ("u25", "u24"), ("whirl:4", "u24"),
             ("f7", "mk:4"), ("q6", "u24")]
    for mr, nr in cases:
        m, n = catalog.resolve(mr), catalog.resolve(nr)
        assert (has_minor(m, n) is not None) == \
            (has_minor(m.dual(), n.dual()) is not None), (mr, nr)


def test_nonsimple_target():
    u12 = catalog.resolve("u12")
    u25 = catalog.resolve("u25")
    w = has_minor(u25, u12)
    assert w is not None and verify_witness(u25, u12, w)


def test_vnc_caveat_pair_is_empty():
    # rank-2 host with a rank-1 two-element target: contraction plus
    # simplification leaves a single element, which carries no such minor
    rep = vnc_elements(catalog.resolve("u25"), catalog.resolve("u12"))
    assert rep.elements == frozenset()
    assert rep.rank == 0


def test_vnc_same_matroid_empty():
    f7 = catalog.resolve("f7")
    rep = vnc_elements(f7, f7)
    assert rep.elements == frozenset()


def test_vnc_wheel6_vs_k4():
    rep = vnc_elements(catalog.resolve("wheel:6"), catalog.resolve("mk:4"))
    assert len(rep.elements) >= 3
    assert rep.rank >= 3  # contains a 3-independent subset


def test_vnc_empty_set_is_host_test():
    w4 = catalog.resolve("wheel:4")
    k4 = catalog.resolve("mk:4")
    assert is_vnc_set(w4, k4, ())
    assert not is_vnc_set(k4, catalog.resolve("u24"), ())


def test_vnc_pairs_on_demand():
    prism = catalog.resolve("prismgraph")
    k4 = catalog.resolve("mk:4")
    rep = vnc_elements(prism, k4, pairs=[("x1", "p1"), ("p1", "p2")])
    assert frozenset(("x1", "p1")) in rep.pairs


def test_witness_mapping_preserves_rank():
    w5 = catalog.resolve("wheel:5")
    w3 = catalog.resolve("wheel:3")
    w = has_minor(w5, w3)
    assert w is not None
    minor = w5.contract(w.contracted).delete(w.deleted)
    for k in (1, 2, 3):
        for sub in itertools.combinations(minor.ground, k):
            assert minor.rank(sub) == w3.rank(w.mapping[x] for x in sub)


def test_search_is_deterministic():
    w6 = catalog.resolve("wheel:6")
    k4 = catalog.resolve("mk:4")
    a = has_minor(w6, k4)
    b = has_minor(w6, k4)
    assert a.contracted == b.contracted and a.deleted == b.deleted


def test_target_size_bound():
    big = Matroid.uniform(6, 13)
    small = Matroid.uniform(6, 13)
    with pytest.raises(ResourceLimitError):
        has_minor(big, small)


def test_gap_bound():
    host = Matroid.uniform(10, 12)
    target = Matroid.uniform(1, 2)
    with pytest.raises(ResourceLimitError):
        has_minor(host, target)


def test_si_after_contraction_prefer():
    u24 = catalog.resolve("u24")
    si = minors.si_after_contraction(u24, ("a",), prefer=("c",))
    assert si.ground == ("c",)
