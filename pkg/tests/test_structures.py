"""Configuration detection/classification and web-pattern detection.

Golden instances were surfaced by exhaustive detection over the shipped
corpus and are frozen here: the prism-graph matroid against M(K_4) for
disconnected configurations and full webs, and the manifest's 8-element
binary matroid against U_{2,3} for connected configurations.
"""

import pytest

from matroidkit import catalog, minors, structures
from matroidkit.core import Matroid
from matroidkit.errors import InputError
from matroidkit.structures import (fan_patterns, find_configurations, find_webs,
                                   rank3_cocircuits, triweb_patterns)


def b8():
    pts = [("e1", (0, 0, 0, 1)), ("e2", (0, 0, 1, 0)), ("e3", (0, 0, 1, 1)),
           ("e4", (0, 1, 0, 0)), ("e5", (0, 1, 0, 1)), ("e6", (1, 0, 0, 0)),
           ("e7", (1, 0, 0, 1)), ("e8", (1, 1, 1, 0))]
    return Matroid.linear(2, pts)


def test_no_rank3_cocircuit_means_no_configurations():
    # K_5 has minimum cut size 4 and every 4-edge cut is independent
    mk5 = catalog.resolve("mk:5")
    assert rank3_cocircuits(mk5) == ()
    assert find_configurations(mk5, catalog.resolve("mk:4")) == ()


def test_prism_disconnected_configurations_golden():
    cfgs = find_configurations(catalog.resolve("prismgraph"), catalog.resolve("mk:4"))
    got = {(tuple(sorted(c.cstar)), c.p, c.connected,
            tuple(sorted(c.line)), c.coloop) for c in cfgs}
    assert got == {
        (("p1", "p2", "x3"), "p3", False, ("p1", "p2", "p3"), "x3"),
        (("p1", "p3", "x2"), "p2", False, ("p1", "p2", "p3"), "x2"),
        (("p2", "p3", "x1"), "p1", False, ("p1", "p2", "p3"), "x1"),
        (("q1", "q2", "x3"), "q3", False, ("q1", "q2", "q3"), "x3"),
        (("q1", "q3", "x2"), "q2", False, ("q1", "q2", "q3"), "x2"),
        (("q2", "q3", "x1"), "q1", False, ("q1", "q2", "q3"), "x1"),
    }
    for c in cfgs:
        assert c.decomposition_ok
        assert c.minimum
        assert c.coloop not in c.line
        assert c.p in c.line


def test_b8_connected_configurations_golden():
    cfgs = find_configurations(b8(), catalog.resolve("u23"))
    connected = {(tuple(sorted(c.cstar)), c.p, tuple(sorted(c.four_circuit)))
                 for c in cfgs if c.connected}
    assert connected == {
        (("e2", "e3", "e4", "e5"), "e1", ("e2", "e3", "e4", "e5")),
        (("e2", "e3", "e6", "e7"), "e1", ("e2", "e3", "e6", "e7")),
        (("e4", "e5", "e6", "e7"), "e1", ("e4", "e5", "e6", "e7")),
    }
    disconnected = [c for c in cfgs if not c.connected]
    assert len(disconnected) == 3
    for c in cfgs:
        assert c.decomposition_ok
    for c in disconnected:
        assert not c.minimum or len(c.cstar) == 3


def test_configuration_lines_are_flats():
    for mr, nr in (("prismgraph", "mk:4"),):
        m, n = catalog.resolve(mr), catalog.resolve(nr)
        for c in find_configurations(m, n):
            if not c.connected:
                assert m.closure(c.line) == c.line
                assert m.rank(c.line) == 2


def test_w37b_holds_on_found_configurations():
    # cross-module property: every cocircuit member pairs contractibly
    cases = [("prismgraph", "mk:4"), ("b8", "u23")]
    for mr, nr in cases:
        m = b8() if mr == "b8" else catalog.resolve(mr)
        n = catalog.resolve(nr)
        for c in find_configurations(m, n):
            for x in c.cstar:
                assert minors.is_vnc_set(m, n, (x, c.p)), (mr, x, c.p)


def test_prism_webs_golden():
    prism = catalog.resolve("prismgraph")
    k4 = catalog.resolve("mk:4")
    biwebs = find_webs(prism, k4, "biweb")
    assert len(biwebs) == 6
    assert all(w.conditions == {"BW1": True, "BW2": True, "BW3": True, "BW": True}
               for w in biwebs)
    triwebs = find_webs(prism, k4, "triweb")
    assert {(w.edges, w.triangle_p) for w in triwebs} == {
        (("x1", "x2", "x3"), ("p1", "p2", "p3")),
        (("x1", "x2", "x3"), ("q1", "q2", "q3")),
    }
    prisms = find_webs(prism, k4, "prism")
    assert len(prisms) == 1
    rec = prisms[0]
    assert rec.edges == ("x1", "x2", "x3")
    assert set(rec.triangle_p) == {"p1", "p2", "p3"}
    assert set(rec.triangle_q) == {"q1", "q2", "q3"}
    # triangle alignment follows the shared edge pairing
    pairing = dict(zip(rec.edges, rec.triangle_q))
    assert pairing == {"x1": "q1", "x2": "q2", "x3": "q3"}


def test_no_triads_no_webs():
    mk5 = catalog.resolve("mk:5")
    k4 = catalog.resolve("mk:4")
    for kind in ("biweb", "triweb", "prism"):
        assert find_webs(mk5, k4, kind) == ()


def test_webs_unknown_kind():
    with pytest.raises(InputError):
        find_webs(catalog.resolve("u24"), catalog.resolve("u24"), "pentagon")


def test_weak_condition_implies_full_biweb():
    # wherever the weak condition holds on a fan pattern, the full
    # condition set holds too
    cases = [("prismgraph", "mk:4"), ("whirl:3", "u24"), ("wheel:5", "mk:4")]
    for mr, nr in cases:
        m, n = catalog.resolve(mr), catalog.resolve(nr)
        tests = structures.default_web_tests(m, n)
        for x1, x2, p1, p2, p3 in fan_patterns(m):
            conds = structures._biweb_conditions(tests, x1, x2, p1, p2, p3)
            if conds["BW"]:
                assert conds["BW1"] and conds["BW2"] and conds["BW3"], (mr, x1, p1)


def test_tw1_implies_tw2_on_detected_patterns():
    cases = [("prismgraph", "mk:4"), ("wheel:4", "mk:4")]
    for mr, nr in cases:
        m, n = catalog.resolve(mr), catalog.resolve(nr)
        tests = structures.default_web_tests(m, n)
        for xs_ps in triweb_patterns(m):
            xs, ps = xs_ps[:3], xs_ps[3:]
            conds = structures._triweb_conditions(tests, xs, ps)
            if conds["TW1"]:
                assert conds["TW2"], (mr, xs_ps)


def test_fan_patterns_canonical_and_unique():
    prism = catalog.resolve("prismgraph")
    pats = fan_patterns(prism)
    assert len(pats) == len(set(pats))
    for x1, x2, p1, p2, p3 in pats:
        assert prism.index_of(x1) < prism.index_of(x2)
        assert frozenset((x1, p2, p3)) in set(prism.triads())
        assert frozenset((x2, p1, p3)) in set(prism.triads())
        assert prism.rank((p1, p2, p3)) == 2


def test_wheel_fan_patterns_exist():
    w5 = catalog.resolve("wheel:5")
    assert len(fan_patterns(w5)) == 5  # one per rim triangle


def test_rank3_cocircuits_include_large_ones():
    m = b8()
    sizes = sorted(len(c) for c in rank3_cocircuits(m))
    assert 4 in sizes  # the connected-configuration cocircuits have 4 elements


def test_classify_configuration_direct():
    prism = catalog.resolve("prismgraph")
    cfg = structures.classify_configuration(
        prism, frozenset(("p1", "p2", "x3")), "p3", "p1")
    assert not cfg.connected
    assert cfg.line == frozenset(("p1", "p2", "p3"))
    assert cfg.coloop == "x3"
    assert cfg.minimum and cfg.decomposition_ok
