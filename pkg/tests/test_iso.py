"""Isomorphism search: correctness against brute force, invariants, bounds."""

import itertools
import random

import pytest

from matroidkit import catalog
from matroidkit.core import Matroid
from matroidkit.errors import ResourceLimitError
from matroidkit.iso import are_isomorphic, isomorphism


def test_k4_isomorphic_to_rank3_wheel():
    mapping = isomorphism(catalog.resolve("mk:4"), catalog.resolve("wheel:3"))
    assert mapping is not None


def test_u24_not_isomorphic_to_k4():
    assert isomorphism(catalog.resolve("u24"), catalog.resolve("mk:4")) is None


def test_whirl_differs_from_wheel_brute_force():
    w3 = catalog.resolve("wheel:3")
    wh3 = catalog.resolve("whirl:3")
    assert not are_isomorphic(w3, wh3)
    # independent confirmation over all 720 bijections: some subset rank differs
    ground_w = w3.ground
    ground_h = wh3.ground
    for perm in itertools.permutations(range(6)):
        ok = True
        for mask in range(1, 64):
            sub_w = [ground_w[i] for i in range(6) if mask >> i & 1]
            sub_h = [ground_h[perm[i]] for i in range(6) if mask >> i & 1]
            if w3.rank(sub_w) != wh3.rank(sub_h):
                ok = False
                break
        assert not ok


def test_reflexive_and_symmetric(small_corpus):
    for name, m in small_corpus:
        assert are_isomorphic(m, m)
    pairs = [("u24", "f7"), ("wheel:4", "whirl:4"), ("p6", "q6"), ("u36", "p6")]
    for a, b in pairs:
        ma, mb = catalog.resolve(a), catalog.resolve(b)
        assert are_isomorphic(ma, mb) == are_isomorphic(mb, ma)


def test_bijection_preserves_rank_on_random_subsets():
    rng = random.Random(7)
    w3 = catalog.resolve("wheel:3")
    k4 = catalog.resolve("mk:4")
    mapping = isomorphism(w3, k4)
    assert mapping is not None
    ground = w3.ground
    for _ in range(1000):
        sub = [x for x in ground if rng.random() < 0.5]
        assert w3.rank(sub) == k4.rank(mapping[x] for x in sub)


def test_distinguishes_relaxations():
    # the relaxation chain is strictly decreasing in triangle count
    chain = ["mk:4", "whirl:3", "q6", "p6", "u36"]
    ms = [catalog.resolve(r) for r in chain]
    for a, b in itertools.combinations(ms, 2):
        assert not are_isomorphic(a, b)


def test_isomorphic_with_scrambled_labels():
    u25 = catalog.resolve("u25")
    scrambled = Matroid.uniform(2, 5, labels=("v", "w", "x", "y", "z"))
    mapping = isomorphism(u25, scrambled)
    assert mapping is not None and set(mapping.values()) == set("vwxyz")


def test_size_bound():
    big = Matroid.uniform(3, 13)
    with pytest.raises(ResourceLimitError):
        isomorphism(big, big)
