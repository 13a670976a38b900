"""Separation search and 3-connectivity decisions with certificates."""

import pytest

from matroidkit import catalog, connectivity
from matroidkit.connectivity import find_separation, is_3connected, is_connected
from matroidkit.core import Matroid
from matroidkit.errors import ResourceLimitError


def test_u24_has_no_2separation():
    assert find_separation(catalog.resolve("u24"), 2) is None
    assert is_3connected(catalog.resolve("u24"))


def test_direct_sum_splits_at_order_1():
    two_triangles = Matroid.graphic(6, [
        ("a", 0, 1), ("b", 1, 2), ("c", 2, 0),
        ("d", 3, 4), ("e", 4, 5), ("f", 5, 3)])
    sep = find_separation(two_triangles, 1)
    assert sep is not None and sep.order == 1
    assert sep.side_a in (frozenset("abc"), frozenset("def"))
    assert sep.verify()


def test_wheel4_exhaustive_no_2separation():
    w4 = catalog.resolve("wheel:4")
    assert find_separation(w4, 2) is None
    # independent exhaustive recheck straight from the definition
    n = w4.size
    ground = w4.ground
    r = w4.full_rank
    for mask in range(1, (1 << n) - 1):
        side_a = [ground[i] for i in range(n) if mask >> i & 1]
        side_b = [ground[i] for i in range(n) if not mask >> i & 1]
        for k in (1, 2):
            if len(side_a) >= k and len(side_b) >= k:
                assert w4.rank(side_a) + w4.rank(side_b) - r + 1 > k


def test_ground_truth_3connected():
    for ref in ("u24", "mk:4", "f7", "whirl:3", "wheel:3", "wheel:4",
                "wheel:5", "wheel:6", "prismgraph"):
        assert is_3connected(catalog.resolve(ref)), ref


def test_loops_and_parallel_pairs_break_connectivity():
    loopy = Matroid.graphic(3, [("a", 0, 1), ("b", 1, 2), ("c", 2, 0), ("l", 1, 1)])
    assert not is_connected(loopy)
    doubled = Matroid.graphic(4, [("a", 0, 1), ("a2", 0, 1), ("b", 1, 2),
                                  ("c", 2, 3), ("d", 3, 0)])
    assert not is_3connected(doubled)
    assert is_connected(doubled)


def test_small_matroid_conventions():
    assert is_3connected(Matroid.uniform(1, 1))
    assert is_3connected(Matroid.uniform(1, 2))
    assert is_3connected(Matroid.uniform(1, 3))
    assert is_3connected(Matroid.uniform(2, 3))
    assert not is_3connected(Matroid.uniform(2, 2))  # two coloops
    assert not is_connected(Matroid.uniform(2, 2))


def test_separation_order_symmetric(small_corpus):
    for name, m in small_corpus:
        for k in (1, 2):
            sep = find_separation(m, k)
            if sep is not None:
                a = m.rank(sep.side_a)
                b = m.rank(sep.side_b)
                assert a + b - m.full_rank + 1 == sep.order
                # symmetry of the connectivity function
                assert sep.order == m.rank(sep.side_b) + m.rank(sep.side_a) - m.full_rank + 1


def test_3connectivity_dual_invariant(corpus):
    for name, m in corpus:
        if m.size <= 12:
            assert is_3connected(m) == is_3connected(m.dual()), name


def test_no_separation_means_definition_holds():
    m = catalog.resolve("whirl:4")
    if find_separation(m, 2) is None:
        n = m.size
        ground = m.ground
        for mask in range(1, (1 << n) - 1):
            side_a = [ground[i] for i in range(n) if mask >> i & 1]
            if 2 <= len(side_a) <= n - 2:
                side_b = [x for x in ground if x not in side_a]
                assert m.rank(side_a) + m.rank(side_b) - m.full_rank >= 2


def test_vertically_contractible_examples():
    w3 = catalog.resolve("wheel:3")
    assert connectivity.is_vertically_contractible(w3, ("s1",))
    u25 = catalog.resolve("u25")
    assert connectivity.is_vertically_contractible(u25, ("a",))  # si = single element
    for name in ("u24", "f7"):
        m = catalog.resolve(name)
        assert connectivity.is_vertically_contractible(m, ()) == is_3connected(m)


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv("MATROID_CAPS", "4")
    with pytest.raises(ResourceLimitError):
        find_separation(catalog.resolve("u25"), 2)
