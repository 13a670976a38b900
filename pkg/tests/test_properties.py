"""Property tests: rank axioms and duality on randomized small matroids."""

import itertools

from hypothesis import given, settings, strategies as st

from matroidkit import catalog
from matroidkit.core import Matroid


@st.composite
def small_gf3_matroids(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    r = draw(st.integers(min_value=1, max_value=3))
    cols = [tuple(draw(st.integers(min_value=0, max_value=2)) for _ in range(r))
            for _ in range(n)]
    return Matroid.linear(3, [(f"e{i}", c) for i, c in enumerate(cols)])


@st.composite
def small_graphic_matroids(draw):
    nv = draw(st.integers(min_value=2, max_value=5))
    ne = draw(st.integers(min_value=1, max_value=7))
    edges = [(f"e{i}",
              draw(st.integers(min_value=0, max_value=nv - 1)),
              draw(st.integers(min_value=0, max_value=nv - 1)))
             for i in range(ne)]
    return Matroid.graphic(nv, edges)


def _all_subsets(m):
    for mask in range(1 << m.size):
        yield [m.ground[i] for i in range(m.size) if mask >> i & 1]


@given(small_gf3_matroids())
@settings(max_examples=60, deadline=None)
def test_rank_axioms_gf3(m):
    assert m.rank(()) == 0
    ground = m.ground
    for x in ground:
        assert 0 <= m.rank((x,)) <= 1
    # local monotonicity + submodularity over every subset and element pair
    for sub in _all_subsets(m):
        base = m.rank(sub)
        for e, f in itertools.combinations(ground, 2):
            if e in sub or f in sub:
                continue
            re = m.rank(sub + [e])
            rf = m.rank(sub + [f])
            ref = m.rank(sub + [e, f])
            assert base <= re <= base + 1
            assert re + rf >= ref + base


@given(small_graphic_matroids())
@settings(max_examples=60, deadline=None)
def test_duality_graphic(m):
    dual = m.dual()
    assert set(dual.circuit_masks()) == set(m.cocircuit_masks())
    for sub in _all_subsets(m):
        comp = [x for x in m.ground if x not in sub]
        assert dual.rank(sub) == len(sub) + m.rank(comp) - m.full_rank


@given(small_gf3_matroids())
@settings(max_examples=40, deadline=None)
def test_simplify_idempotent_random(m):
    s1, map1 = m.simplify()
    s2, map2 = s1.simplify()
    assert s2.ground == s1.ground
    assert set(map1.values()) == set(s1.ground)
    for x, rep in map1.items():
        assert m.rank((x, rep)) == 1 or x == rep


def test_exhaustive_rank_axioms_on_catalog():
    # normalization, monotonicity, submodularity over exhaustive local triples
    for name, m in catalog.standard_corpus():
        if m.size > 8:
            continue
        assert m.rank(()) == 0
        ground = m.ground
        for sub in _all_subsets(m):
            base = m.rank(sub)
            for e in ground:
                if e not in sub:
                    assert base <= m.rank(sub + [e]) <= base + 1
        for sub in _all_subsets(m):
            base = m.rank(sub)
            for e, f in itertools.combinations(ground, 2):
                if e in sub or f in sub:
                    continue
                assert (m.rank(sub + [e]) + m.rank(sub + [f])
                        >= m.rank(sub + [e, f]) + base), (name, sub, e, f)
