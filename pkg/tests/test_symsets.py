import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filtersums import sampling as sp
from filtersums.symsets import (INF, NEG_INF, Cell, FiniteU, IntHalfLine, IntLine, ProdSet, ProductU,
                                SymSet, UniverseError, UnorderedUniverse, rationals)

Z, ZID, N = IntLine(), IntLine("identity"), IntHalfLine()
UNIVERSES = [Z, ZID, N, FiniteU(5), FiniteU(4, (1, 0, 3, 2))]
W = 40

seeds = st.integers(0, 2**32)


def window(u):
    return range(max(-W, u.lo), min(W, u.hi) + 1)


def brute(X):
    return {x for x in window(X.universe) if X.contains(x)}


def shell_empty(u, pts):
    return not any(abs(x) > W // 2 for x in pts)


def test_canonical_form():
    X = SymSet.make(Z, [(3, 5), (6, 8), (-2, -2), (10, 9)])
    assert X.ivs == ((-2, -2), (3, 8))
    assert SymSet.full(N).ivs == ((0, INF),)
    assert SymSet.interval(N, NEG_INF, 3).ivs == ((0, 3),)
    assert X.to_dsl() == "union([-2..-2],[3..8])"
    assert SymSet.interval(Z, 5).to_dsl() == "[5..inf)"


def test_orders_and_chains():
    X = SymSet.interval(Z, 0)
    assert X.has_dcc() and not X.has_acc()
    assert X.star().has_acc()
    assert X.star() == SymSet.interval(Z, NEG_INF, 0)
    assert SymSet.interval(ZID, 0).star() == SymSet.interval(ZID, 0)
    with pytest.raises(UnorderedUniverse):
        SymSet.full(FiniteU(3, ordered=False)).has_dcc()


def test_universe_errors():
    with pytest.raises(UniverseError):
        FiniteU(3, (1, 2, 0))
    with pytest.raises(UniverseError):
        SymSet.full(Z) | SymSet.full(N)
    with pytest.raises(UniverseError):
        rationals()


@settings(max_examples=150)
@given(seeds, st.sampled_from(UNIVERSES))
def test_boolean_algebra_matches_points(seed, u):
    r = random.Random(seed)
    X, Y = sp.symset(r, u), sp.symset(r, u)
    bx, by = brute(X), brute(Y)
    allp = set(window(u))
    assert brute(X | Y) == bx | by
    assert brute(X & Y) == bx & by
    assert brute(X - Y) == bx - by
    assert brute(~X) == allp - bx
    assert brute(X.star()) == {x for x in allp if X.contains(u.star(x))}
    assert (X <= Y) == (bx <= by)
    assert X.is_finite() == shell_empty(u, bx)
    assert X.is_cofinite() == shell_empty(u, allp - bx)
    for e in u.ends:
        far = [x for x in allp if (x > W // 2 if e == "+" else x < -W // 2)]
        assert X.has_ray(e) == all(x in bx for x in far)
    assert ~~X == X
    assert X.star().star() == X


@settings(max_examples=100)
@given(seeds, st.sampled_from([Z, N]))
def test_product_sets_match_points(seed, u):
    r = random.Random(seed)
    U = ProductU(u, u)
    X, Y = sp.prodset(r, U), sp.prodset(r, U)
    pts = list(product(range(max(-12, u.lo), 13), repeat=2))

    def b(S):
        return {p for p in pts if S.contains(*p)}

    assert b(X | Y) == b(X) | b(Y)
    assert b(X & Y) == b(X) & b(Y)
    assert b(~X) == set(pts) - b(X)
    assert (X & ~X).is_empty()
    assert X.equivalent(~~X)


def test_product_projections_and_sections():
    B, A = SymSet.make(Z, [(0, 2)]), SymSet.interval(Z, 5)
    R = ProdSet.rect(B, A)
    assert R.project_h() == B and R.project_g() == A
    assert R.section_at_h(1) == A and R.section_at_h(3).is_empty()
    S = ProdSet.stripe(ProductU(Z, Z), "d", SymSet.make(Z, [(0, 0)]))
    assert S.contains(7, 7) and not S.contains(7, 8)
    assert not S.is_finite() and S.section_at_h(4) == SymSet.make(Z, [(4, 4)])
    assert ProdSet.points_of(ProductU(Z, Z), [(1, 2), (3, 4)]).size() == 2
    assert Cell(0, 3, 0, 3, sl=6).contains(3, 3) and not Cell(0, 3, 0, 3, sl=6).contains(2, 3)
