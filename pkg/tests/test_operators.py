import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filtersums import filters as fl
from filtersums import operators as op
from filtersums import oracle
from filtersums import sampling as sp
from filtersums import sums as sm
from filtersums.suites import nonassoc_matrices
from filtersums.symsets import FiniteU, IntHalfLine, IntLine, SymSet

Z, ZID, N = IntLine(), IntLine("identity"), IntHalfLine()
D = fl.dcc(Z)
GEO = sm.char_fn(SymSet.interval(Z, 0))
ONE_MINUS_T = op.conv(Z, Z, sm.fsum(Z, {0: 1, 1: -1}), "s")
seeds = st.integers(0, 2**32)


def test_laurent_inverse():
    assert op.is_continuous_left(ONE_MINUS_T, D, D).is_yes
    assert op.check_m1(ONE_MINUS_T, D, D).is_yes and op.check_m2(ONE_MINUS_T, D, D).is_yes
    assert op.mat_vec(ONE_MINUS_T, GEO) == sm.delta(Z, 0)
    G = op.conv(Z, Z, GEO, "s")
    assert op.ring_mul(ONE_MINUS_T, G, D) == op.identity(Z)
    assert op.ring_mul(G, ONE_MINUS_T, D) == op.identity(Z)


def test_twisted_unit():
    for u in (Z, ZID, FiniteU(4, (3, 2, 1, 0))):
        E = op.identity(u)
        a = sp.finite_sum(random.Random(7), u, 3)
        assert op.mat_vec(E, a) == a
        assert op.vec_mat(a.as_row(), E) == a.as_row()
    E = op.identity(Z)
    assert E.entry(-3, 3) == 1 and E.entry(3, 3) == 0
    assert op.mat_vec(ONE_MINUS_T, sm.zero(Z)).is_zero()


def test_nonassociativity_exact():
    phi, psi, theta = nonassoc_matrices()
    left = op.mat_mul(op.mat_mul(phi, psi), theta)
    right = op.mat_mul(phi, op.mat_mul(psi, theta))
    assert left.entry(0, 0) == Fraction(1)
    assert right.entry(0, 0) == Fraction(0)
    with pytest.raises(ArithmeticError):
        op.alternating_product([phi, psi, theta])


def test_rank_one_product_is_continuous():
    b = sm.fsum(Z, {0: 1, 2: -1})
    beta = sm.char_fn(SymSet.interval(Z, -3), side="row")
    M = op.outer(b, beta)
    assert op.is_continuous_left(M, D, D).is_yes
    assert op.check_m1(M, D, D).is_yes and op.check_m2(M, D, D).is_yes


def test_all_ones_is_not_continuous_for_cofinite_filters():
    ones = op.conv(Z, Z, sm.char_fn(SymSet.full(Z)), "s")
    C = fl.cof(Z)
    # every row vanishes nowhere, but the perp of Cof admits the empty set
    assert op.check_m1(ones, C, C).is_yes
    assert op.check_m2(ones, C, C).is_no
    assert op.is_continuous_left(ones, C, C).is_no
    with pytest.raises(op.NotContinuous):
        op.ring_mul(ones, ones, C)


def test_finite_universes_are_always_continuous():
    u = FiniteU(3)
    M = op.explicit(u, u, {(0, 1): 2, (2, 2): -1})
    for F in (fl.all_(u), fl.cof(u)):
        assert op.is_continuous_left(M, F, F).is_yes


def test_balanced_filters_required():
    P = fl.principal(Z, SymSet.make(Z, [(0, 3)]))
    with pytest.raises(op.NonBalanced):
        op.is_continuous_left(ONE_MINUS_T, P, D)


def test_dual_form_and_witness():
    form = op.dual_form(sm.delta(Z, 0, side="row"), D)
    assert form(GEO) == 1
    with pytest.raises(op.UndefinedProduct) as e:
        op.dual_form(GEO.star().as_row(), D)
    h = e.value.witness
    assert sm.in_space(h, D).is_yes and not sm.pairing_defined(GEO.star().as_row(), h)


def test_product_dispatch():
    a, gamma = sm.delta(Z, 1), sm.delta(Z, -1, side="row")
    assert op.product(gamma, a) == 1
    assert isinstance(op.product(a, gamma), op.Finitary)
    assert op.product(Fraction(2), Fraction(3)) == 6
    with pytest.raises(ValueError):
        op.product(a, a)


def test_convolutions_compose():
    A = op.conv(Z, Z, sm.fsum(Z, {0: 1, 1: 2}), "s")
    B = op.conv(Z, Z, sm.fsum(Z, {0: 3, -1: 1}), "s")
    AB = op.mat_mul(A, B)
    a = sm.fsum(Z, {0: 1, 4: -2})
    assert op.mat_vec(AB, a) == op.mat_vec(A, op.mat_vec(B, a))


@settings(max_examples=120, deadline=None)
@given(seeds, st.sampled_from([Z, ZID, N]))
def test_mat_vec_matches_window_sum(seed, u):
    r = random.Random(seed)
    M = sp.matrix(r, u, u, 3)
    a = sp.formal_sum(r, u, 3)
    try:
        v = op.mat_vec(M, a)
    except (op.UndefinedProduct, sm.UnrepresentableResult):
        return
    for h in range(max(-6, u.lo), 7):
        assert v.at(h) == oracle.mat_vec_entry(M.entry, a, h, 40)


@settings(max_examples=120, deadline=None)
@given(seeds, st.sampled_from([Z, ZID, N]))
def test_vec_mat_matches_window_sum(seed, u):
    r = random.Random(seed)
    M = sp.matrix(r, u, u, 3)
    gamma = sp.formal_sum(r, u, 3, side="row")
    try:
        v = op.vec_mat(gamma, M)
    except (op.UndefinedProduct, sm.UnrepresentableResult):
        return
    for g in range(max(-6, u.lo), 7):
        assert v.at(g) == oracle.vec_mat_entry(gamma, M.entry, g, 40)


@settings(max_examples=120, deadline=None)
@given(seeds, st.sampled_from([Z, ZID, N]))
def test_continuity_equals_m1_and_m2(seed, u):
    r = random.Random(seed)
    M = sp.matrix(r, u, u, 3)
    FG, FH = sp.balanced_atom(r, u), sp.balanced_atom(r, u)
    cl = op.is_continuous_left(M, FG, FH)
    m1, m2 = op.check_m1(M, FG, FH), op.check_m2(M, FG, FH)
    if cl.decided and m1.decided and m2.decided:
        assert cl.is_yes == (m1.is_yes and m2.is_yes)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_zero_set_matches_entries(seed):
    r = random.Random(seed)
    M = sp.matrix(r, Z, Z, 3)
    try:
        S = M.zero_set()
    except sm.UnrepresentableResult:
        return
    for h in range(-8, 9):
        for g in range(-8, 9):
            assert S.contains(h, g) == (M.entry(h, g) == 0)
