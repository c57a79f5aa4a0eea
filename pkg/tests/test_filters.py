import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filtersums import filters as fl
from filtersums import oracle
from filtersums import sampling as sp
from filtersums.symsets import INF, NEG_INF, Cell, FiniteU, IntHalfLine, IntLine, ProdSet, ProductU, SymSet

Z, ZID, N = IntLine(), IntLine("identity"), IntHalfLine()
ZZ = ProductU(Z, Z)


def iv(a=NEG_INF, b=INF, u=Z):
    return SymSet.interval(u, a, b)


def test_dcc_membership_examples():
    assert fl.member(fl.Dcc(Z), iv(b=0)).is_yes
    assert fl.member(fl.Dcc(Z), iv(0)).is_no
    assert fl.member(fl.Perp(fl.Dcc(Z)), iv(5)).is_yes
    assert fl.member_def(fl.Perp(fl.Dcc(Z)), iv(5)).is_yes


def test_perp_normalization():
    assert fl.perp(fl.dcc(Z)) == fl.Acc(Z)
    assert fl.perp(fl.acc(Z)) == fl.Dcc(Z)
    assert fl.perp(fl.cof(Z)) == fl.All(Z)
    assert fl.filter_eq(fl.perp(fl.perp(fl.all_(Z))), fl.all_(Z)).is_yes


def test_tensor_of_cofinite_filters():
    X = ProdSet.make(ZZ, [Cell(0, 0, 0, 0)]).compl()
    assert fl.tensor(fl.cof(Z), fl.cof(Z)) == fl.Cof(ZZ)
    assert fl.member(fl.Tensor(fl.Cof(Z), fl.Cof(Z)), X).is_yes
    stripe = ProdSet.stripe(ZZ, "s", SymSet.make(Z, [(0, 0)]))
    assert fl.member(fl.Tensor(fl.Cof(Z), fl.Cof(Z)), stripe.compl()).is_no


def test_angle_pair_rewrites_balanced_arguments():
    assert fl.angle_pair(fl.dcc(Z), fl.acc(Z)) == fl.Perp(fl.Tensor(fl.Acc(Z), fl.Dcc(Z)))
    P = fl.principal(Z, SymSet.make(Z, [(0, 3)]))
    assert isinstance(fl.angle_pair(P, fl.dcc(Z)), fl.Angle)


def test_predicates():
    assert fl.is_balanced(fl.dcc(Z)).is_yes
    assert fl.is_self_adjoint(fl.dcc(Z)).is_yes
    assert not fl.is_self_adjoint(fl.dcc(ZID)).is_yes
    improper = fl.is_proper(fl.cof(FiniteU(3)))
    assert improper.is_no and improper.witness == SymSet.empty(FiniteU(3))
    assert fl.is_proper(fl.cof(Z)).is_yes
    assert fl.is_balanced(fl.principal(Z, SymSet.make(Z, [(0, 3)]))).is_no


def test_filter_order():
    assert fl.filter_leq(fl.cof(Z), fl.dcc(Z)).is_yes
    assert fl.filter_leq(fl.dcc(Z), fl.cof(Z)).is_no
    assert fl.filter_leq(fl.meet(fl.dcc(Z), fl.acc(Z)), fl.cof(Z)).is_yes


def test_quotient_and_induced():
    q = fl.Quotient(fl.Cof(Z), fl.Dcc(Z))
    assert fl.member(q, iv(3)).is_yes and fl.member(q, iv(b=3)).is_no
    ind = fl.Induced(fl.Cof(Z), iv(0))
    assert fl.member(ind, SymSet.make(Z, [(5, INF)])).is_yes


def test_tri_is_three_valued():
    with pytest.raises(TypeError):
        bool(fl.YES)
    with pytest.raises(ValueError):
        fl.Tri("unknown")
    u = fl.unknown("why")
    assert (fl.NO & u).is_no and (fl.YES | u).is_yes and not (fl.YES & u).decided
    assert (~fl.YES).is_no


def test_stabilization_params():
    X = SymSet.make(Z, [(-3, 7)])
    n1, n2 = fl.stabilization_params(fl.Dcc(Z), X)
    assert n1 == 2 * 7 + 4 and n2 == 2 * n1 + 3


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([Z, ZID, N]))
def test_engines_agree_with_oracle(seed, u):
    r = random.Random(seed)
    F = sp.filter_ast(r, u, 3, 4)
    X = sp.symset(r, u, 4)
    fast, slow = fl.member(F, X), fl.member_def(F, X)
    if fast.decided and slow.decided:
        assert fast == slow
    o = oracle.member(F, X)
    if o is not None and fast.decided:
        assert fast.is_yes == o


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_product_membership_agrees_with_oracle(seed):
    r = random.Random(seed)
    FH, FG = sp.balanced_atom(r, Z), sp.balanced_atom(r, Z)
    X = sp.prodset(r, ZZ, 4)
    for F in (fl.Tensor(FH, FG), fl.CofPair(FH, FG), fl.Angle(FH, FG), fl.TimesProd(FH, FG)):
        v = fl.member(F, X)
        o = oracle.member(F, X)
        if v.decided and o is not None:
            assert v.is_yes == o, (F, X)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_filter_laws(seed):
    r = random.Random(seed)
    u = r.choice([Z, N])
    F, G = sp.filter_ast(r, u, 2, 4), sp.filter_ast(r, u, 2, 4)
    X = sp.symset(r, u, 4)
    assert fl.filter_leq(fl.meet(F, G), F).is_yes
    assert fl.filter_leq(F, fl.join(F, G)).is_yes
    assert fl.filter_eq(fl.perp(fl.perp(fl.perp(F))), fl.perp(F)).is_yes
    assert fl.filter_eq(fl.star(fl.star(F)), F).is_yes
    mF, mq = fl.member(F, X), fl.member(fl.quotient(F, G), X)
    if mF.is_yes:
        assert not mq.is_no
