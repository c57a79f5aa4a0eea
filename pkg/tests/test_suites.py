from fractions import Fraction

import pytest

from filtersums import operators as op
from filtersums.coefficients import Quaternion
from filtersums.suites import (REGISTRY, OracleGate, UnknownSuite, from_operator_table, operator_table, run_suite,
                               twisted_product)
from filtersums.symsets import FiniteU


def test_registry_names():
    assert set(REGISTRY) == {"nonassoc-s8", "accbal", "two-perp-quot", "ht", "product-facts", "endo", "laurent",
                             "dual-pair", "gsum", "ring", "oracle-gate"}


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("no-such")


def test_report_json_shape():
    rep = run_suite("laurent").to_json()
    assert set(rep) == {"suite", "cases", "passes", "failures", "seed", "window", "details"}
    assert rep["details"]["oracle"]["disagreements"] == 0


def test_small_runs_pass():
    for name in ("accbal", "two-perp-quot", "ht", "product-facts", "dual-pair", "gsum"):
        rep = run_suite(name, seed="1234", samples=30)
        assert rep.ok, (name, rep.failures[:2])


def test_twisted_product_by_hand():
    # Theta(j, g) = sum_h Phi(j, h*) Psi(h, g) with the swap involution on two points
    U = FiniteU(2, (1, 0))
    A = op.explicit(U, U, {(0, 0): 1, (0, 1): 2, (1, 0): 3})
    B = op.explicit(U, U, {(0, 1): 5, (1, 0): -1, (1, 1): 1})
    T = twisted_product(A, B)
    assert T[(0, 0)] == A.entry(0, 1) * B.entry(0, 0) + A.entry(0, 0) * B.entry(1, 0) == -1
    assert T[(0, 1)] == 2 * 5 + 1 * 1
    assert op.mat_mul(A, B).entry(0, 1) == 11


def test_quaternion_product_keeps_order():
    U = FiniteU(1)
    i, j = Quaternion(0, 1), Quaternion(0, 0, 1)
    A, B = op.explicit(U, U, {(0, 0): i}), op.explicit(U, U, {(0, 0): j})
    assert op.mat_mul(A, B).entry(0, 0) == Quaternion(0, 0, 0, 1)
    assert op.mat_mul(B, A).entry(0, 0) == Quaternion(0, 0, 0, -1)


def test_operator_table_inverts():
    U = FiniteU(3, (2, 1, 0))
    M = op.explicit(U, U, {(0, 2): Fraction(1, 2), (1, 1): -1})
    assert from_operator_table(U, operator_table(M)) == M


def test_gate_counts_disagreements():
    gate = OracleGate(32)
    rep = run_suite("nonassoc-s8", gate=gate)
    assert rep.ok and gate.checked > 0 and not gate.disagreements
