"""Acceptance criteria 1-11.

Suites 1-10 share one oracle gate, so criterion 11 re-checks every symbolic
answer they produced without running them twice.  Each criterion prints a
single PASS/FAIL line; ``conftest.py`` repeats the lines in the terminal
summary, and ``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from filtersums import filters as fl
from filtersums import operators as op
from filtersums.suites import CRITERIA_SUITES, OracleGate, nonassoc_matrices, run_suite
from filtersums.symsets import IntLine

SEED = "0xF1L7ER"
WINDOW = 32
LINES: list = []

_gate = OracleGate(WINDOW)
_reports: dict = {}


def report(name):
    if name not in _reports:
        _reports[name] = run_suite(name, SEED, WINDOW, None, _gate)
    return _reports[name]


def verdict(number: int, title: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


def _basic(rep) -> str:
    return f"{rep.passes}/{rep.cases} cases"


def test_criterion_01_nonassoc():
    rep = report("nonassoc-s8")
    phi, psi, theta = nonassoc_matrices()
    left = op.mat_mul(op.mat_mul(phi, psi), theta).entry(0, 0)
    right = op.mat_mul(phi, op.mat_mul(psi, theta)).entry(0, 0)
    exact = type(left) is Fraction and type(right) is Fraction and (left, right) == (1, 0)
    verdict(1, "non-associativity", rep.ok and exact, f"(PhiPsi)Theta={left}, Phi(PsiTheta)={right}")


def test_criterion_02_perp_swaps_dcc_and_acc():
    rep = report("accbal")
    Z = IntLine()
    structural = fl.perp(fl.Dcc(Z)) == fl.Acc(Z) and fl.perp(fl.Acc(Z)) == fl.Dcc(Z)
    ok = rep.ok and rep.cases == 1000 and structural
    verdict(2, "perp swaps dcc and acc", ok, f"{_basic(rep)}, {len(rep.failures)} mismatches, normalization {structural}")


def test_criterion_03_double_perps_and_quotients():
    rep = report("two-perp-quot")
    frac = rep.details["decided_fraction"]
    verdict(3, "double perps and quotients", rep.ok and frac >= 0.9,
            f"{_basic(rep)}, decided fraction {frac:.4f}")


def test_criterion_04_angle_of_balanced_filters():
    rep = report("ht")
    verdict(4, "angle equals perp of tensor of perps", rep.ok and rep.cases == 16 * 200,
            f"{_basic(rep)} over 16 atom pairs")


def test_criterion_05_product_filter_identities():
    rep = report("product-facts")
    verdict(5, "product filter identities", rep.ok,
            f"{_basic(rep)}, violations {rep.details['violations']}, "
            f"decided fraction {rep.details['decided_fraction']}")


def test_criterion_06_continuity_conditions():
    rep = report("endo")
    d = rep.details
    decided = d["continuous"] + d["noncontinuous"]
    spans = set(d["bodies"]) == {"Explicit", "Finitary", "Conv"}
    ok = rep.ok and decided >= 200 and d["refuted_by_check"] >= 20 and spans and d["linearity"] > 0
    verdict(6, "continuity equals m1 and m2", ok,
            f"{decided} configs {d['bodies']}, {d['noncontinuous']} non-continuous "
            f"({d['refuted_by_check']} refuted), {d['linearity']} linearity checks")


def test_criterion_07_laurent():
    rep = report("laurent")
    verdict(7, "Laurent inversion", rep.ok and rep.cases == 4, _basic(rep))


def test_criterion_08_dual_pair():
    rep = report("dual-pair")
    ok = rep.ok and rep.details["outside"] >= 50 and rep.details["inside"] >= 200
    verdict(8, "dual pair", ok, f"{_basic(rep)}, {rep.details['outside']} witnesses, "
                                f"{rep.details['inside']} evaluated pairings")


def test_criterion_09_fsums_and_tails():
    rep = report("gsum")
    both = rep.details["summable"] > 0 and rep.details["not summable"] > 0
    verdict(9, "F-sums and tails", rep.ok and rep.cases >= 20 and both,
            f"{_basic(rep)}, {rep.details['summable']} summable, {rep.details['not summable']} not")


def test_criterion_10_ring():
    rep = report("ring")
    verdict(10, "ring and operator bijection", rep.ok and rep.cases >= 403, _basic(rep))


def test_criterion_11_oracle_gate():
    for name in CRITERIA_SUITES:
        report(name)
    bad = _gate.disagreements
    verdict(11, "oracle gate", _gate.checked > 0 and not bad,
            f"{_gate.checked} answers checked, {_gate.skipped} skipped, {len(bad)} disagreements"
            + (f"; first: {bad[0]}" if bad else ""))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
