"""Acceptance criteria, one printed pass/fail line per criterion."""

import math
import os

import pytest

from cyclocode.codes import (
    BCHSpec,
    bch_defining_set,
    dimension_closed_form,
    dually_bch,
    min_distance,
    symmetric_bch_code,
)
from cyclocode.cosets import FamilyParams, negation_in_same_coset, partition
from cyclocode.harness import GridSpec, conjecture_check, verify_grid
from cyclocode.lcd import lcd_count, pi_set
from cyclocode.numtheory import divisors, lte_v2_qk_minus_1, mobius, mult_order, v2

os.environ.setdefault("CYCLOCODE_THREADS", str(os.cpu_count() or 1))

GRID_SUITES = ("leaders", "extremal", "negation", "fold", "spectrum",
               "dimensions", "dually_bch", "poly", "lcd")


def report(num: int, slug: str, ok: bool):
    print(f"criterion {num:02d} {slug}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num:02d} {slug}"


@pytest.fixture(scope="module")
def grid_findings():
    return verify_grid(GridSpec(suites=GRID_SUITES))


def mismatches(findings, prefixes):
    return [f for f in findings
            if f.severity == "theorem_mismatch"
            and any(f.check.startswith(p) for p in prefixes)]


def test_criterion_01_golden_leader_list():
    part = partition(FamilyParams(5, 2, 2))
    ok = part.leaders == [0, 1, 2, 3, 4, 6, 7, 8, 9, 13, 14, 16, 26, 27, 29, 39]
    report(1, "golden-leader-list", ok)


def test_criterion_02_golden_coset_census():
    params = FamilyParams(3, 3, 2)
    part = partition(params)
    ok = len(part.cosets) == 13
    ok &= part.leaders == [0, 1, 2, 4, 5, 7, 8, 10, 11, 14, 28, 29, 35]
    self_neg = [g for g in part.leaders if negation_in_same_coset(params, g)]
    ok &= self_neg == [0, 2, 4, 8, 10, 14, 28]
    rep = pi_set(params)
    ok &= rep.pi_size_bruteforce == 10 == rep.pi_size_closed_form
    ok &= lcd_count(params) == 1023
    report(2, "golden-coset-census", ok)


def test_criterion_03_golden_code_56_31_10():
    code, bound, _ = symmetric_bch_code(FamilyParams(3, 3, 2), 4)
    ok = (code.params.n, code.dimension, bound) == (56, 31, 10)
    dist = min_distance(code)
    ok &= dist.exact and dist.lower == dist.upper == 10
    report(3, "golden-code-56-31-10", ok)


def test_criterion_04_leader_theorem_equivalence(grid_findings):
    ok = not mismatches(grid_findings, ("leader_proof_variant",))
    gaps = [f for f in grid_findings
            if f.severity == "paper_variant_gap"
            and tuple(f.grid_point) == (5, 2, 2) and f.witness == 11]
    ok &= bool(gaps)
    report(4, "leader-theorem-equivalence", ok)


def test_criterion_05_extremal_leaders(grid_findings):
    ok = not mismatches(grid_findings, ("extremal_", "guaranteed_range"))
    report(5, "extremal-leaders", ok)


def test_criterion_06_spectrum_three_way(grid_findings):
    ok = not mismatches(grid_findings, ("spectrum_",))
    report(6, "spectrum-three-way", ok)


def test_criterion_07_dimension_formulas(grid_findings):
    ok = not mismatches(grid_findings,
                        ("dimension_closed_form", "symmetric_dimension",
                         "symmetric_bound"))
    ok &= dimension_closed_form(FamilyParams(5, 2, 2), 3) == 47
    ok &= dimension_closed_form(FamilyParams(3, 3, 2), 5) == 43
    ok &= dimension_closed_form(FamilyParams(3, 3, 2), 9) == 29
    report(7, "dimension-formulas", ok)


def test_criterion_08_dually_bch(grid_findings):
    ok = not mismatches(grid_findings, ("dually_bch",))
    params = FamilyParams(3, 3, 2)
    inside = [d for d in range(3, 37) if dually_bch(params, d, mode="bruteforce")]
    ok &= inside == list(range(31, 37))
    intervals = [f for f in grid_findings
                 if f.check == "dually_bch_interval"
                 and tuple(f.grid_point) == (3, 3, 2)]
    ok &= intervals and intervals[0].actual == [31, 36]
    report(8, "dually-bch", ok)


def test_criterion_09_polynomial_layer(grid_findings):
    ok = not mismatches(grid_findings,
                        ("factorization_identity",
                         "self_reciprocal_iff_negation",
                         "reciprocal_involution"))
    report(9, "polynomial-layer", ok)


def test_criterion_10_numtheory_properties():
    ok = all(sum(mobius(d) for d in divisors(n)) == (n == 1)
             for n in range(1, 400))
    for q in range(2, 40):
        for d in range(1, 40):
            if math.gcd(q, d) != 1:
                continue
            t = mult_order(q, d)
            ok &= pow(q, t, d) == 1 % d
            ok &= all(pow(q, k, d) != 1 % d for k in range(1, t))
    ok &= all(lte_v2_qk_minus_1(q, k) == v2(q**k - 1)
              for q in range(3, 100, 2) for k in range(1, 13))
    report(10, "numtheory-properties", ok)


def test_criterion_11_conjecture_reports():
    records = []
    for family in ("qp1_qm_plus", "qp1_qm_minus"):
        for q in (2, 3, 4, 5):
            for m in (3, 5):
                sign = 1 if family == "qp1_qm_plus" else -1
                if (q + 1) * (q**m + sign) > 200_000:
                    continue
                findings = [f.to_record() for f in conjecture_check(family, q, m)]
                assert findings == [f.to_record()
                                    for f in conjecture_check(family, q, m)]
                records.extend(findings)
    verdicts = [r["witness"]["verdict"] for r in records
                if r["check"].startswith("conjecture_delta")]
    ok = bool(verdicts) and all(v == "PASS" for v in verdicts)
    report(11, "conjecture-reports", ok)
