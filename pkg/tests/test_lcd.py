import pytest

from cyclocode.cosets import FamilyParams
from cyclocode.lcd import (
    lcd_count,
    pi_set,
    pi_size_closed_form,
    pi_size_qm1_even,
    pi_size_qm1_odd_prime,
    sample_lcd_generators,
)

POINTS = [(2, 3, 1), (3, 2, 2), (3, 3, 2), (3, 4, 2), (3, 5, 2), (4, 2, 3),
          (4, 3, 1), (5, 2, 4), (5, 3, 2), (7, 2, 6), (8, 2, 7), (9, 2, 8)]


def test_golden_3_3_2():
    params = FamilyParams(3, 3, 2)
    report = pi_set(params)
    assert report.pi_size_bruteforce == 10
    assert report.pi_size_closed_form == 10
    assert report.count == 1023
    assert lcd_count(params) == 1023
    assert sorted(set(report.gamma) - set(report.pi)) == [11, 29, 35]


def test_golden_2_3_1():
    params = FamilyParams(2, 3, 1)
    report = pi_set(params)
    assert report.pi_size_bruteforce == report.pi_size_closed_form
    assert report.count == 2**report.pi_size_bruteforce - 1


@pytest.mark.parametrize("q,m,lam", POINTS)
def test_closed_form_matches_brute(q, m, lam):
    params = FamilyParams(q, m, lam)
    report = pi_set(params)
    assert report.pi_size_bruteforce == report.pi_size_closed_form, (q, m, lam)


def test_corollary_lambda_qm1_odd_m():
    # lam = q-1, m odd prime: (q+1)^2/4 + q^2 (q^(m-1) - 1) / (4m)
    for q, m in [(3, 3), (3, 5), (5, 3), (7, 3), (9, 3)]:
        params = FamilyParams(q, m, q - 1)
        assert pi_size_qm1_odd_prime(q, m) == pi_size_closed_form(params)


def test_corollary_lambda_qm1_even_q():
    for q, m in [(4, 3), (8, 3), (4, 5)]:
        params = FamilyParams(q, m, q - 1)
        assert pi_size_qm1_even(q, m) == pi_size_closed_form(params)


def test_sampled_generators_are_lcd():
    # every sampled self-reciprocal generator yields an LCD cyclic code
    sample_lcd_generators(FamilyParams(3, 3, 2), samples=50, seed=0)


def test_sampling_is_deterministic():
    a = sample_lcd_generators(FamilyParams(3, 3, 2), samples=5, seed=7)
    b = sample_lcd_generators(FamilyParams(3, 3, 2), samples=5, seed=7)
    assert a == b
