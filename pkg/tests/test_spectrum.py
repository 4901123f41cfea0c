import pytest

from cyclocode.cosets import FamilyParams, partition
from cyclocode.spectrum import count_by_size_general, possible_sizes, spectrum_closed_form

POINTS = [(2, 3, 1), (3, 2, 2), (3, 3, 2), (3, 4, 1), (4, 2, 3),
          (5, 2, 4), (5, 3, 2), (7, 2, 6), (8, 2, 7), (9, 2, 4)]


@pytest.mark.parametrize("q,m,lam", POINTS)
def test_three_way_agreement(q, m, lam):
    params = FamilyParams(q, m, lam)
    hist = partition(params).size_histogram()
    closed = spectrum_closed_form(params)
    for tau in possible_sizes(params.n, params.q):
        want = hist.get(tau, 0)
        assert closed.entries.get(tau, 0) == want, (q, m, lam, tau)
        assert count_by_size_general(params.n, params.q, tau) == want


@pytest.mark.parametrize("q,m,lam", POINTS)
def test_total_is_n(q, m, lam):
    params = FamilyParams(q, m, lam)
    assert spectrum_closed_form(params).total() == params.n


def test_possible_sizes_divide_2m():
    params = FamilyParams(3, 3, 2)
    assert all(2 * params.m % tau == 0
               for tau in possible_sizes(params.n, params.q))


def test_spectrum_golden_3_3_2():
    entries = spectrum_closed_form(FamilyParams(3, 3, 2)).entries
    assert entries == {1: 2, 2: 3, 6: 8}


def test_moebius_rejects_bad_input():
    with pytest.raises(ValueError):
        count_by_size_general(10, 5, 2)  # gcd(n, q) != 1
