import pytest

from cyclocode.cosets import FamilyParams, partition
from cyclocode.leaders import (
    extremal_leaders,
    guaranteed_leader_range,
    is_leader_closed_form,
    m2_exceptions,
    proposition_range_nonleaders,
)

POINTS = [(3, 2, 2), (3, 3, 2), (5, 2, 2), (5, 2, 4), (4, 2, 3),
          (7, 2, 6), (2, 5, 1), (9, 2, 8), (8, 3, 7), (4, 3, 3)]


@pytest.mark.parametrize("q,m,lam", POINTS)
def test_proof_variant_matches_brute(q, m, lam):
    params = FamilyParams(q, m, lam)
    part = partition(params)
    for g in range(params.n):
        verdict = is_leader_closed_form(params, g, variant="proof")
        assert verdict.is_leader == (part.leader_of(g) == g), (q, m, lam, g)


def test_statement_variant_gap_at_5_2_2():
    params = FamilyParams(5, 2, 2)
    part = partition(params)
    gaps = [g for g in range(params.n)
            if is_leader_closed_form(params, g, variant="statement").is_leader
            != (part.leader_of(g) == g)]
    assert 11 in gaps  # documented divergence of the printed exclusion list
    # the proof-variant criterion has no gap at the same point
    assert all(is_leader_closed_form(params, g, variant="proof").is_leader
               == (part.leader_of(g) == g) for g in range(params.n))


@pytest.mark.parametrize("q,m,lam", [p for p in POINTS if p[1] >= 2])
def test_guaranteed_range(q, m, lam):
    params = FamilyParams(q, m, lam)
    part = partition(params)
    G, size, exceptions = guaranteed_leader_range(params)
    exc = dict(exceptions)
    for g in range(1, G + 1):
        if g % q == 0:
            continue
        want = exc.get(g, size)
        if want is None:
            assert part.leader_of(g) != g, (q, m, lam, g)
        else:
            assert part.leader_of(g) == g, (q, m, lam, g)
            assert len({g * pow(q, i, params.n) % params.n
                        for i in range(2 * m)}) == want


def test_guaranteed_range_rejects_m1():
    with pytest.raises(ValueError):
        guaranteed_leader_range(FamilyParams(5, 1, 2))


def test_m2_exception_structure():
    # q odd, 2*lam >= q+1: size-2 coset at s=(q^2+1)/2 then collapses s+k*lam
    exc = dict(m2_exceptions(5, 4))
    assert exc == {13: 2, 17: None}
    # q even also collapses once lam > q/2 (coset mate a*(q^2+1) - gamma)
    assert dict(m2_exceptions(4, 3)) == {10: None}
    # small lambda: no exceptions
    assert m2_exceptions(5, 2) == []


def test_extremal_golden_3_3_2():
    ext = extremal_leaders(FamilyParams(3, 3, 2))
    assert (ext.delta1, ext.delta1_coset_size) == (35, 2)
    assert (ext.delta2, ext.delta2_coset_size) == (29, 6)


@pytest.mark.parametrize("q,m,lam", [p for p in POINTS if p[1] % 2 == 1 and p[1] >= 3])
def test_extremal_matches_brute(q, m, lam):
    params = FamilyParams(q, m, lam)
    part = partition(params)
    leaders = sorted(part.leaders)
    ext = extremal_leaders(params)
    assert ext.delta1 == leaders[-1]
    assert ext.delta2 == leaders[-2]
    assert ext.delta1 % lam == (lam - 1) % lam


def test_extremal_rejects_even_m():
    with pytest.raises(ValueError):
        extremal_leaders(FamilyParams(5, 2, 2))


def test_proposition_range_is_leader_free():
    q, m = 3, 3
    params = FamilyParams(q, m, q - 1)
    part = partition(params)
    lo, hi = proposition_range_nonleaders(q, m)
    assert all(part.leader_of(g) != g for g in range(lo + 1, hi))
