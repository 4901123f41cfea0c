import pytest

from cyclocode.codes import (
    BCHSpec,
    bch_defining_set,
    bose_distance,
    code_from_spec,
    dimension_closed_form,
    dual_defining_set,
    dually_bch,
    is_bch_form,
    is_lcd,
    longest_cyclic_run,
    min_distance,
    symmetric_bch_code,
)
from cyclocode.cosets import FamilyParams, orbit


def T_of(params, delta, b=0):
    return bch_defining_set(BCHSpec(params, delta, b))


def test_defining_set_golden_3_3_2():
    params = FamilyParams(3, 3, 2)
    T = T_of(params, 4)
    assert len(T) == 13
    assert T == frozenset().union(*(orbit(56, 3, i) for i in range(3)))


def test_dimension_spot_values():
    assert dimension_closed_form(FamilyParams(5, 2, 2), 3) == 47
    assert dimension_closed_form(FamilyParams(3, 3, 2), 5) == 43
    assert dimension_closed_form(FamilyParams(3, 3, 2), 9) == 29


@pytest.mark.parametrize("q,m,lam", [(3, 2, 2), (5, 2, 2), (5, 2, 4), (4, 2, 3),
                                     (3, 3, 2), (2, 4, 1), (3, 4, 2), (2, 5, 1)])
def test_dimension_matches_defining_set(q, m, lam):
    params = FamilyParams(q, m, lam)
    delta = 3
    while True:
        try:
            want = dimension_closed_form(params, delta)
        except ValueError:
            break
        assert want == params.n - len(T_of(params, delta)), (q, m, lam, delta)
        delta += 1
    assert delta > 3  # the range was non-empty


def test_dimension_m2_collapse_corrections():
    # q odd with 2*lam >= q+1: size-2 coset then collapses
    params = FamilyParams(5, 2, 4)
    for delta in range(3, 22):
        assert dimension_closed_form(params, delta) == \
            params.n - len(T_of(params, delta))
    # q even with lam > q/2 also collapses
    params = FamilyParams(4, 2, 3)
    assert dimension_closed_form(params, 12) == params.n - len(T_of(params, 12))
    assert dimension_closed_form(params, 13) == params.n - len(T_of(params, 13))


def test_dimension_rejects_out_of_range():
    with pytest.raises(ValueError):
        dimension_closed_form(FamilyParams(3, 3, 2), 2)
    with pytest.raises(ValueError):
        dimension_closed_form(FamilyParams(3, 3, 2), 100)
    with pytest.raises(ValueError):
        dimension_closed_form(FamilyParams(3, 1, 2), 3)


def test_bose_distance_golden():
    params = FamilyParams(3, 3, 2)
    assert bose_distance(BCHSpec(params, 4)) == 5
    # Bose distance never shrinks the window
    for delta in range(2, 12):
        assert bose_distance(BCHSpec(params, delta)) >= delta


def test_code_record_roundtrip():
    code = code_from_spec(BCHSpec(FamilyParams(3, 3, 2), 4))
    assert code.dimension == 43
    rec = code.to_record()
    assert rec["n"] == 56 and rec["dimension"] == 43


def test_dual_defining_set():
    T = frozenset({0, 5, 7})
    assert dual_defining_set(8, T) == frozenset({2, 4, 5, 6, 7})  # complement of -T


def test_golden_56_31_distance():
    params = FamilyParams(3, 3, 2)
    code, bound, desc = symmetric_bch_code(params, 4)
    assert (code.params.n, code.dimension) == (56, 31)
    assert bound == 10
    dist = min_distance(code, budget=10**7)
    assert dist.exact and dist.lower == dist.upper == 10


def test_symmetric_description():
    params = FamilyParams(3, 3, 2)
    _, _, desc = symmetric_bch_code(params, 4)
    assert desc["unit_factor"] == "x - 1"
    assert desc["paired_gammas"] == [1]
    assert desc["self_reciprocal_gammas"] == [2, 4]


def test_symmetric_dimension_m3_boundary():
    # the window reaches the size-2 coset at q^2 - q + 1
    params = FamilyParams(3, 3, 2)
    for delta in (8, 10):
        code, _, _ = symmetric_bch_code(params, delta, with_generator=False)
        assert code.dimension == params.n - len(code.defining_set)


def test_symmetric_dimension_m2_collapse():
    # q = 8, lam = 7: collapses enter the symmetric window for delta >= 36
    params = FamilyParams(8, 2, 7)
    for delta in (35, 42, 49):
        code, _, _ = symmetric_bch_code(params, delta, with_generator=False)
        assert code.dimension == params.n - len(code.defining_set)


def test_symmetric_is_lcd():
    params = FamilyParams(3, 3, 2)
    code, _, _ = symmetric_bch_code(params, 4)
    assert is_lcd(code)


def test_is_bch_form():
    params = FamilyParams(3, 3, 2)
    T = T_of(params, 5, b=0)
    form = is_bch_form(params, T)
    assert form is not None
    b, delta = form
    assert T_of(params, delta, b) == T
    # a non-consecutive union of cosets is not BCH
    T2 = frozenset(orbit(56, 3, 0)) | frozenset(orbit(56, 3, 5))
    assert is_bch_form(params, T2) is None
    assert is_bch_form(params, frozenset(range(56))) == (0, 56)


def test_longest_cyclic_run():
    assert longest_cyclic_run(10, {0, 1, 2, 7, 8, 9}) == 6  # wraps around
    assert longest_cyclic_run(10, set()) == 0


def test_dually_bch_golden_interval():
    params = FamilyParams(3, 3, 2)
    for delta in range(3, 37):
        brute = dually_bch(params, delta, mode="bruteforce")
        closed = dually_bch(params, delta, mode="closed_form")
        assert brute == closed, delta
        assert brute == (31 <= delta <= 36), delta


def test_min_distance_budget_exhaustion():
    code = code_from_spec(BCHSpec(FamilyParams(3, 3, 2), 4))
    dist = min_distance(code, budget=1)
    assert dist.lower <= dist.upper
    if not dist.exact:
        assert dist.lower >= 5  # at least the BCH bound
