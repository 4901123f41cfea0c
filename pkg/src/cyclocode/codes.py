"""BCH and cyclic codes of length n = lambda*(q^m + 1): defining sets,
generators, closed-form dimensions, the symmetric family with its improved
distance bound, dual defining sets, LCD / dually-BCH predicates, and a
budgeted exact minimum-distance engine."""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

import numpy as np

from .cosets import FamilyParams, cached_partition, orbit, partition
from .fieldpoly import Poly, build_extension, is_self_reciprocal, minimal_poly, subfield
from .leaders import m2_exceptions


@dataclass(frozen=True)
class BCHSpec:
    """A BCH code C_{(q,n,delta,b)} with defining window b, b+1, ..., b+delta-2."""

    params: FamilyParams
    delta: int
    b: int = 0

    def __post_init__(self):
        if not 2 <= self.delta <= self.params.n - 1:
            raise ValueError("delta must satisfy 2 <= delta <= n-1")
        object.__setattr__(self, "b", self.b % self.params.n)


@dataclass(frozen=True)
class CyclicCode:
    params: FamilyParams
    defining_set: tuple
    generator: Optional[Poly]
    dimension: int
    b: Optional[int] = None
    delta: Optional[int] = None

    def to_record(self, distance: Optional["DistanceResult"] = None) -> dict:
        rec = {
            "q": self.params.q,
            "m": self.params.m,
            "lambda": self.params.lam,
            "n": self.params.n,
            "delta": self.delta,
            "b": self.b,
            "dimension": self.dimension,
            "bose_distance": (
                bose_distance(BCHSpec(self.params, self.delta, self.b))
                if self.delta is not None and self.b is not None
                else None
            ),
            "d_lower": distance.lower if distance else None,
            "d_upper": distance.upper if distance else None,
            "d_exact": distance.exact if distance else None,
            "generator": list(self.generator.coeffs) if self.generator else None,
        }
        return rec


@dataclass(frozen=True)
class DistanceResult:
    lower: int
    upper: int
    exact: bool
    effort: int
    exhausted: bool = False


# ---------------------------------------------------------------------------
# defining sets

def bch_defining_set(spec: BCHSpec) -> frozenset:
    """T = C_b ∪ C_{b+1} ∪ ... ∪ C_{b+delta-2} (indices mod n)."""
    n, q = spec.params.n, spec.params.q
    out = set()
    for i in range(spec.b, spec.b + spec.delta - 1):
        out.update(orbit(n, q, i % n))
    return frozenset(out)


def defining_set_from_leaders(params: FamilyParams, leaders) -> frozenset:
    out = set()
    for g in leaders:
        out.update(orbit(params.n, params.q, g))
    return frozenset(out)


def cyclic_code(
    params: FamilyParams,
    defining_set,
    b: Optional[int] = None,
    delta: Optional[int] = None,
    with_generator: bool = True,
) -> CyclicCode:
    """Build a cyclic code from a union-of-cosets defining set."""
    part = cached_partition(params.q, params.m, params.lam)
    T = frozenset(defining_set)
    leaders = sorted({part.leader_of(t) for t in T})
    if defining_set_from_leaders(params, leaders) != T:
        raise ValueError("defining set is not a union of cosets")
    gen = None
    if with_generator:
        _, root = build_extension(params)
        base, _ = subfield(root.field, params.q)
        gen = Poly(base, [1])
        for g in leaders:
            gen = gen * minimal_poly(params, root, g)
        if gen.degree != len(T):
            raise ArithmeticError("generator degree mismatch")  # cannot happen
    return CyclicCode(
        params=params,
        defining_set=tuple(sorted(T)),
        generator=gen,
        dimension=params.n - len(T),
        b=b,
        delta=delta,
    )


def code_from_spec(spec: BCHSpec, with_generator: bool = True) -> CyclicCode:
    T = bch_defining_set(spec)
    return cyclic_code(spec.params, T, b=spec.b, delta=spec.delta,
                       with_generator=with_generator)


def bose_distance(spec: BCHSpec) -> int:
    """Largest d_B whose window starting at b yields the same defining set."""
    n, q = spec.params.n, spec.params.q
    T = bch_defining_set(spec)
    d_b = spec.delta
    i = spec.b + spec.delta - 1
    while d_b < n and set(orbit(n, q, i % n)) <= T:
        d_b += 1
        i += 1
    return d_b


# ---------------------------------------------------------------------------
# closed-form dimensions (b = 0)

def dimension_closed_form(params: FamilyParams, delta: int) -> int:
    """Dimension of C_{(q,n,delta,0)} by the piecewise closed forms; raises
    ValueError outside the applicable delta range (callers fall back to the
    defining-set count)."""
    q, m, lam = params.q, params.m, params.lam
    if m == 2:
        if not 3 <= delta <= lam * q + 1:
            raise ValueError("delta outside closed-form range")
        dim = lam * (q * q + 1) + 7 - 4 * delta + 4 * ((delta - 2) // q)
        # once delta - 2 reaches the exceptional gammas, the window hits the
        # size-2 coset (+2) or re-enters an already-counted coset (+4)
        for g, size in m2_exceptions(q, lam):
            if g <= delta - 2:
                dim += 2 if size == 2 else 4
        return dim
    if m == 3:
        if not 3 <= delta <= 2 * lam * q + 1:
            raise ValueError("delta outside closed-form range")
        base = lam * (q**3 + 1) - 6 * delta + 6 * ((delta - 2) // q)
        if 2 * lam >= q and delta >= q * q - q + 3:
            return base + 15
        return base + 11
    if m >= 4 and m % 2 == 0:
        if not 3 <= delta <= lam * q ** (m // 2) + 1:
            raise ValueError("delta outside closed-form range")
    elif m >= 5 and m % 2 == 1:
        if not 3 <= delta <= lam * (q ** ((m - 1) // 2) + q) + 1:
            raise ValueError("delta outside closed-form range")
    else:
        raise ValueError(f"no closed form for m={m}")
    return lam * q**m + lam - 1 - 2 * m * (delta - 2 - (delta - 2) // q)


# ---------------------------------------------------------------------------
# the symmetric family C_{(q,n,2*delta+1, n-delta+1)}

def symmetric_bch_code(params: FamilyParams, delta: int, with_generator: bool = True):
    """(code, distance bound 2*(delta+1), factored-generator description).

    Requires lam | delta plus the small-m side conditions; the closed-form
    dimension is asserted against the defining-set count.
    """
    q, m, lam, n = params.q, params.m, params.lam, params.n
    if delta % lam != 0:
        raise ValueError("delta must be a multiple of lambda")
    if m == 2 and q % 2 == 1 and 2 * lam > q - 1:
        raise ValueError("m=2 requires q even or lambda <= (q-1)/2")
    if m == 3 and 2 * lam > q + 1:
        raise ValueError("m=3 requires lambda <= ceil(q/2)")
    hi = lam * q ** (m // 2) - 1 if m % 2 == 0 else lam * (q ** ((m - 1) // 2) + q) - 1
    if not lam <= delta <= hi:
        raise ValueError("delta outside the admissible range")

    T = set()
    for i in range(-delta + 1, delta + 1):
        T.update(orbit(n, q, i % n))
    dim_formula = (
        lam * q**m
        - 2 * m * (2 * delta - delta // lam - (delta - 1) // q
                   - delta // q + (delta - 1) // (lam * q))
        + lam - 1
    )
    s = q * q - q + 1
    if m == 3 and 2 * lam >= q and delta >= s:
        # the symmetric window reaches the size-2 coset C_s (and its mirror
        # when they differ), which the uniform-size count treats as size 2m
        dim_formula += (2 * m - 2) * (1 if s % lam == 0 else 2)
    if m == 2:
        # each collapsed gamma (and its mirror) re-enters cosets the window
        # already contains, so the uniform-size count double-counts 2*(2m)
        for g, size in m2_exceptions(q, lam):
            if g <= delta and size is None:
                dim_formula += 2 * 2 * m
    if dim_formula != n - len(T):
        raise ArithmeticError(
            f"symmetric dimension formula disagrees with the defining set: "
            f"{dim_formula} vs {n - len(T)}"
        )
    # the window's mirror root: n - delta joins T, giving 2*delta+1 in a row
    if (n - delta) % n not in T:
        raise ArithmeticError("mirror root missing from the defining set")

    paired = [g for g in range(1, delta + 1) if g % q != 0 and g % lam != 0]
    selfrec = [g for g in range(1, delta + 1) if g % q != 0 and g % lam == 0]
    description = {
        "unit_factor": "x - 1",
        "paired_gammas": paired,  # contribute f_gamma * f_{-gamma}
        "self_reciprocal_gammas": selfrec,  # contribute f_gamma alone
    }
    code = cyclic_code(params, T, b=(n - delta + 1) % n, delta=2 * delta + 1,
                       with_generator=with_generator)
    if with_generator:
        _, root = build_extension(params)
        base, _ = subfield(root.field, params.q)
        g_struct = Poly(base, [base.neg(1), 1])
        for g in paired:
            g_struct = g_struct * minimal_poly(params, root, g)
            g_struct = g_struct * minimal_poly(params, root, (n - g) % n)
        for g in selfrec:
            f_g = minimal_poly(params, root, g)
            if not is_self_reciprocal(f_g):
                raise ArithmeticError(f"f_{g} expected self-reciprocal")
            g_struct = g_struct * f_g
        if g_struct != code.generator:
            raise ArithmeticError("factored generator disagrees with the lcm form")
    return code, 2 * (delta + 1), description


# ---------------------------------------------------------------------------
# duals, LCD, dually-BCH

def dual_defining_set(n: int, T) -> frozenset:
    inv = {(-t) % n for t in T}
    return frozenset(set(range(n)) - inv)


def is_lcd(code: CyclicCode) -> bool:
    if code.generator is not None:
        return is_self_reciprocal(code.generator)
    n = code.params.n
    T = set(code.defining_set)
    return {(-t) % n for t in T} == T


@lru_cache(maxsize=32)
def _coset_masks(q: int, m: int, lam: int):
    """(mask[i] for each residue i, leaders) with cosets as bitmask ints."""
    params = FamilyParams(q, m, lam)
    part = cached_partition(q, m, lam)
    by_leader = {}
    for c in part.cosets:
        mask = 0
        for e in c.elements:
            mask |= 1 << e
        by_leader[c.leader] = mask
    masks = tuple(by_leader[part.leader_of(i)] for i in range(params.n))
    return masks


def set_to_mask(T) -> int:
    mask = 0
    for t in T:
        mask |= 1 << t
    return mask


def is_bch_form(params: FamilyParams, T) -> Optional[tuple]:
    """Some (b, delta) with T = C_b ∪ ... ∪ C_{b+delta-2}, or None.

    Scans every starting residue b and grows the window while it stays
    inside T.
    """
    n = params.n
    T = frozenset(T)
    if not T:
        return None
    if len(T) == n:
        return (0, n)
    masks = _coset_masks(params.q, params.m, params.lam)
    t_mask = set_to_mask(T)
    target_bits = len(T)
    for b in range(n):
        if b not in T:
            continue
        acc = 0
        for step in range(n):
            cm = masks[(b + step) % n]
            if cm | t_mask != t_mask:
                break
            acc |= cm
            if acc == t_mask:
                return (b, step + 2)
    return None


def bch_form_via_runs(params: FamilyParams, T) -> Optional[tuple]:
    """Fast equivalent of is_bch_form: a witnessing window extends to a
    maximal consecutive run of T, so only runs need checking."""
    n = params.n
    T = frozenset(T)
    if not T:
        return None
    if len(T) == n:
        return (0, n)
    masks = _coset_masks(params.q, params.m, params.lam)
    t_mask = set_to_mask(T)
    starts = [t for t in T if (t - 1) % n not in T]
    for b in starts:
        acc = 0
        steps = 0
        while ((b + steps) % n) in T:
            acc |= masks[(b + steps) % n]
            steps += 1
        if acc == t_mask:
            return (b, steps + 1)
    return None


def dually_bch(params: FamilyParams, delta: int, mode: str = "bruteforce") -> bool:
    """Whether the dual of C_{(q,n,delta,0)} is again a BCH code."""
    if mode == "bruteforce":
        if delta < 2:
            raise ValueError("delta must be at least 2")
        T = bch_defining_set(BCHSpec(params, delta, 0))
        T_perp = dual_defining_set(params.n, T)
        if not T_perp:
            return True
        return is_bch_form(params, T_perp) is not None
    if mode == "closed_form":
        from .leaders import extremal_leaders

        if params.m < 3 or params.m % 2 == 0 or params.lam < 2:
            raise ValueError("closed form needs odd m >= 3 and lambda >= 2")
        ex = extremal_leaders(params)
        if not 3 <= delta <= ex.delta1 + 1:
            raise ValueError("delta outside the closed form's range")
        return ex.delta2 + 2 <= delta <= ex.delta1 + 1
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# minimum distance

def longest_cyclic_run(n: int, T) -> int:
    """Length of the longest cyclically consecutive run inside T."""
    T = set(T)
    if not T:
        return 0
    if len(T) == n:
        return n
    best = 0
    for t in T:
        if (t - 1) % n in T:
            continue
        length = 1
        while (t + length) % n in T:
            length += 1
        best = max(best, length)
    return best


@lru_cache(maxsize=16)
def _field_tables(q: int, m: int, lam: int):
    """(ADD, MUL, NEG, INV) numpy tables for F_q element codes."""
    _, root = build_extension(FamilyParams(q, m, lam))
    base, _ = subfield(root.field, q)
    ADD = np.zeros((q, q), dtype=np.int64)
    MUL = np.zeros((q, q), dtype=np.int64)
    NEG = np.zeros(q, dtype=np.int64)
    INV = np.zeros(q, dtype=np.int64)
    for a in range(q):
        NEG[a] = base.neg(a)
        if a:
            INV[a] = base.inv(a)
        for b_ in range(q):
            ADD[a, b_] = base.add(a, b_)
            MUL[a, b_] = base.mul(a, b_)
    return ADD, MUL, NEG, INV


def _systematic_form(M, ADD, MUL, NEG, INV):
    """Reduced row echelon form with column pivots; returns (rows_on_nonpivots,
    pivot column list, nonpivot column list)."""
    M = M.copy()
    k, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == k:
            break
        rows_nz = np.nonzero(M[r:, c])[0]
        if rows_nz.size == 0:
            continue
        p_row = r + rows_nz[0]
        if p_row != r:
            M[[r, p_row]] = M[[p_row, r]]
        M[r] = MUL[INV[M[r, c]]][M[r]]
        factors = M[:, c].copy()
        factors[r] = 0
        nz = np.nonzero(factors)[0]
        if nz.size:
            M[nz] = ADD[M[nz], MUL[NEG[factors[nz]]][:, M[r]]]
        pivots.append(c)
        r += 1
    if r != k:
        raise ArithmeticError("generator matrix is not full rank")  # cannot happen
    nonpivots = [c for c in range(n) if c not in set(pivots)]
    return M[:, nonpivots], pivots, nonpivots


def min_distance(code: CyclicCode, budget: int = 10**8) -> DistanceResult:
    """Exact minimum distance when provable within budget, else a bracket.

    The lower bound starts from the longest consecutive run in the defining
    set; enumeration over one information set supplies upper bounds and, per
    completed round w, the certified bound w+1.
    """
    params = code.params
    n, k = params.n, code.dimension
    q = params.q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    run_lower = longest_cyclic_run(n, code.defining_set) + 1
    if k == n:
        # T empty: x^0 alone is a codeword
        return DistanceResult(1, 1, True, 0)

    ADD, MUL, NEG, INV = _field_tables(q, params.m, params.lam)
    if code.generator is None:
        raise ValueError("min_distance needs the generator polynomial")
    gcoef = list(code.generator.coeffs)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(gcoef)] = gcoef
    R, _, _ = _systematic_form(G, ADD, MUL, NEG, INV)
    L = n - k

    nonzero_scalars = np.arange(1, q, dtype=np.int64)
    upper = n
    effort = 0
    exhausted = False
    lower = run_lower
    for w in range(1, k + 1):
        certified = max(run_lower, w)  # all rounds < w complete
        if upper <= certified:
            return DistanceResult(upper, upper, True, effort)
        round_cost = comb(k, w) * (q - 1) ** (w - 1)
        if effort + round_cost > budget:
            exhausted = True
            lower = certified
            break
        for combo in itertools.combinations(range(k), w):
            acc = R[combo[0]][None, :]
            for idx in combo[1:]:
                contrib = MUL[nonzero_scalars][:, R[idx]]
                acc = ADD[acc[:, None, :], contrib[None, :, :]].reshape(-1, L)
            weights = w + np.count_nonzero(acc, axis=1)
            best = int(weights.min())
            if best < upper:
                upper = best
                if upper <= certified:
                    effort += round_cost  # count the round that closed it
                    return DistanceResult(upper, upper, True, effort)
        effort += round_cost
        lower = max(run_lower, w + 1)
        if upper <= lower:
            return DistanceResult(upper, upper, True, effort)
    else:
        # every information weight enumerated: upper is exact
        return DistanceResult(upper, upper, True, effort)
    return DistanceResult(lower, upper, upper <= lower, effort, exhausted)
