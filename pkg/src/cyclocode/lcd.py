"""Enumeration of LCD cyclic codes of length n = lambda*(q^m + 1): the Pi set
of coset leaders whose self-reciprocal factor products generate all LCD cyclic
codes, its closed-form size, and the count 2^|Pi| - 1."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cosets import FamilyParams, cached_partition
from .codes import cyclic_code, is_lcd
from .numtheory import divisors, mobius, v2


@dataclass(frozen=True)
class LcdReport:
    params: FamilyParams
    gamma: tuple  # all coset leaders, sorted
    pi: tuple  # the retained leaders, sorted
    pi_size_bruteforce: int
    pi_size_closed_form: Optional[int]
    count: int

    def to_record(self) -> dict:
        return {
            "q": self.params.q,
            "m": self.params.m,
            "lambda": self.params.lam,
            "n": self.params.n,
            "gamma_count": len(self.gamma),
            "pi_size_bruteforce": self.pi_size_bruteforce,
            "pi_size_closed_form": self.pi_size_closed_form,
            "agree": (
                self.pi_size_closed_form is None
                or self.pi_size_closed_form == self.pi_size_bruteforce
            ),
            "count_decimal": str(self.count),
        }


def pi_set(params: FamilyParams, with_closed_form: bool = True) -> LcdReport:
    """Pi = Gamma minus, for each leader gamma whose coset is not closed under
    negation, the larger of gamma and the leader of n - gamma."""
    n = params.n
    part = cached_partition(params.q, params.m, params.lam)
    gamma = part.leaders
    removed = set()
    for g in gamma:
        neg_leader = part.leader_of((n - g) % n)
        if neg_leader != g:
            removed.add(max(g, neg_leader))
    pi = tuple(g for g in gamma if g not in removed)
    closed = pi_size_closed_form(params) if with_closed_form else None
    return LcdReport(
        params=params,
        gamma=tuple(gamma),
        pi=pi,
        pi_size_bruteforce=len(pi),
        pi_size_closed_form=closed,
        count=(1 << len(pi)) - 1,
    )


def _mobius_sum(q: int, tau0: int, scale: int = 1) -> int:
    return sum(mobius(eps) * q ** (scale * tau0 // eps) for eps in divisors(tau0))


def pi_size_closed_form(params: FamilyParams) -> int:
    """|Pi| by the case-split closed form; exactness of every division is
    asserted via Fraction arithmetic."""
    q, m, lam = params.q, params.m, params.lam
    v = v2(m)
    m0 = m >> v
    tail_div = Fraction(0)
    total: Fraction
    if q % 2 == 1:
        h = 2 - (((q - 1) // lam) % 2)
        for tau0 in divisors(m0):
            if tau0 == 1:
                continue
            tail_div += Fraction(lam + 1, 2 ** (v + 2) * tau0) * _mobius_sum(
                q, tau0, scale=2**v
            )
        if m % 2 == 1:
            # here 2**(v+2) == 4 and the 2^v scale is trivial
            if h == 1:
                total = Fraction(lam * (q + 2) + q + 3, 4) + tail_div
            else:
                total = Fraction((lam + 1) * (q + 3), 4) + tail_div
        else:
            middle = Fraction(lam + 1, 2 ** (v + 2)) * (q ** (2**v) - 1)
            if h == 1:
                head = Fraction(3 * lam + 4, 4) if q % 4 == 1 else Fraction(
                    3 * (lam + 2), 4
                )
            else:
                head = Fraction(lam + 1)
            total = head + middle + tail_div
    else:
        total = Fraction(lam + 1, 2)
        for tau0 in divisors(m0):
            total += Fraction(lam + 1, 2 ** (v + 2) * tau0) * _mobius_sum(
                q, tau0, scale=2**v
            )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral |Pi| value {total}")
    return int(total)


def pi_size_qm1_odd_prime(q: int, m: int) -> int:
    """|Pi| specialization for lambda = q-1 with q odd and m an odd prime."""
    if q % 2 == 0 or m < 3 or m % 2 == 0:
        raise ValueError("requires q odd and m an odd prime")
    total = Fraction((q + 1) ** 2, 4) + Fraction(q**2 * (q ** (m - 1) - 1), 4 * m)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral |Pi| value {total}")
    return int(total)


def pi_size_qm1_even(q: int, m: int) -> int:
    """|Pi| specialization for lambda = q-1 with q even and m an odd prime."""
    if q % 2 == 1 or m < 3 or m % 2 == 0:
        raise ValueError("requires q even and m an odd prime")
    total = Fraction(q**2 * (q ** (m - 1) + m - 1) + 2 * m * q, 4 * m)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral |Pi| value {total}")
    return int(total)


def lcd_count(params: FamilyParams) -> int:
    """2^|Pi| - 1 with the brute-force |Pi| as the authority."""
    return pi_set(params, with_closed_form=False).count


def sample_lcd_generators(params: FamilyParams, samples: int = 50, seed: int = 0):
    """Check the counting claim by sampling nonempty subsets S of Pi,
    building the self-reciprocal generator product over S (an f_gamma alone
    when its coset is negation-closed, else f_gamma * f_{Ld(n-gamma)}), and
    asserting the resulting code is LCD.  Returns the number of codes checked.
    """
    n = params.n
    part = cached_partition(params.q, params.m, params.lam)
    report = pi_set(params, with_closed_form=False)
    rng = random.Random(seed)
    pi = list(report.pi)
    checked = 0
    for _ in range(samples):
        size = rng.randint(1, len(pi))
        subset = rng.sample(pi, size)
        T = set()
        for g in subset:
            for coset_gamma in (g, part.leader_of((n - g) % n)):
                c = next(
                    cs for cs in part.cosets if cs.leader == coset_gamma
                )
                T.update(c.elements)
        if len(T) == n:
            continue  # the zero code is not counted
        code = cyclic_code(params, T)
        if not is_lcd(code):
            raise ArithmeticError(
                f"sampled generator from Pi subset {sorted(subset)} is not LCD"
            )
        checked += 1
    return checked
