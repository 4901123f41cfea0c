"""Census of coset sizes: which sizes occur and how many cosets have each."""

from dataclasses import dataclass
from math import gcd

from .cosets import FamilyParams
from .numtheory import divisors, mobius, mult_order, v2


@dataclass(frozen=True)
class SizeSpectrum:
    entries: dict  # size tau -> count N_tau, zero counts omitted
    v: int
    m0: int
    h: int

    def total(self) -> int:
        return sum(tau * cnt for tau, cnt in self.entries.items())


def possible_sizes(n: int, q: int) -> set:
    """All coset sizes mod n: {ord_d(q) : d | n}."""
    if gcd(n, q) != 1:
        raise ValueError("gcd(n, q) != 1")
    return {mult_order(q, d) for d in divisors(n)}


def count_by_size_general(n: int, q: int, tau: int) -> int:
    """Mobius census: N_tau = (1/tau) * sum_{eps | tau} mu(eps) * gcd(n, q^(tau/eps) - 1)."""
    if gcd(n, q) != 1:
        raise ValueError("gcd(n, q) != 1")
    if tau < 1:
        raise ValueError("tau must be positive")
    acc = sum(mobius(eps) * gcd(n, q ** (tau // eps) - 1) for eps in divisors(tau))
    if acc % tau != 0:
        raise ArithmeticError(f"Mobius sum {acc} not divisible by tau={tau}")
    return acc // tau


def _mobius_power_sum(q: int, tau0: int, exp_scale: int) -> int:
    """sum_{eps | tau0} mu(eps) * q^(exp_scale * tau0 / eps)."""
    return sum(mobius(eps) * q ** (exp_scale * tau0 // eps) for eps in divisors(tau0))


def spectrum_closed_form(params: FamilyParams) -> SizeSpectrum:
    """The closed-form size spectrum for n = lambda*(q^m+1), split on the
    parities of q and m; h = gcd(2, (q-1)/lambda), m = 2^v * m0."""
    q, m, lam = params.q, params.m, params.lam
    v = v2(m)
    m0 = m >> v
    h = gcd(2, (q - 1) // lam)
    entries = {}

    def put(tau, num):
        if num % tau != 0:
            raise ArithmeticError(f"count for tau={tau} not integral: {num}/{tau}")
        if num:
            entries[tau] = num // tau

    if q % 2 == 1 and m % 2 == 1:
        entries[1] = lam * h
        put(2, lam * (q - h + 1))
        for tau0 in divisors(m0):
            if tau0 > 1:
                put(2 * tau0, lam * _mobius_power_sum(q, tau0, 1))
    elif q % 2 == 1:
        entries[1] = lam * h
        put(2, lam * (2 - h))
        put(2 ** (v + 1), lam * (q ** (2**v) - 1))
        for tau0 in divisors(m0):
            if tau0 > 1:
                put(2 ** (v + 1) * tau0, lam * _mobius_power_sum(q, tau0, 2**v))
    else:
        entries[1] = lam
        for tau0 in divisors(m0):
            put(2 ** (v + 1) * tau0, lam * _mobius_power_sum(q, tau0, 2**v))
    return SizeSpectrum(entries, v, m0, h)
