"""Elementary number theory used throughout: prime powers, Mobius, orders, 2-adic valuations."""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def factorize(k: int) -> dict:
    """Prime factorization {p: e} by trial division. Fine for the sizes we handle."""
    if k < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            out[d] = out.get(d, 0) + 1
            k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def divisors(k: int) -> list:
    """Sorted list of positive divisors."""
    divs = [1]
    for p, e in factorize(k).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^e."""

    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, e), = fac.items()
        return cls(p, e)


@lru_cache(maxsize=None)
def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius expects a positive integer")
    mu = 1
    for _, e in factorize(k).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def mult_order(q: int, d: int) -> int:
    """Multiplicative order of q modulo d. Requires gcd(q, d) == 1."""
    if d < 1:
        raise ValueError("modulus must be positive")
    if gcd(q, d) != 1:
        raise ValueError(f"gcd({q}, {d}) != 1, order undefined")
    if d == 1:
        return 1
    # order divides the Carmichael-style exponent; walk divisors of a brute order bound
    # cheaply: just iterate powers, d is small in our use.
    acc = q % d
    k = 1
    while acc != 1:
        acc = acc * q % d
        k += 1
    return k


def v2(x: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("v2(0) is undefined")
    return (x & -x).bit_length() - 1


def lte_v2_qk_minus_1(q: int, k: int) -> int:
    """v2(q^k - 1) for odd q via the lifting-the-exponent identities.

    k odd:  v2(q^k - 1) = v2(q - 1)
    k even: v2(q^k - 1) = v2(q - 1) + v2(q + 1) + v2(k) - 1
    """
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k % 2 == 1:
        return v2(q - 1)
    return v2(q - 1) + v2(q + 1) + v2(k) - 1
