"""q-cyclotomic cosets modulo n, specialised to lengths n = lambda*(q^m + 1)."""

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .numtheory import PrimePower, mult_order


@dataclass(frozen=True)
class FamilyParams:
    """Admissible parameters: q a prime power, m >= 1, lam | q - 1, n = lam*(q^m + 1).

    For these lengths ord_n(q) = 2m always holds (q^m = -1 mod q^m+1 and
    q = 1 mod lam), which the constructor checks anyway.
    """

    q: int
    m: int
    lam: int
    n: int = field(init=False)

    def __post_init__(self):
        PrimePower.from_q(self.q)  # raises if q is not a prime power
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.lam < 1 or (self.q - 1) % self.lam != 0:
            raise ValueError(f"lambda={self.lam} must divide q-1={self.q - 1}")
        n = self.lam * (self.q**self.m + 1)
        object.__setattr__(self, "n", n)
        if gcd(n, self.q) != 1:
            raise ValueError("gcd(n, q) != 1")
        if mult_order(self.q, n) != 2 * self.m:
            raise ValueError("ord_n(q) != 2m")  # cannot happen for admissible input

    def residue(self, gamma: int) -> int:
        """The invariant a in [1, lam] with gamma = a (mod lam)."""
        a = gamma % self.lam
        return a if a != 0 else self.lam


@dataclass(frozen=True)
class Coset:
    """One q-cyclotomic coset modulo n, elements in cycle order from the leader."""

    leader: int
    size: int
    elements: tuple
    residue_a: int


def orbit(n: int, q: int, gamma: int) -> tuple:
    """The q-cyclotomic coset of gamma modulo n, in cycle order gamma, gamma*q, ..."""
    gamma %= n
    out = [gamma]
    x = gamma * q % n
    while x != gamma:
        out.append(x)
        x = x * q % n
    return tuple(out)


def leader_table(n: int, q: int) -> list:
    """leader_table(n,q)[g] is the minimum of the coset of g; O(n) total."""
    lead = list(range(n))
    seen = bytearray(n)
    for g in range(n):
        if seen[g]:
            continue
        orb = []
        x = g
        while not seen[x]:
            seen[x] = 1
            orb.append(x)
            x = x * q % n
        for y in orb:
            lead[y] = g  # g is minimal: it is the first unseen element
    return lead


def coset(params: FamilyParams, gamma: int) -> Coset:
    elems = orbit(params.n, params.q, gamma)
    lead = min(elems)
    i = elems.index(lead)
    elems = elems[i:] + elems[:i]
    return Coset(lead, len(elems), elems, params.residue(lead))


def leader_of(params: FamilyParams, gamma: int) -> int:
    return min(orbit(params.n, params.q, gamma))


@dataclass(frozen=True)
class CosetPartition:
    """All cosets modulo n, sorted by leader, with O(1) leader lookup."""

    params: FamilyParams
    cosets: tuple
    _leader: tuple

    def leader_of(self, gamma: int) -> int:
        return self._leader[gamma % self.params.n]

    @property
    def leaders(self) -> list:
        return [c.leader for c in self.cosets]

    def size_histogram(self) -> dict:
        hist = {}
        for c in self.cosets:
            hist[c.size] = hist.get(c.size, 0) + 1
        return hist


def partition(params: FamilyParams) -> CosetPartition:
    n, q = params.n, params.q
    lead = leader_table(n, q)
    cosets = []
    for g in range(n):
        if lead[g] == g:
            elems = orbit(n, q, g)
            cosets.append(Coset(g, len(elems), elems, params.residue(g)))
    return CosetPartition(params, tuple(cosets), tuple(lead))


@lru_cache(maxsize=64)
def cached_partition(q: int, m: int, lam: int) -> CosetPartition:
    return partition(FamilyParams(q, m, lam))


def reflect(params: FamilyParams, gamma: int) -> int:
    """The mirror coset-mate of gamma: a*(q^m+1)-gamma if gamma <= a*(q^m+1),
    else (lam+a)*(q^m+1)-gamma.  Always lands in the coset of gamma."""
    if not 0 <= gamma < params.n:
        raise ValueError("gamma out of range")
    a = params.residue(gamma)
    big = params.q**params.m + 1
    if gamma <= a * big:
        return (a * big - gamma) % params.n
    return (params.lam + a) * big - gamma


def fold_value(params: FamilyParams, x: int) -> int:
    """Fold x into the lower half of its mirror pair.

    Returns a*(q^m+1)-x when (a/2)(q^m+1) < x < a*(q^m+1), the case-2 mirror
    (lam+a)(q^m+1)-x when ((lam+a)/2)(q^m+1) < x < n, and x itself otherwise
    (boundaries included in the identity branch, strict as printed).
    Comparisons are on doubled integers so everything stays exact.
    """
    if not 0 <= x < params.n:
        raise ValueError("x out of range")
    a = params.residue(x)
    big = params.q**params.m + 1
    if a * big < 2 * x < 2 * a * big:
        return a * big - x
    if (params.lam + a) * big < 2 * x:
        return (params.lam + a) * big - x
    return x


def fold(params: FamilyParams, gamma: int, t: int = 0) -> int:
    """fold of gamma*q^t mod n; the residue a is shared by gamma and gamma*q^t."""
    if not 0 <= gamma < params.n:
        raise ValueError("gamma out of range")
    if t < 0:
        raise ValueError("t must be nonnegative")
    return fold_value(params, gamma * pow(params.q, t, params.n) % params.n)


def negation_in_same_coset(params: FamilyParams, gamma: int, mode: str = "closed") -> bool:
    """Whether -gamma lies in the coset of gamma.

    mode="brute" walks the orbit; mode="closed" uses the classification:
    lam | gamma, or q = 3 (mod 4), lam even, m even and (n/4) | gamma.
    """
    gamma %= params.n
    if mode == "brute":
        return (params.n - gamma) % params.n in orbit(params.n, params.q, gamma)
    if mode != "closed":
        raise ValueError("mode must be 'brute' or 'closed'")
    if gamma % params.lam == 0:
        return True
    if params.q % 4 == 3 and params.lam % 2 == 0 and params.m % 2 == 0:
        quarter = params.n // 4  # n = 0 (mod 4) holds in this case
        return gamma % quarter == 0
    return False
