"""Finite fields with integer-coded elements, dense polynomials over them,
minimal polynomials of n-th roots of unity, reciprocal polynomials, and the
coset-by-coset factorization of x^n - 1 over F_q."""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cosets import FamilyParams, orbit, partition
from .numtheory import PrimePower, factorize


# ---------------------------------------------------------------------------
# arithmetic on F_p[x] with plain coefficient lists (constant term first)

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a, b, f, p):
    """a*b mod f over F_p; f monic."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    d = len(f) - 1
    for k in range(len(out) - 1, d - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for j in range(d):
                out[k - d + j] = (out[k - d + j] - c * f[j]) % p
    return _fp_trim(out)


def _fp_powmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, f, p)
        base = _fp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b with b made monic on the fly
        lead_inv = pow(b[-1], p - 2, p)
        d = len(b) - 1
        r = list(a)
        while len(r) - 1 >= d and r:
            c = r[-1] * lead_inv % p
            shift = len(r) - 1 - d
            for j in range(len(b)):
                r[shift + j] = (r[shift + j] - c * b[j]) % p
            _fp_trim(r)
        a, b = b, r
    return a


def is_irreducible(p: int, coeffs) -> bool:
    """Irreducibility over F_p: x^(p^d) = x mod f and gcd(x^(p^(d/l)) - x, f) = 1
    for every prime l dividing d."""
    f = list(coeffs)
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _fp_powmod(x, p**d, f, p) != x:
        return False
    for ell in factorize(d):
        xk = _fp_powmod(x, p ** (d // ell), f, p)
        diff = [0] * max(len(xk), 2)
        for i, c in enumerate(xk):
            diff[i] = c
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(f, _fp_trim(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


# ---------------------------------------------------------------------------

class Field:
    """F_{p^degree} = F_p[x]/(modulus).

    Elements are integer codes in [0, p^degree): the base-p digits of a code
    are the coordinates in the power basis of x, constant term first.  That
    encoding is also the serialization format.
    """

    def __init__(self, p: int, modulus, check: bool = True):
        self.p = p
        self.modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
        self.degree = len(self.modulus) - 1
        self.order = p**self.degree
        if check and not is_irreducible(p, self.modulus):
            raise ValueError("modulus is not irreducible")
        # reduction rows: x^(degree+k) as a vector, for k = 0 .. degree-2
        d = self.degree
        row = [(-c) % p for c in self.modulus[:d]]
        self._red = [row]
        for _ in range(d - 2):
            top = row[d - 1]
            row = [0] + row[: d - 1]
            if top:
                row = [(row[j] + top * self._red[0][j]) % p for j in range(d)]
            self._red.append(row)
        self.generator = None  # set by build_extension when known

    def decode(self, code: int):
        digits = []
        for _ in range(self.degree):
            code, r = divmod(code, self.p)
            digits.append(r)
        return digits

    def encode(self, digits) -> int:
        code = 0
        for c in reversed(digits):
            code = code * self.p + c % self.p
        return code

    def add(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p, d = self.p, self.degree
        da, db = self.decode(a), self.decode(b)
        out = [0] * (2 * d - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    out[i + j] = (out[i + j] + ai * bj) % p
        vec = out[:d]
        for k in range(d, 2 * d - 1):
            c = out[k]
            if c:
                row = self._red[k - d]
                vec = [(vec[j] + c * row[j]) % p for j in range(d)]
        return self.encode(vec)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.order - 2)

    def element_order(self, a: int) -> int:
        """Multiplicative order via the factorization of order-1."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        o = self.order - 1
        for ell, e in factorize(o).items():
            for _ in range(e):
                if self.pow(a, o // ell) == 1:
                    o //= ell
                else:
                    break
        return o

    def __repr__(self):
        return f"Field(p={self.p}, degree={self.degree})"


class Poly:
    """Dense polynomial over a Field; coeffs are element codes, constant first,
    no trailing zeros (the zero polynomial has empty coeffs)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other):
        F = self.field
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = F.sub(out[i], c)
        return Poly(F, out)

    def __mul__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        lead_inv = F.inv(other.coeffs[-1])
        d = other.degree
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and rem:
            c = F.mul(rem[-1], lead_inv)
            shift = len(rem) - 1 - d
            quo[shift] = c
            for j, oc in enumerate(other.coeffs):
                rem[shift + j] = F.sub(rem[shift + j], F.mul(c, oc))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(F, quo), Poly(F, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = self.field.inv(self.coeffs[-1])
        return Poly(self.field, [self.field.mul(inv, c) for c in self.coeffs])

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly(f.field, [])
    return ((f * g) // poly_gcd(f, g)).monic()


def reciprocal(f: Poly) -> Poly:
    """c0^-1 * x^deg(f) * f(1/x): coefficient reversal normalized monic."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ValueError("reciprocal requires f(0) != 0")
    F = f.field
    inv0 = F.inv(f.coeffs[0])
    return Poly(F, [F.mul(inv0, c) for c in reversed(f.coeffs)])


def is_self_reciprocal(f: Poly) -> bool:
    return f == reciprocal(f)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootOfUnity:
    field: Field
    zeta: int
    n: int


def _monic_polys(p: int, d: int):
    """Monic degree-d coefficient tuples in increasing code order."""
    for code in range(p**d):
        digits = []
        c = code
        for _ in range(d):
            c, r = divmod(c, p)
            digits.append(r)
        yield tuple(digits) + (1,)


_PRIMITIVE_SEARCH_LIMIT = 60  # irreducibles inspected before giving up on a primitive x


def _prime_factors(k: int):
    return sorted(factorize(k))


@lru_cache(maxsize=32)
def _build_extension_cached(q: int, m: int, lam: int):
    params = FamilyParams(q, m, lam)
    pp = PrimePower.from_q(q)
    p = pp.p
    D = pp.e * 2 * m
    group = p**D - 1
    if group % params.n != 0:
        raise ArithmeticError("n does not divide p^(e*2m) - 1")  # cannot happen
    primes = _prime_factors(group)

    first_irreducible = None
    chosen = None
    seen = 0
    for cand in _monic_polys(p, D):
        if not is_irreducible(p, cand):
            continue
        if first_irreducible is None:
            first_irreducible = cand
        F = Field(p, cand, check=False)
        x = p  # code of the element x
        if all(F.pow(x, group // ell) != 1 for ell in primes):
            chosen, gen = F, x
            break
        seen += 1
        if seen >= _PRIMITIVE_SEARCH_LIMIT:
            break
    if chosen is None:
        if first_irreducible is None:
            raise ArithmeticError("no irreducible polynomial found")  # defensive
        chosen = Field(p, first_irreducible, check=False)
        gen = None
        for c in range(p, chosen.order):
            if all(chosen.pow(c, group // ell) != 1 for ell in primes):
                gen = c
                break
        if gen is None:
            raise ArithmeticError("no generator found")  # defensive

    chosen.generator = gen
    zeta = chosen.pow(gen, group // params.n)
    if chosen.pow(zeta, params.n) != 1 or any(
        chosen.pow(zeta, params.n // ell) == 1 for ell in _prime_factors(params.n)
    ):
        raise ArithmeticError("zeta does not have exact order n")  # defensive
    return chosen, RootOfUnity(chosen, zeta, params.n)


def build_extension(params: FamilyParams):
    """The extension F_{p^(e*2m)} together with a root of unity of exact order n.

    The modulus is the code-order (lexicographically) smallest monic
    irreducible whose root x generates the multiplicative group, searched
    among the first few irreducibles; failing that, the smallest irreducible
    with a deterministically chosen generator.
    """
    return _build_extension_cached(params.q, params.m, params.lam)


def _solve_coords(p: int, cols, vec):
    """Solve sum_i c_i * cols[i] = vec over F_p by Gaussian elimination."""
    e = len(cols)
    D = len(vec)
    aug = [[cols[j][i] for j in range(e)] + [vec[i]] for i in range(D)]
    pivots = []
    r = 0
    for c in range(e):
        pivot = next((i for i in range(r, D) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(D):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != e:
        raise ArithmeticError("basis columns are dependent")  # cannot happen
    for i in range(r, D):
        if aug[i][e]:
            raise ArithmeticError("element outside the subfield span")
    coords = [0] * e
    for i, c in enumerate(pivots):
        coords[c] = aug[i][e]
    return coords


def subfield(ext: Field, q: int):
    """(base field F_q, map from subfield codes of ext to base-field codes).

    For q = p the map is the identity on constants.  Otherwise the base field
    is F_p[y]/(minpoly of omega), where omega = g^((p^D-1)/(q-1)) for the
    extension's generator g, and subfield elements are re-encoded via their
    coordinates in the basis {1, omega, ..., omega^(e-1)}.
    """
    cache = getattr(ext, "_subfield_cache", None)
    if cache is None:
        cache = ext._subfield_cache = {}
    if q in cache:
        return cache[q]
    pp = PrimePower.from_q(q)
    if pp.p != ext.p or ext.degree % pp.e != 0 or (ext.order - 1) % (q - 1) != 0:
        raise ValueError(f"F_{q} is not a subfield")
    p, e = pp.p, pp.e
    if e == 1:
        base = Field(p, (0, 1), check=False)

        def to_base(code: int) -> int:
            if code >= p:
                raise ArithmeticError("element outside the prime subfield")
            return code

    else:
        if ext.generator is None:
            raise ValueError("extension lacks a recorded generator")
        omega = ext.pow(ext.generator, (ext.order - 1) // (q - 1))
        # minimal polynomial of omega over F_p from its Frobenius orbit
        conj, c = [], omega
        while True:
            conj.append(c)
            c = ext.pow(c, p)
            if c == omega:
                break
        if len(conj) != e:
            raise ArithmeticError("unexpected Frobenius orbit length")
        mp = Poly(ext, [1])
        for c in conj:
            mp = mp * Poly(ext, [ext.neg(c), 1])
        coeffs = []
        for code in mp.coeffs:
            if code >= p:
                raise ArithmeticError("minimal polynomial not over F_p")
            coeffs.append(code)
        base = Field(p, coeffs)
        basis = [ext.decode(ext.pow(omega, i)) for i in range(e)]

        def to_base(code: int) -> int:
            return base.encode(_solve_coords(p, basis, ext.decode(code)))

    cache[q] = (base, to_base)
    return cache[q]


def minimal_poly(params: FamilyParams, root: RootOfUnity, gamma: int) -> Poly:
    """f_gamma = prod over the coset of gamma of (x - zeta^elem), re-encoded
    over F_q after checking every coefficient is Frobenius-fixed."""
    if not 0 <= gamma < params.n:
        raise ValueError("gamma out of range")
    ext = root.field
    base, to_base = subfield(ext, params.q)
    f = Poly(ext, [1])
    for k in orbit(params.n, params.q, gamma):
        f = f * Poly(ext, [ext.neg(ext.pow(root.zeta, k)), 1])
    out = []
    for c in f.coeffs:
        if ext.pow(c, params.q) != c:
            raise ArithmeticError("coefficient escapes the base field")
        out.append(to_base(c))
    return Poly(base, out)


def factor_xn_minus_1(params: FamilyParams):
    """[(leader, f_leader)] sorted by leader; the product is x^n - 1 over F_q."""
    ext, root = build_extension(params)
    return [
        (c.leader, minimal_poly(params, root, c.leader))
        for c in partition(params).cosets
    ]
