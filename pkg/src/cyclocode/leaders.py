"""Closed-form coset-leader criteria for n = lambda*(q^m+1).

A residue gamma (with invariant a = gamma mod lambda in [1, lambda]) is a
leader iff it lies in the low half of one of its two mirror intervals
(condition one) and is not the image of a smaller coset-mate under some power
of q.  The excluded values come in seven parametric families; membership is
decided by solving each family's linear form for (A, B) at every shift t,
never by materializing the families.

Two variants are provided: "statement" follows the printed inequalities
exactly (A >= 1 in E1/E2_1/E2_2, no CASE2_2 family); "proof" relaxes those
lower bounds to A >= 0 and adds the CASE2_2 family, which together make the
criterion complete.  The harness reports where the two differ.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cosets import FamilyParams

FAMILY_IDS = ("E1", "E2_1", "E2_2", "E2_3", "E3_1", "E3_2", "CASE2_2")


@dataclass(frozen=True)
class ExclusionFamily:
    family_id: str
    t: int
    A: int
    B: int  # 0 for E1
    a: int
    value: int


@dataclass(frozen=True)
class LeaderVerdict:
    gamma: int
    is_leader: bool
    reason: str  # "leader" | "range_violation" | "excluded"
    family: ExclusionFamily | None = None
    oracle_agrees: bool | None = None


@dataclass(frozen=True)
class ExtremalLeaders:
    delta1: int
    delta1_coset_size: int
    delta2: int | None
    delta2_coset_size: int | None


@lru_cache(maxsize=256)
def _shift_context(q: int, m: int, lam: int):
    """Per-t data for the family solver: (t, q^t, q^(m-t), lam^-1 mod q^(m-t))."""
    out = []
    for t in range(1, m):
        M = q ** (m - t)
        out.append((t, q**t, M, pow(lam, -1, M)))
    return tuple(out)


def in_condition_one(params: FamilyParams, gamma: int) -> bool:
    """Condition (1): gamma <= (a/2)(q^m+1), or a(q^m+1) < gamma <= ((lam+a)/2)(q^m+1)."""
    if not 0 <= gamma < params.n:
        raise ValueError("gamma out of range")
    a = params.residue(gamma)
    big = params.q**params.m + 1
    if 2 * gamma <= a * big:
        return True
    return a * big < gamma and 2 * gamma <= (params.lam + a) * big


def is_excluded(params: FamilyParams, gamma: int, variant: str = "proof"):
    """First exclusion-family witness containing gamma, or None.

    Each family fixes the value as a linear form in (A, B) for a given t, so A
    is determined modulo q^(m-t) and B follows by exact division; only the
    printed inequalities remain to check (strictness preserved symbol for
    symbol, fractions compared by cross-multiplication).
    """
    if variant not in ("statement", "proof"):
        raise ValueError("variant must be 'statement' or 'proof'")
    if not 0 <= gamma < params.n:
        raise ValueError("gamma out of range")
    proof = variant == "proof"
    L = params.lam
    a = params.residue(gamma)
    Q = params.q**params.m + 1
    a_low = 0 if proof else 1  # lower bound for A in E1 / E2_1 / E2_2

    for t, T, M, invL in _shift_context(params.q, params.m, L):
        # E1: value = a*M - A*L, A < a(M-1)/(L(T+1))
        num = a * M - gamma
        if num >= 0 and num % L == 0:
            A = num // L
            if A >= a_low and A * L * (T + 1) < a * (M - 1):
                return ExclusionFamily("E1", t, A, 0, a, gamma)

        # E2 families: value = M*(B*L + a) - A*L  =>  A = -gamma * L^-1 (mod M)
        A = (-gamma * invL) % M
        num = gamma + A * L
        if num % M == 0:
            s = num // M - a
            if s > 0 and s % L == 0:
                B = s // L
                # (2.1): A < a(M-1)/(2L);  AL(T+1)-a(M-1) < BL(M-1);  2LMB <= aQ+2AL-2aM
                if (
                    A >= a_low
                    and 2 * A * L < a * (M - 1)
                    and B * L * (M - 1) > A * L * (T + 1) - a * (M - 1)
                    and 2 * L * M * B <= a * Q + 2 * A * L - 2 * a * M
                ):
                    return ExclusionFamily("E2_1", t, A, B, a, gamma)
                # (2.2): A <= a(M-1)/L;  LMB > aQ+AL-aM;  2LMB <= (L+a)Q+2AL-2aM
                if (
                    A >= a_low
                    and A * L <= a * (M - 1)
                    and B * L * M > a * Q + A * L - a * M
                    and 2 * L * M * B <= (L + a) * Q + 2 * A * L - 2 * a * M
                ):
                    return ExclusionFamily("E2_2", t, A, B, a, gamma)
                # (2.3): a(M-1)/L < A < (L+a)(M-1)/(2L); bounds as in 2.1 low / 2.2 high
                if (
                    a * (M - 1) < A * L
                    and 2 * A * L < (L + a) * (M - 1)
                    and B * L * (M - 1) > A * L * (T + 1) - a * (M - 1)
                    and 2 * L * M * B <= (L + a) * Q + 2 * A * L - 2 * a * M
                ):
                    return ExclusionFamily("E2_3", t, A, B, a, gamma)

        # E3 families: value = (L+a)*Q - M*(B*L + a) + A*L
        A = ((gamma - (L + a) * Q) * invL) % M
        num = (L + a) * Q + A * L - gamma
        if num > 0 and num % M == 0:
            s = num // M - a
            if s > 0 and s % L == 0:
                B = s // L
                low_ok = 2 * L * M * B > (L + a) * Q + 2 * A * L - 2 * a * M
                # (3.1): A*L < a*M - L;  B < (AL + LQ - aM)/(LM)
                if (
                    A * L < a * M - L
                    and low_ok
                    and B * L * M < A * L + L * Q - a * M
                ):
                    return ExclusionFamily("E3_1", t, A, B, a, gamma)
                # (3.2): aM - L <= A*L < (L+a)(M-1)/2; B(L)(M+1) < (L+a)Q - a(M+1) - AL(T-1)
                if (
                    A * L >= a * M - L
                    and 2 * A * L < (L + a) * (M - 1)
                    and low_ok
                    and B * L * (M + 1) < (L + a) * Q - a * (M + 1) - A * L * (T - 1)
                ):
                    return ExclusionFamily("E3_2", t, A, B, a, gamma)

        if not proof:
            continue
        # CASE2_2 (proof only): value = a*Q - M*(B*L + a) + A*L
        A = ((gamma - a * Q) * invL) % M
        num = a * Q + A * L - gamma
        if num > 0 and num % M == 0:
            s = num // M - a
            if s > 0 and s % L == 0:
                B = s // L
                if (
                    2 * A * L < a * (M - 1)
                    and 2 * L * M * B > a * Q + 2 * A * L - 2 * a * M
                    and B * L * (M + 1) < (T - 1) * (a * M - A * L)
                ):
                    return ExclusionFamily("CASE2_2", t, A, B, a, gamma)
    return None


def is_leader_closed_form(params: FamilyParams, gamma: int, variant: str = "proof") -> LeaderVerdict:
    if not in_condition_one(params, gamma):
        return LeaderVerdict(gamma, False, "range_violation")
    fam = is_excluded(params, gamma, variant)
    if fam is not None:
        return LeaderVerdict(gamma, False, "excluded", fam)
    return LeaderVerdict(gamma, True, "leader")


def m2_exceptions(q: int, lam: int):
    """Exceptions inside the m = 2 guaranteed range [1, lambda*q - 1].

    For m = 2 the q^2-power mate of gamma is a*(q^2+1) - gamma with
    a = gamma mod lambda in [1, lambda], so gamma fails to be a leader of
    size 4 exactly when 2*gamma >= a*(q^2+1): equality gives a size-2 coset,
    strict inequality means gamma is not a leader at all (size None).
    """
    Q = q * q + 1
    out = []
    for g in range(1, lam * q):
        if g % q == 0:
            continue
        a = g % lam or lam
        if 2 * g == a * Q:
            out.append((g, 2))
        elif 2 * g > a * Q:
            out.append((g, None))
    return out


def guaranteed_leader_range(params: FamilyParams):
    """(G, size, exceptions): every 1 <= gamma <= G with q not dividing gamma is a
    leader of size 2m, except the listed (gamma, size) pairs; size None means
    gamma is not a leader at all."""
    q, m, lam = params.q, params.m, params.lam
    if m == 1:
        raise ValueError("no guaranteed-range result for m = 1")
    exceptions = []
    if m == 2:
        G = lam * q - 1
        exceptions = m2_exceptions(q, lam)
    elif m % 2 == 0:
        G = lam * q ** (m // 2) - 1
    elif m == 3:
        G = 2 * lam * q - 1
        if lam >= (q + 1) // 2:  # ceil(q/2)
            exceptions.append((q * q - q + 1, 2))
    else:
        G = lam * (q ** ((m - 1) // 2) + q) - 1
    return G, 2 * m, exceptions


def extremal_leaders(params: FamilyParams) -> ExtremalLeaders:
    """Largest and second-largest leaders for odd m (delta2 needs m >= 3)."""
    q, m, lam = params.q, params.m, params.lam
    if m % 2 == 0:
        raise ValueError("extremal leader formulas require odd m")
    Q = q**m + 1
    if ((q - 1) // lam) % 2 == 1:
        d1 = (Q // (q + 1)) * (2 * lam * q + lam - q - 1) // 2
        d1_size = 2
    else:
        d1 = (2 * lam - 1) * Q // 2
        d1_size = 1
    if m < 3:
        return ExtremalLeaders(d1, d1_size, None, None)
    if ((q - 1) // lam) % 2 == 1:
        d2 = d1 - lam * q * (q ** (m - 2) + 1) // (q + 1)
        d2_size = 2 * m
    else:
        d2 = d1 - lam * Q // (q + 1)
        d2_size = 2
    return ExtremalLeaders(d1, d1_size, d2, d2_size)


def proposition_range_nonleaders(q: int, m: int):
    """Open interval ((q^m+1)(q^2-2q-1)/(q+1), (q-2)(q^m+1)) claimed leader-free
    for lambda = q-1 and odd m."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    Q = q**m + 1
    return (Q // (q + 1)) * (q * q - 2 * q - 1), (q - 2) * Q
