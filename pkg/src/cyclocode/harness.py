"""Grid verification harness: every closed form is replayed against an
independent brute-force oracle over a deterministic parameter grid, and every
disagreement becomes a Finding.  Severities: theorem_mismatch (a closed form
contradicts its oracle), paper_variant_gap (the printed-statement exclusion
variant differs from the complete proof variant), info (censuses, golden
values, conjecture verdicts)."""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cosets import (
    FamilyParams,
    cached_partition,
    fold_value,
    leader_table,
    negation_in_same_coset,
    orbit,
)
from .codes import (
    BCHSpec,
    _coset_masks,
    bch_defining_set,
    dimension_closed_form,
    min_distance,
    symmetric_bch_code,
)
from .fieldpoly import Poly, factor_xn_minus_1, is_self_reciprocal, reciprocal
from .leaders import (
    extremal_leaders,
    guaranteed_leader_range,
    is_leader_closed_form,
    proposition_range_nonleaders,
)
from .lcd import (
    pi_set,
    pi_size_qm1_even,
    pi_size_qm1_odd_prime,
    sample_lcd_generators,
)
from .numtheory import divisors, lte_v2_qk_minus_1, v2
from .spectrum import count_by_size_general, possible_sizes, spectrum_closed_form

ALL_SUITES = (
    "leaders",
    "extremal",
    "negation",
    "fold",
    "spectrum",
    "dimensions",
    "dually_bch",
    "poly",
    "lcd",
    "lte",
)

GAP_FINDING_CAP = 25  # per grid point; a summary finding carries the total


@dataclass(frozen=True)
class GridSpec:
    q_values: tuple = (2, 3, 4, 5, 7, 8, 9)
    m_max: int = 6
    n_cap: int = 200_000
    suites: tuple = ALL_SUITES
    poly_n_cap: int = 1200
    dually_n_cap: int = 4096
    lcd_sample_n_cap: int = 400
    sym_distance_n_cap: int = 100
    min_distance_budget: int = 10**7


@dataclass(frozen=True)
class Finding:
    grid_point: tuple  # (q, m, lam) or (family, q, m) for conjectures
    check: str
    expected: object
    actual: object
    witness: object
    severity: str  # theorem_mismatch | paper_variant_gap | info

    def to_record(self) -> dict:
        def enc(x):
            if isinstance(x, int) and abs(x) >= 2**53:
                return str(x)
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {str(k): enc(v) for k, v in x.items()}
            if isinstance(x, (set, frozenset)):
                return sorted(enc(v) for v in x)
            return x

        return {
            "grid_point": list(self.grid_point),
            "check": self.check,
            "expected": enc(self.expected),
            "actual": enc(self.actual),
            "witness": enc(self.witness),
            "severity": self.severity,
        }


def grid_points(grid: GridSpec):
    pts = []
    for q in sorted(grid.q_values):
        for m in range(1, grid.m_max + 1):
            for lam in divisors(q - 1):
                n = lam * (q**m + 1)
                if n <= grid.n_cap:
                    pts.append((q, m, lam))
    pts.sort()
    return [FamilyParams(q, m, lam) for q, m, lam in pts]


# ---------------------------------------------------------------------------
# per-suite checks; each returns a list of Findings

def check_leaders(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    lead = leader_table(params.n, params.q)
    gaps = 0
    for g in range(params.n):
        truth = lead[g] == g
        proof = is_leader_closed_form(params, g, "proof")
        if proof.is_leader != truth:
            out.append(
                Finding(gp, "leader_proof_variant", truth, proof.is_leader, g,
                        "theorem_mismatch")
            )
        stmt = is_leader_closed_form(params, g, "statement")
        if stmt.is_leader != truth:
            gaps += 1
            if gaps <= GAP_FINDING_CAP:
                out.append(
                    Finding(gp, "leader_statement_variant", truth,
                            stmt.is_leader, g, "paper_variant_gap")
                )
    if gaps:
        out.append(
            Finding(gp, "leader_statement_variant_total", 0, gaps, None, "info")
        )
    leaders = [g for g in range(params.n) if lead[g] == g]
    out.append(
        Finding(gp, "leader_census",
                len(leaders), len(leaders),
                leaders if params.n <= 200 else None, "info")
    )
    return out


def check_extremal(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    part = cached_partition(params.q, params.m, params.lam)
    by_leader = {c.leader: c for c in part.cosets}
    leaders = sorted(by_leader)
    if params.m % 2 == 1:
        ex = extremal_leaders(params)
        brute1 = leaders[-1]
        pairs = [("delta1", ex.delta1, brute1),
                 ("delta1_size", ex.delta1_coset_size, by_leader[brute1].size)]
        if ex.delta2 is not None:
            brute2 = leaders[-2]
            pairs += [("delta2", ex.delta2, brute2),
                      ("delta2_size", ex.delta2_coset_size, by_leader[brute2].size)]
        for name, expected, actual in pairs:
            if expected != actual:
                out.append(Finding(gp, f"extremal_{name}", expected, actual,
                                   None, "theorem_mismatch"))
        # delta1 is lambda-1 mod lambda, and (lam-1)(q^m+1)+1 leads a 2m-coset
        if ex.delta1 % params.lam != (params.lam - 1) % params.lam:
            out.append(Finding(gp, "extremal_delta1_residue",
                               (params.lam - 1) % params.lam,
                               ex.delta1 % params.lam, None, "theorem_mismatch"))
        if params.lam >= 2:
            marker = (params.lam - 1) * (params.q**params.m + 1) + 1
            c = by_leader.get(marker)
            if c is None or c.size != 2 * params.m:
                out.append(Finding(gp, "extremal_marker_leader",
                                   (marker, 2 * params.m),
                                   (marker, c.size if c else None),
                                   marker, "theorem_mismatch"))
    if params.m >= 2:
        G, size, exceptions = guaranteed_leader_range(params)
        exc = dict(exceptions)
        for g in range(1, min(G, params.n - 1) + 1):
            if g % params.q == 0:
                continue
            c = by_leader.get(g)
            want = exc.get(g, size)  # None means "not a leader"
            got = c.size if c else None
            if got != want:
                out.append(Finding(gp, "guaranteed_range",
                                   (g, want), (g, got),
                                   g, "theorem_mismatch"))
    if params.m % 2 == 1 and params.lam == params.q - 1 and params.q > 2:
        lo, hi = proposition_range_nonleaders(params.q, params.m)
        bad = [g for g in range(lo + 1, hi)
               if 0 < g < params.n and g in by_leader]
        if bad:
            out.append(Finding(gp, "proposition_nonleader_range", [], bad[:10],
                               (lo, hi), "theorem_mismatch"))
    return out


def check_negation(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    for g in range(params.n):
        closed = negation_in_same_coset(params, g, mode="closed")
        brute = negation_in_same_coset(params, g, mode="brute")
        if closed != brute:
            out.append(Finding(gp, "negation_closed_form", brute, closed, g,
                               "theorem_mismatch"))
    return out


def check_fold(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    part = cached_partition(params.q, params.m, params.lam)
    for c in part.cosets:
        fv = [fold_value(params, x) for x in c.elements]
        if min(fv) != c.leader:
            out.append(Finding(gp, "fold_min_is_leader", c.leader, min(fv),
                               c.leader, "theorem_mismatch"))
        half = (c.size + 1) // 2 + 1
        if min(fv[:half]) != c.leader:
            out.append(Finding(gp, "fold_half_period_miss", c.leader,
                               min(fv[:half]), c.leader, "info"))
    return out


def check_spectrum(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    part = cached_partition(params.q, params.m, params.lam)
    oracle = part.size_histogram()
    closed = spectrum_closed_form(params).entries
    general = {
        tau: count_by_size_general(params.n, params.q, tau)
        for tau in sorted(possible_sizes(params.n, params.q))
    }
    general = {tau: c for tau, c in general.items() if c}
    for name, table in (("spectrum_closed_form", closed),
                        ("spectrum_mobius", general)):
        if table != oracle:
            out.append(Finding(gp, name, oracle, table, None,
                               "theorem_mismatch"))
    if sum(tau * c for tau, c in oracle.items()) != params.n:
        out.append(Finding(gp, "spectrum_total", params.n,
                           sum(tau * c for tau, c in oracle.items()), None,
                           "theorem_mismatch"))
    return out


def _delta_range(params: FamilyParams):
    q, m, lam = params.q, params.m, params.lam
    if m == 2:
        return lam * q + 1
    if m == 3:
        return 2 * lam * q + 1
    if m % 2 == 0:
        return lam * q ** (m // 2) + 1
    return lam * (q ** ((m - 1) // 2) + q) + 1


def check_dimensions(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    if params.m < 2:
        return out
    n, q, lam, m = params.n, params.q, params.lam, params.m
    hi = _delta_range(params)
    # incremental defining set for C_{(q,n,delta,0)}, delta = 3..hi
    T = set(orbit(n, q, 0)) | set(orbit(n, q, 1))
    for delta in range(3, hi + 1):
        T |= set(orbit(n, q, delta - 2))
        want = n - len(T)
        got = dimension_closed_form(params, delta)
        if got != want:
            out.append(Finding(gp, "dimension_closed_form", want, got, delta,
                               "theorem_mismatch"))
    # the symmetric family (side conditions checked by symmetric_bch_code)
    sym_ok = not (
        (m == 2 and q % 2 == 1 and 2 * lam > q - 1)
        or (m == 3 and 2 * lam > q + 1)
    )
    if sym_ok:
        sym_hi = (lam * q ** (m // 2) - 1 if m % 2 == 0
                  else lam * (q ** ((m - 1) // 2) + q) - 1)
        for delta in range(lam, sym_hi + 1, lam):
            try:
                symmetric_bch_code(params, delta, with_generator=False)
            except ArithmeticError as exc:
                out.append(Finding(gp, "symmetric_dimension", None, str(exc),
                                   delta, "theorem_mismatch"))
        if n <= grid.sym_distance_n_cap and sym_hi >= 2 * lam:
            code, bound, _ = symmetric_bch_code(params, 2 * lam)
            dist = min_distance(code, budget=grid.min_distance_budget)
            out.append(Finding(
                gp, "symmetric_example",
                {"bound": bound},
                {"n": n, "k": code.dimension, "d_lower": dist.lower,
                 "d_upper": dist.upper, "d_exact": dist.exact},
                2 * lam, "info"))
            if dist.lower < bound:
                out.append(Finding(gp, "symmetric_bound", bound, dist.lower,
                                   2 * lam, "theorem_mismatch"))
    return out


def _mask_is_bch_form(n: int, masks, t_mask: int, t_set) -> bool:
    """Whether t_set (with bitmask t_mask) is a union of consecutive cosets.
    Only maximal consecutive runs need checking: any witnessing window sits
    inside one."""
    for b in t_set:
        if (b - 1) % n in t_set:
            continue
        acc = 0
        steps = 0
        while ((b + steps) % n) in t_set:
            acc |= masks[(b + steps) % n]
            steps += 1
        if acc == t_mask:
            return True
    return False


def check_dually_bch(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    if params.m < 3 or params.m % 2 == 0 or params.lam < 2:
        return out
    n = params.n
    if n > grid.dually_n_cap:
        return out
    ex = extremal_leaders(params)
    masks = _coset_masks(params.q, params.m, params.lam)
    full = (1 << n) - 1
    t_set = set(orbit(n, params.q, 0)) | set(orbit(n, params.q, 1))
    inv_mask = 0
    for t in t_set:
        inv_mask |= 1 << ((n - t) % n)
    brute = None  # recomputed whenever T changes
    for delta in range(3, ex.delta1 + 2):
        i = delta - 2
        if i not in t_set or brute is None:
            if i not in t_set:
                for t in orbit(n, params.q, i):
                    t_set.add(t)
                    inv_mask |= 1 << ((n - t) % n)
            perp_mask = full & ~inv_mask
            if perp_mask == 0:
                brute = True
            else:
                perp_set = {t for t in range(n) if (perp_mask >> t) & 1}
                brute = _mask_is_bch_form(n, masks, perp_mask, perp_set)
        closed = ex.delta2 + 2 <= delta <= ex.delta1 + 1
        if brute != closed:
            out.append(Finding(gp, "dually_bch", closed, brute, delta,
                               "theorem_mismatch"))
    out.append(Finding(gp, "dually_bch_interval",
                       None, [ex.delta2 + 2, ex.delta1 + 1], None, "info"))
    return out


def check_poly(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    if params.n > grid.poly_n_cap:
        return out
    facs = factor_xn_minus_1(params)
    base = facs[0][1].field
    prod = Poly(base, [1])
    for _, f in facs:
        prod = prod * f
    target = Poly(base, [base.neg(1)] + [0] * (params.n - 1) + [1])
    if prod != target:
        out.append(Finding(gp, "factorization_identity", True, False, None,
                           "theorem_mismatch"))
    for lead, f in facs:
        selfrec = is_self_reciprocal(f)
        negclosed = negation_in_same_coset(params, lead, mode="brute")
        if selfrec != negclosed:
            out.append(Finding(gp, "self_reciprocal_iff_negation", negclosed,
                               selfrec, lead, "theorem_mismatch"))
        if reciprocal(reciprocal(f)) != f:
            out.append(Finding(gp, "reciprocal_involution", True, False, lead,
                               "theorem_mismatch"))
    return out


def check_lcd(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    report = pi_set(params)
    if report.pi_size_closed_form != report.pi_size_bruteforce:
        out.append(Finding(gp, "pi_size_closed_form",
                           report.pi_size_bruteforce,
                           report.pi_size_closed_form,
                           {"gamma": len(report.gamma), "pi": list(report.pi)[:30]},
                           "theorem_mismatch"))
    if params.lam == params.q - 1 and params.q > 2:
        if params.q % 2 == 1 and params.m in (3, 5):
            coro = pi_size_qm1_odd_prime(params.q, params.m)
            if coro != report.pi_size_bruteforce:
                out.append(Finding(gp, "pi_size_corollary_odd",
                                   report.pi_size_bruteforce, coro, None,
                                   "theorem_mismatch"))
        if params.q % 2 == 0 and params.m in (3, 5):
            coro = pi_size_qm1_even(params.q, params.m)
            if coro != report.pi_size_bruteforce:
                out.append(Finding(gp, "pi_size_corollary_even",
                                   report.pi_size_bruteforce, coro, None,
                                   "theorem_mismatch"))
    if params.n <= grid.lcd_sample_n_cap:
        try:
            sample_lcd_generators(params, samples=10, seed=0)
        except ArithmeticError as exc:
            out.append(Finding(gp, "lcd_sampled_generators", None, str(exc),
                               None, "theorem_mismatch"))
    out.append(Finding(gp, "lcd_count", str(report.count), str(report.count),
                       {"pi_size": report.pi_size_bruteforce}, "info"))
    return out


def check_lte(params: FamilyParams, grid: GridSpec):
    gp = (params.q, params.m, params.lam)
    out = []
    if params.q % 2 == 0:
        return out
    for k in range(1, 2 * params.m + 3):
        got = lte_v2_qk_minus_1(params.q, k)
        want = v2(params.q**k - 1)
        if got != want:
            out.append(Finding(gp, "lte_v2", want, got, k, "theorem_mismatch"))
    return out


_CHECKS = {
    "leaders": check_leaders,
    "extremal": check_extremal,
    "negation": check_negation,
    "fold": check_fold,
    "spectrum": check_spectrum,
    "dimensions": check_dimensions,
    "dually_bch": check_dually_bch,
    "poly": check_poly,
    "lcd": check_lcd,
    "lte": check_lte,
}


def check_point(args):
    point, grid = args
    params = FamilyParams(*point)
    findings = []
    for suite in grid.suites:
        findings.extend(_CHECKS[suite](params, grid))
    findings.sort(key=lambda f: (f.grid_point, f.check, str(f.witness)))
    return findings


def verify_grid(grid: GridSpec):
    """All Findings over the grid, in canonical (grid point, check) order."""
    points = [(p.q, p.m, p.lam) for p in grid_points(grid)]
    threads = int(os.environ.get("CYCLOCODE_THREADS", "1") or "1")
    findings = []
    if threads > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for result in pool.map(check_point, [(pt, grid) for pt in points]):
                findings.extend(result)
    else:
        for pt in points:
            findings.extend(check_point((pt, grid)))
    return findings


def write_jsonl(findings, stream):
    for f in findings:
        stream.write(json.dumps(f.to_record(), sort_keys=True) + "\n")


def markdown_summary(findings, grid=None) -> str:
    by_sev = {"theorem_mismatch": 0, "paper_variant_gap": 0, "info": 0}
    points = set()
    for f in findings:
        by_sev[f.severity] = by_sev.get(f.severity, 0) + 1
        points.add(tuple(f.grid_point))
    lines = ["# Verification summary", ""]
    if grid is not None:
        lines.append(
            f"Grid: q in {sorted(grid.q_values)}, m <= {grid.m_max}, "
            f"n <= {grid.n_cap}, suites: {', '.join(grid.suites)}"
        )
        lines.append("")
    lines.append("| severity | count |")
    lines.append("|---|---|")
    for sev in ("theorem_mismatch", "paper_variant_gap", "info"):
        lines.append(f"| {sev} | {by_sev.get(sev, 0)} |")
    lines.append("")
    lines.append(f"Grid points touched: {len(points)}")
    mismatches = [f for f in findings if f.severity == "theorem_mismatch"]
    if mismatches:
        lines.append("")
        lines.append("## Theorem mismatches")
        for f in mismatches[:100]:
            lines.append(
                f"- {f.grid_point} {f.check}: expected {f.expected!r}, "
                f"got {f.actual!r} (witness {f.witness!r})"
            )
    else:
        lines.append("")
        lines.append("No theorem mismatches.")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# conjectured extremal leaders for the (q+1)(q^m +/- 1) families

CONJECTURE_FAMILIES = ("qp1_qm_plus", "qp1_qm_minus")


def conjecture_check(family: str, q: int, m: int, n_cap: int = 200_000):
    """Info findings comparing the conjectured delta1/delta2 with the brute
    top-two coset leaders for n = (q+1)(q^m +/- 1)."""
    if family not in CONJECTURE_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if m % 2 == 0 or m < 3:
        raise ValueError("the conjectures need odd m >= 3")
    gp = (family, q, m)
    if family == "qp1_qm_plus":
        n = (q + 1) * (q**m + 1)
        if q % 2 == 0:
            return [Finding(gp, "conjecture_applicability",
                            "q odd", f"q={q} even: no conjectured value", None,
                            "info")]
        if q % 4 == 1:
            d1 = 3 * (q + 1) * (q**m + 1) // 4
            d2 = (3 * q - 1) * (q**m + 1) // 4
        else:
            d1 = (3 * q + 1) * (q**m + 1) // 4
            d2 = ((3 * q**2 + q - 4) * q ** (m - 1) - (q - 1)) // 4
    else:
        n = (q + 1) * (q**m - 1)
        d1 = q ** (m + 1) - q ** (m - 1) - q - 1
        if m == 3:
            d2 = (q**2 - 1) * q**2 - (2 * q + 1)
        else:
            d2 = (q**2 - 1) * q ** (m - 1) - (q + 1) * (q ** ((m - 1) // 2) + 1)
    if n > n_cap:
        return [Finding(gp, "conjecture_skipped", None, f"n={n} > cap {n_cap}",
                        None, "info")]
    lead = leader_table(n, q)
    leaders = [g for g in range(n) if lead[g] == g]
    brute1, brute2 = leaders[-1], leaders[-2]
    out = []
    for name, conj, brute in (("delta1", d1, brute1), ("delta2", d2, brute2)):
        verdict = "PASS" if conj == brute else "FAIL"
        out.append(Finding(gp, f"conjecture_{name}", conj, brute,
                           {"n": n, "verdict": verdict}, "info"))
    return out
