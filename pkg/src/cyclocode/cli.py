"""Command-line interface: coset tables, code parameters, grid verification.

Exit codes: 0 clean, 1 at least one theorem_mismatch finding, 2 usage error.
"""

import argparse
import json
import sys

from .codes import (
    BCHSpec,
    bose_distance,
    code_from_spec,
    dually_bch,
    min_distance,
)
from .cosets import FamilyParams, partition
from .harness import (
    ALL_SUITES,
    GridSpec,
    conjecture_check,
    markdown_summary,
    verify_grid,
    write_jsonl,
)
from .lcd import lcd_count, pi_set
from .leaders import extremal_leaders, is_leader_closed_form
from .spectrum import count_by_size_general, possible_sizes, spectrum_closed_form


def _enc(x):
    """JSON-safe encoding; big integers become decimal strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= 2**53 else x
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_enc(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    return x


def _emit_table(rows, headers, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        for row in rows:
            stream.write(json.dumps(_enc(dict(zip(headers, row))), sort_keys=True) + "\n")
    elif fmt == "csv":
        stream.write(",".join(headers) + "\n")
        for row in rows:
            stream.write(",".join(str(v) for v in row) + "\n")
    else:  # md
        stream.write("| " + " | ".join(headers) + " |\n")
        stream.write("|" + "---|" * len(headers) + "\n")
        for row in rows:
            stream.write("| " + " | ".join(str(v) for v in row) + " |\n")


def _params(args) -> FamilyParams:
    return FamilyParams(args.q, args.m, args.lam)


def _add_family_flags(p):
    p.add_argument("--q", type=int, required=True, help="prime power field size")
    p.add_argument("--m", type=int, required=True, help="extension degree parameter")
    p.add_argument("--lambda", dest="lam", type=int, required=True,
                   help="divisor of q-1 (length is lambda*(q^m+1))")


def _add_format_flag(p):
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")


def cmd_cosets(args) -> int:
    part = partition(_params(args))
    rows = [(c.leader, c.size, c.residue_a, " ".join(map(str, c.elements)))
            for c in part.cosets]
    _emit_table(rows, ("leader", "size", "residue_a", "elements"), args.format)
    return 0


def cmd_leaders(args) -> int:
    params = _params(args)
    part = partition(params)
    gammas = [args.gamma] if args.gamma is not None else list(part.leaders)
    rows = []
    for g in gammas:
        v = is_leader_closed_form(params, g, variant=args.e_variant)
        rows.append((g, part.leader_of(g) == g, v.is_leader, v.reason,
                     v.family or ""))
    _emit_table(rows, ("gamma", "is_leader_brute", "is_leader_closed",
                       "reason", "family"), args.format)
    return 0


def cmd_delta(args) -> int:
    params = _params(args)
    if params.m % 2 == 0:
        print("delta requires odd m", file=sys.stderr)
        return 2
    ext = extremal_leaders(params)
    part = partition(params)
    leaders = sorted(part.leaders)
    brute1 = leaders[-1]
    brute2 = leaders[-2] if len(leaders) >= 2 else None
    rows = [("delta1", ext.delta1, brute1, ext.delta1 == brute1)]
    if ext.delta2 is not None:
        rows.append(("delta2", ext.delta2, brute2, ext.delta2 == brute2))
    _emit_table(rows, ("quantity", "closed_form", "oracle", "agree"), args.format)
    return 0 if all(r[-1] for r in rows) else 1


def cmd_spectrum(args) -> int:
    params = _params(args)
    closed = spectrum_closed_form(params)
    part = partition(params)
    hist = part.size_histogram()
    rows = []
    ok = True
    for tau in sorted(possible_sizes(params.n, params.q)):
        c = closed.entries.get(tau, 0)
        g = count_by_size_general(params.n, params.q, tau)
        b = hist.get(tau, 0)
        agree = c == g == b
        ok = ok and agree
        rows.append((tau, c, g, b, agree))
    _emit_table(rows, ("size", "closed_form", "moebius", "oracle", "agree"),
                args.format)
    return 0 if ok else 1


def cmd_bch(args) -> int:
    params = _params(args)
    spec = BCHSpec(params, args.delta, args.b)
    code = code_from_spec(spec)
    dist = None
    if args.min_distance_budget > 0:
        dist = min_distance(code, budget=args.min_distance_budget)
    rec = code.to_record(dist)
    rec["bose_distance"] = bose_distance(spec)
    sys.stdout.write(json.dumps(_enc(rec), sort_keys=True) + "\n")
    return 0


def cmd_dually_bch(args) -> int:
    params = _params(args)
    brute = dually_bch(params, args.delta, mode="bruteforce")
    try:
        closed = dually_bch(params, args.delta, mode="closed_form")
    except ValueError:
        closed = None
    rec = {"q": params.q, "m": params.m, "lambda": params.lam, "n": params.n,
           "delta": args.delta, "dually_bch_bruteforce": brute,
           "dually_bch_closed_form": closed,
           "agree": closed is None or closed == brute}
    sys.stdout.write(json.dumps(_enc(rec), sort_keys=True) + "\n")
    return 0 if rec["agree"] else 1


def cmd_lcd_count(args) -> int:
    params = _params(args)
    report = pi_set(params)
    sys.stdout.write(json.dumps(_enc(report.to_record()), sort_keys=True) + "\n")
    assert report.count == lcd_count(params)
    return 0 if report.pi_size_bruteforce == report.pi_size_closed_form else 1


def _parse_grid_file(path: str) -> GridSpec:
    kwargs = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in ("q_values", "suites"):
                items = [v.strip() for v in value.split(",") if v.strip()]
                kwargs[key] = tuple(int(v) for v in items) if key == "q_values" \
                    else tuple(items)
            elif key in ("m_max", "n_cap", "poly_n_cap", "dually_n_cap",
                         "lcd_sample_n_cap", "sym_distance_n_cap",
                         "min_distance_budget"):
                kwargs[key] = int(value)
            else:
                raise ValueError(f"unknown grid key {key!r}")
    return GridSpec(**kwargs)


def cmd_verify(args) -> int:
    if args.grid_file:
        grid = _parse_grid_file(args.grid_file)
    else:
        grid = GridSpec()
    if args.suite:
        bad = [s for s in args.suite if s not in ALL_SUITES]
        if bad:
            print(f"unknown suite(s): {', '.join(bad)}", file=sys.stderr)
            return 2
        grid = GridSpec(**{**grid.__dict__, "suites": tuple(args.suite)})
    findings = verify_grid(grid)
    write_jsonl(findings, sys.stdout)
    sys.stderr.write(markdown_summary(findings, grid))
    return 1 if any(f.severity == "theorem_mismatch" for f in findings) else 0


def cmd_conjecture(args) -> int:
    family = args.family.replace("-", "_")
    findings = conjecture_check(family, args.q, args.m)
    write_jsonl(findings, sys.stdout)
    sys.stderr.write(markdown_summary(findings))
    return 0  # conjecture reports never affect exit status


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cyclocode",
        description="cyclotomic cosets, BCH parameters and LCD counts for "
                    "n = lambda*(q^m+1)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="full coset partition table")
    _add_family_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("leaders", help="leaders with closed-form verdicts")
    _add_family_flags(p)
    _add_format_flag(p)
    p.add_argument("--e-variant", choices=("statement", "proof"),
                   default="proof")
    p.add_argument("--gamma", type=int, default=None,
                   help="check a single gamma instead of all leaders")
    p.set_defaults(func=cmd_leaders)

    p = sub.add_parser("delta", help="largest / second-largest leaders")
    _add_family_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("spectrum", help="coset-size spectrum, three ways")
    _add_family_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bch", help="BCH code parameters for a designed distance")
    _add_family_flags(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--min-distance-budget", type=int, default=0,
                   help="work budget for the minimum-distance search "
                        "(0 skips it)")
    p.set_defaults(func=cmd_bch)

    p = sub.add_parser("dually-bch", help="is the dual again a BCH code?")
    _add_family_flags(p)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_dually_bch)

    p = sub.add_parser("lcd-count", help="LCD cyclic code count via the Pi set")
    _add_family_flags(p)
    p.set_defaults(func=cmd_lcd_count)

    p = sub.add_parser("verify", help="run the cross-verification grid")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--grid-file", help="key=value grid configuration file")
    g.add_argument("--default-grid", action="store_true")
    p.add_argument("--suite", action="append",
                   help=f"restrict to named suites ({', '.join(ALL_SUITES)})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="check conjectured extremal leaders")
    p.add_argument("--family", choices=("qp1-qm-plus", "qp1-qm-minus"),
                   required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
