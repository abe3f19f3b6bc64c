"""Command-line interface.

Four commands:

* ``code``    -- build one configuration, compare measured against predicted,
                 print the full report.
* ``verify``  -- sweep every (family, L, M, N) configuration for the given m
                 values and compare brute force against the predicted tables.
* ``scan``    -- recompute a manifest of expected [n, k, d] rows (the bundled
                 manifest lists the distance-optimal reference codes).
* ``tables``  -- instantiate a family's predicted weight table from the three
                 subset cardinalities alone.

Global flags on every command: ``--format json|csv|md``, ``--jobs N``,
``--out PATH``.  Subsets are written as comma-separated 1-based indices, or
``-`` for the empty set.  Exit codes: 0 all checks pass, 1 at least one
mismatch, 2 invalid input or degenerate configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from .analysis import (
    FAMILIES,
    code_report,
    family_of_spec,
    predicted_parameters,
    predicted_weight_table,
    run_sweep,
)
from .codegen import BRUTE_FORCE_M_CAP, DefiningSetSpec
from .simplicial import ComplexSpec, Subset

__all__ = ["BUNDLED_MANIFEST", "main"]

# Expected parameters of the distance-optimal reference codes, one row per
# (family, m, L, M, N, n, k, d).  `scan` recomputes every row from scratch.
BUNDLED_MANIFEST: tuple[tuple[int, int, str, str, str, int, int, int], ...] = (
    (2, 3, "1", "1,2", "1,2,3", 192, 8, 96),
    (2, 4, "1", "-", "2,3,4", 112, 7, 56),
    (2, 5, "2", "1", "3,5", 240, 8, 120),
    (5, 2, "-", "-", "1,2", 36, 6, 16),
    (5, 2, "-", "1", "-", 6, 4, 2),
    (5, 3, "-", "-", "1,3", 196, 8, 96),
    (5, 3, "-", "3", "-", 42, 6, 20),
    (5, 3, "-", "2", "1", 84, 7, 40),
    (5, 3, "-", "1,3", "-", 28, 6, 12),
    (5, 3, "2", "-", "-", 42, 6, 20),
    (5, 3, "1", "-", "1", 84, 7, 40),
    (5, 3, "3", "2", "-", 36, 6, 16),
    (5, 4, "-", "-", "-", 225, 8, 112),
    (5, 4, "-", "1", "-", 210, 8, 104),
    (5, 4, "-", "2,4", "-", 180, 8, 88),
    (5, 4, "1", "-", "-", 210, 8, 104),
    (5, 4, "3", "4", "-", 196, 8, 96),
    (5, 4, "2,3", "-", "-", 180, 8, 88),
    (9, 2, "1,2", "1,2", "-", 48, 6, 24),
    (9, 3, "1,2", "1,2,3", "1,2,3", 256, 9, 128),
    (9, 3, "1,2,3", "2,3", "1,2,3", 256, 9, 128),
)

MANIFEST_HEADER = ["family", "m", "L", "M", "N", "n", "k", "d"]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _fmt_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _fmt_weights(entries: Sequence[dict]) -> str:
    return ";".join(f"{e['w']}:{e['count']}" for e in entries)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt_value(cell) for cell in row])
    return buffer.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad {what} list {text!r}") from None
    if not values:
        raise ValueError(f"empty {what} list")
    return values


def _family_from_args(args) -> int:
    explicit = args.D1 or args.D2 or args.D3 or args.global_complement
    if args.family is not None and explicit:
        raise ValueError("give either --family or explicit --D1/--D2/--D3 flags, not both")
    if args.family is not None:
        if args.family not in FAMILIES:
            raise ValueError(f"family must be 1..9, got {args.family}")
        return args.family
    if not explicit:
        raise ValueError("one of --family or --D1/--D2/--D3/--global-complement is required")
    pattern = tuple((flag or "delta") == "deltac" for flag in (args.D1, args.D2, args.D3))
    probe = DefiningSetSpec(
        m=args.m,
        d1=ComplexSpec(Subset(args.m, frozenset()), pattern[0]),
        d2=ComplexSpec(Subset(args.m, frozenset()), pattern[1]),
        d3=ComplexSpec(Subset(args.m, frozenset()), pattern[2]),
        global_complement=args.global_complement,
    )
    return family_of_spec(probe)


def _check_m(m: int) -> None:
    if not 1 <= m <= BRUTE_FORCE_M_CAP:
        raise ValueError(f"m must be in 1..{BRUTE_FORCE_M_CAP}, got {m}")


# ---------------------------------------------------------------- code


def _code_md(report: dict) -> str:
    predicted = report["predicted"]
    lines = [
        "# code report",
        "",
        f"configuration: m={report['m']} family={report['family']} "
        f"L={report['L']} M={report['M']} N={report['N']}",
        "",
        f"measured  [n,k,d] = [{report['n']},{report['k']},{report['d']}]",
        f"predicted [n,k,d] = [{predicted['n']},{predicted['k']},{predicted['d']}]",
        f"match: {_fmt_value(report['match'])}",
        "",
        "| weight | count | predicted |",
        "|---:|---:|---:|",
    ]
    measured = {e["w"]: e["count"] for e in report["weights"]}
    expected = {e["w"]: e["count"] for e in predicted["weights"]}
    for w in sorted(set(measured) | set(expected)):
        lines.append(f"| {w} | {measured.get(w, 0)} | {expected.get(w, 0)} |")
    lines.extend(["", "| flag | value |", "|---|---|"])
    for flag, value in report["flags"].items():
        lines.append(f"| {flag} | {_fmt_value(value)} |")
    lines.append("")
    return "\n".join(lines)


_CODE_CSV_HEADER = [
    "m", "family", "L", "M", "N", "n", "k", "d", "weights",
    "predicted_n", "predicted_k", "predicted_d", "predicted_weights",
    "griesmer_equal", "distance_optimal_by_griesmer", "optimality_condition",
    "minimal_exact", "minimal_ab", "self_orth_exact", "self_orth_mod4",
    "table10_minimal", "table10_self_orth", "match",
]


def _code_csv_row(report: dict) -> list:
    predicted = report["predicted"]
    flags = report["flags"]
    return [
        report["m"], report["family"], report["L"], report["M"], report["N"],
        report["n"], report["k"], report["d"], _fmt_weights(report["weights"]),
        predicted["n"], predicted["k"], predicted["d"], _fmt_weights(predicted["weights"]),
        flags["griesmer_equal"], flags["distance_optimal_by_griesmer"],
        flags["optimality_condition"], flags["minimal_exact"], flags["minimal_ab"],
        flags["self_orth_exact"], flags["self_orth_mod4"],
        flags["table10_minimal"], flags["table10_self_orth"], report["match"],
    ]


def cmd_code(args) -> int:
    _check_m(args.m)
    family = _family_from_args(args)
    lset = Subset.parse(args.m, args.L)
    mset = Subset.parse(args.m, args.M)
    nset = Subset.parse(args.m, args.N)
    report = code_report(family, lset, mset, nset)
    if args.format == "json":
        text = _json_text(report)
    elif args.format == "csv":
        text = _csv_text(_CODE_CSV_HEADER, [_code_csv_row(report)])
    else:
        text = _code_md(report)
    _emit(text, args.out)
    return 0 if report["match"] else 1


# ---------------------------------------------------------------- verify


_VERIFY_CSV_HEADER = [
    "m", "family", "L", "M", "N", "status", "n", "k", "d", "match",
    "charsum_ok", "griesmer_ok", "minimal_claim_ok", "selforth_claim_ok",
    "ab_implication_ok", "detail",
]


def _verify_md(rows: Sequence[dict], summary: dict) -> str:
    lines = ["# verification sweep", ""]
    for row in rows:
        line = (
            f"m={row['m']} family={row['family']} L={row['L']} M={row['M']} "
            f"N={row['N']} status={row['status']}"
        )
        if row["status"] == "ok":
            line += f" [n,k,d]=[{row['n']},{row['k']},{row['d']}]"
        elif row["status"] == "mismatch":
            line += f" {row['detail']}"
        lines.append(line)
    lines.extend(["", "## summary", ""])
    for key in (
        "total", "ok", "mismatch", "degenerate", "mismatch_outside_family_8",
        "charsum_failures", "griesmer_failures", "minimality_claim_failures",
        "selforth_claim_failures", "ab_implication_failures",
    ):
        lines.append(f"{key}: {summary[key]}")
    if summary["findings"]:
        lines.extend(["", "## family-8 findings", ""])
        for finding in summary["findings"]:
            lines.append(
                f"m={finding['m']} L={finding['L']} M={finding['M']} "
                f"N={finding['N']}: {finding['detail']}"
            )
    lines.extend(["", f"verdict: {'PASS' if summary['passed'] else 'FAIL'}", ""])
    return "\n".join(lines)


def cmd_verify(args) -> int:
    ms = _parse_int_list(args.m, "m")
    for m in ms:
        _check_m(m)
    families = FAMILIES if args.families is None else _parse_int_list(args.families, "family")
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"family must be 1..9, got {family}")
    rows, summary = run_sweep(ms, families, jobs=args.jobs)
    if args.format == "json":
        text = _json_text({"rows": rows, "summary": summary})
    elif args.format == "csv":
        text = _csv_text(
            _VERIFY_CSV_HEADER,
            [[row[key] for key in _VERIFY_CSV_HEADER] for row in rows],
        )
    else:
        text = _verify_md(rows, summary)
    _emit(text, args.out)
    return 0 if summary["passed"] else 1


# ---------------------------------------------------------------- scan


def _load_manifest(path: str | None) -> list[tuple[int, int, str, str, str, int, int, int]]:
    if path is None:
        return list(BUNDLED_MANIFEST)
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != MANIFEST_HEADER:
            raise ValueError(
                f"manifest header must be {','.join(MANIFEST_HEADER)}, "
                f"got {reader.fieldnames}"
            )
        rows = []
        for record in reader:
            rows.append(
                (
                    int(record["family"]), int(record["m"]),
                    record["L"], record["M"], record["N"],
                    int(record["n"]), int(record["k"]), int(record["d"]),
                )
            )
    return rows


def _scan_result(row: tuple[int, int, str, str, str, int, int, int]) -> dict:
    family, m, l_text, m_text, n_text, n, k, d = row
    _check_m(m)
    report = code_report(
        family,
        Subset.parse(m, l_text),
        Subset.parse(m, m_text),
        Subset.parse(m, n_text),
    )
    computed = (report["n"], report["k"], report["d"])
    flags = report["flags"]
    if flags["griesmer_equal"]:
        optimal = "yes (Griesmer)"
    elif flags["distance_optimal_by_griesmer"]:
        optimal = "yes"
    else:
        optimal = "unknown"
    return {
        "family": family,
        "m": m,
        "L": l_text,
        "M": m_text,
        "N": n_text,
        "expected": [n, k, d],
        "computed": list(computed),
        "nonzero_weights": sum(e["w"] > 0 for e in report["weights"]),
        "optimal": optimal,
        "match": report["match"],
        "result": "PASS" if computed == (n, k, d) else "FAIL",
    }


def _scan_md(results: Sequence[dict]) -> str:
    lines = [
        "# distance-optimal code scan",
        "",
        "| family | m | L | M | N | expected [n,k,d] | computed [n,k,d] | weights | optimal | result |",
        "|---:|---:|---|---|---|---|---|---:|---|---|",
    ]
    for r in results:
        expected = ",".join(str(x) for x in r["expected"])
        computed = ",".join(str(x) for x in r["computed"])
        lines.append(
            f"| {r['family']} | {r['m']} | {r['L']} | {r['M']} | {r['N']} "
            f"| [{expected}] | [{computed}] | {r['nonzero_weights']} "
            f"| {r['optimal']} | {r['result']} |"
        )
    failures = sum(r["result"] == "FAIL" for r in results)
    lines.extend(["", f"{len(results)} rows, {failures} failures", ""])
    return "\n".join(lines)


def cmd_scan(args) -> int:
    manifest = _load_manifest(args.manifest)
    results = [_scan_result(row) for row in manifest]
    if args.format == "json":
        text = _json_text(results)
    elif args.format == "csv":
        header = [
            "family", "m", "L", "M", "N", "expected_n", "expected_k", "expected_d",
            "computed_n", "computed_k", "computed_d", "nonzero_weights",
            "optimal", "match", "result",
        ]
        rows = [
            [
                r["family"], r["m"], r["L"], r["M"], r["N"], *r["expected"],
                *r["computed"], r["nonzero_weights"], r["optimal"], r["match"],
                r["result"],
            ]
            for r in results
        ]
        text = _csv_text(header, rows)
    else:
        text = _scan_md(results)
    _emit(text, args.out)
    return 0 if all(r["result"] == "PASS" for r in results) else 1


# ---------------------------------------------------------------- tables


def cmd_tables(args) -> int:
    if args.family not in FAMILIES:
        raise ValueError(f"family must be 1..9, got {args.family}")
    table = predicted_weight_table(args.family, args.m, args.sL, args.sM, args.sN)
    n, k, d = predicted_parameters(args.family, args.m, args.sL, args.sM, args.sN)
    payload = {
        "family": args.family,
        "m": args.m,
        "sizes": {"L": args.sL, "M": args.sM, "N": args.sN},
        "n": n,
        "k": k,
        "d": d,
        "weights": [{"w": w, "count": c} for w, c in sorted(table.items())],
    }
    if args.format == "json":
        text = _json_text(payload)
    elif args.format == "csv":
        text = _csv_text(["w", "count"], [[w, c] for w, c in sorted(table.items())])
    else:
        lines = [
            f"# predicted weight table: family {args.family}, m={args.m}, "
            f"|L|={args.sL} |M|={args.sM} |N|={args.sN}",
            "",
            f"[n,k,d] = [{n},{k},{d}]",
            "",
            "| weight | codewords |",
            "|---:|---:|",
        ]
        lines.extend(f"| {w} | {c} |" for w, c in sorted(table.items()))
        lines.append("")
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="r2subfield",
        description="Binary subfield codes with simplicial-complex defining sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "md"), default="md")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
        p.add_argument("--out", default=None, help="write output to this path")

    p_code = sub.add_parser("code", help="report on a single configuration")
    p_code.add_argument("--m", type=int, required=True)
    p_code.add_argument("--family", type=int, default=None)
    p_code.add_argument("--D1", choices=("delta", "deltac"), default=None)
    p_code.add_argument("--D2", choices=("delta", "deltac"), default=None)
    p_code.add_argument("--D3", choices=("delta", "deltac"), default=None)
    p_code.add_argument("--global-complement", action="store_true")
    p_code.add_argument("--L", required=True, help="subset, e.g. '1,3' or '-'")
    p_code.add_argument("--M", required=True)
    p_code.add_argument("--N", required=True)
    add_common(p_code)
    p_code.set_defaults(func=cmd_code)

    p_verify = sub.add_parser("verify", help="sweep all configurations for given m")
    p_verify.add_argument("--m", required=True, help="m value or comma list, e.g. '2' or '2,3'")
    p_verify.add_argument("--families", default=None, help="comma list, default all")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="recompute a manifest of expected codes")
    p_scan.add_argument("--manifest", default=None, help="CSV path; bundled manifest if omitted")
    add_common(p_scan)
    p_scan.set_defaults(func=cmd_scan)

    p_tables = sub.add_parser("tables", help="instantiate a predicted weight table")
    p_tables.add_argument("--family", type=int, required=True)
    p_tables.add_argument("--m", type=int, required=True)
    p_tables.add_argument("--sL", type=int, required=True, help="|L|")
    p_tables.add_argument("--sM", type=int, required=True, help="|M|")
    p_tables.add_argument("--sN", type=int, required=True, help="|N|")
    add_common(p_tables)
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # DegenerateConfigurationError subclasses ValueError: both are
        # invalid-input conditions under the exit-code contract.
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
