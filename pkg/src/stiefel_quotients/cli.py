"""Command-line interface.

Subcommands::

    stiefel presentation FAMILY N K [--format ...]
    stiefel classes      FAMILY N K [--format ...]
    stiefel invariants   FAMILY N K [--format ...]
    stiefel sweep --family FAMILY --n A..B --k A..B [--format ...] [--out PATH]
    stiefel verify [--max-n M] [--suites LIST]

Exit codes: 0 success, 1 usage or argument error (including invalid manifold
parameters), 2 verification failure.  JSON documents carry a ``spec_version``
key and omit inapplicable fields instead of emitting nulls.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Sequence

from .charclasses import CharClassReport, char_class_report
from .cohomology import (
    Family,
    ManifoldId,
    betti_numbers,
    charrank_of_canonical_bundle,
    manifold_dim,
    presentation,
)
from .errors import StiefelError
from .gf2 import TruncatedGF2Poly
from .invariants import (
    NOT_PARALLELIZABLE,
    InvariantReport,
    Verdict,
    VerdictStatus,
    full_report,
)
from .verify import SUITE_NAMES, run_suites

__all__ = ["main"]

PROG = "stiefel"
SPEC_VERSION = "1"
FORMATS = ("plain", "json", "markdown", "csv")

SWEEP_COLUMNS = (
    "family",
    "n",
    "k",
    "dim",
    "truncation",
    "m",
    "skew_lower_bound",
    "non_immersion",
    "stable_span_upper",
    "ucharrank",
    "ucharrank_rule",
    "parallelizable",
    "parallelizable_rule",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; the CLI contract reserves 2 for
    # verification failures, so usage problems are rerouted to exit 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _family(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown family {text!r} (choose from V, W, PV, PW, Y)"
        ) from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected A..B or a single integer, got {text!r}"
        ) from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _suites(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    for name in names:
        if name not in SUITE_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown suite {name!r} (choose from {', '.join(SUITE_NAMES)})"
            )
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog=PROG,
        description=(
            "Mod-2 cohomology presentations, Stiefel-Whitney classes, and "
            "geometric invariants for Stiefel manifolds and their quotients."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_single(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("family", type=_family, help="one of V, W, PV, PW, Y")
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)
        p.add_argument("--format", choices=FORMATS, default="plain")
        return p

    p = add_single("presentation", "additive mod-2 cohomology presentation")
    p.set_defaults(func=cmd_presentation)
    p = add_single("classes", "tangent Stiefel-Whitney and Pontryagin data")
    p.set_defaults(func=cmd_classes)
    p = add_single("invariants", "skew/immersion/span bounds and verdicts")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("sweep", help="tabulate invariants over parameter ranges")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--n", type=_range, required=True, metavar="A..B")
    p.add_argument("--k", type=_range, required=True, metavar="A..B")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the oracle cross-check suites")
    p.add_argument("--max-n", type=int, default=30, dest="max_n")
    p.add_argument(
        "--suites",
        type=_suites,
        default=None,
        help=f"comma-separated subset of: {', '.join(SUITE_NAMES)}",
    )
    p.set_defaults(func=cmd_verify)
    return parser


# ---------------------------------------------------------------------------
# rendering helpers


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(_scalar_text(v) for v in value)
    return str(value)


def _poly_doc(poly: TruncatedGF2Poly, poly_degree: int) -> dict[str, Any]:
    exponents = list(poly.support())
    return {
        "exponents": exponents,
        "cohomological_degrees": [poly_degree * e for e in exponents],
        "text": str(poly),
    }


def _verdict_doc(verdict: Verdict, parallelizability: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {"status": verdict.status.value}
    if verdict.value is not None:
        doc["value"] = verdict.value
    doc["text"] = _verdict_text(verdict, parallelizability)
    doc["rule"] = verdict.rule
    return doc


def _verdict_text(verdict: Verdict, parallelizability: bool = False) -> str:
    if verdict.status is VerdictStatus.DETERMINED:
        if parallelizability:
            return (
                "not parallelizable"
                if verdict.value == NOT_PARALLELIZABLE
                else "parallelizable"
            )
        return str(verdict.value)
    return verdict.status.value


def _manifold_doc(mid: ManifoldId) -> dict[str, Any]:
    return {"family": mid.family.value, "n": mid.n, "k": mid.k}


def _render_single(
    mid: ManifoldId,
    section_name: str,
    section: dict[str, Any],
    citations: list[str],
    fmt: str,
) -> str:
    if fmt == "json":
        doc = {
            "spec_version": SPEC_VERSION,
            "manifold": _manifold_doc(mid),
            section_name: section,
            "citations": citations,
        }
        return json.dumps(doc, indent=2) + "\n"

    flat: list[tuple[str, str]] = []
    for key, value in section.items():
        if isinstance(value, dict):
            if "text" in value:  # polynomial or verdict
                flat.append((key, str(value["text"])))
                for inner_key in ("cohomological_degrees", "rule"):
                    if inner_key in value:
                        flat.append((f"{key}_{inner_key}", _scalar_text(value[inner_key])))
            else:
                for inner_key, inner in value.items():
                    flat.append((f"{key}_{inner_key}", _scalar_text(inner)))
        else:
            flat.append((key, _scalar_text(value)))

    if fmt == "plain":
        lines = [f"{section_name} of {mid.label}"]
        lines += [f"  {key}: {value}" for key, value in flat]
        if citations:
            lines.append("citations:")
            lines += [f"  - {c}" for c in citations]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = [
            f"### {section_name} of {mid.label}",
            "",
            "| field | value |",
            "| --- | --- |",
        ]
        lines += [f"| {key} | {value} |" for key, value in flat]
        if citations:
            lines.append("")
            lines += [f"- {c}" for c in citations]
        return "\n".join(lines) + "\n"
    # csv: one header row, one data row
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["family", "n", "k"] + [key for key, _ in flat])
    writer.writerow([mid.family.value, mid.n, mid.k] + [value for _, value in flat])
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# section builders


def _presentation_section(mid: ManifoldId) -> tuple[dict[str, Any], list[str]]:
    p = presentation(mid)
    section: dict[str, Any] = {"manifold_dim": p.manifold_dim}
    if p.poly_degree:
        section["poly_degree"] = p.poly_degree
        section["truncation_exponent"] = p.truncation_exponent
        section["excluded_degree"] = p.excluded_degree
    section["exterior_degrees"] = list(p.exterior_degrees)
    section["total_rank"] = p.total_rank
    section["betti_numbers"] = betti_numbers(p)
    if p.poly_degree:
        section["charrank_of_canonical_bundle"] = charrank_of_canonical_bundle(p)
    return section, _presentation_citations(mid, p.truncation_exponent)


def _presentation_citations(mid: ManifoldId, cutoff: int) -> list[str]:
    n, k = mid.n, mid.k
    if mid.family is Family.V:
        return [f"additive model: exterior algebra on y_j for {n - k} <= j <= {n - 1}"]
    if mid.family is Family.W:
        return [
            "additive model: exterior algebra on generators of degree 2j-1 "
            f"for {n - k} < j <= {n}"
        ]
    if mid.family is Family.PV:
        return [
            "additive model: Z2[x]/(x^N) tensor exterior algebra on y_j for "
            f"{n - k} <= j <= {n - 1} minus the transgressed y_(N-1); |x| = 1",
            f"N = least j with {n - k} < j <= {n} and binom({n}, j) odd; N = {cutoff}",
        ]
    if mid.family is Family.PW:
        return [
            "additive model: Z2[x]/(x^N) tensor exterior algebra on generators "
            f"of degree 2j-1 for {n - k} < j <= {n} minus the transgressed one "
            "of degree 2N-1; |x| = 2",
            f"N = least j with {n - k} < j <= {n} and binom({n}, j) odd; N = {cutoff}",
            "excluding degree 2N-1 (rather than the sometimes-quoted index N-1) "
            "is forced by Poincare duality; see README",
        ]
    return [
        "additive model: Z2[x]/(x^J) tensor exterior algebra on y_j for "
        f"{n - 2 * k} <= j <= {n - 1} minus the transgressed y_(2J-1); |x| = 2",
        f"J = least r with binom({k}+r-1, {k - 1}) odd whose transgressing "
        f"generator y_(2r-1) lies in the range above; J = {cutoff}",
    ]


def _classes_section(mid: ManifoldId) -> tuple[dict[str, Any], list[str]]:
    report: CharClassReport = char_class_report(mid)
    section: dict[str, Any] = {
        "poly_degree": report.poly_degree,
        "truncation": report.truncation,
        "total_sw": _poly_doc(report.total_sw, report.poly_degree),
        "inverse_sw": _poly_doc(report.inverse_sw, report.poly_degree),
        "m": report.m,
        "dual_top_cohomological_degree": report.dual_top_cohomological_degree,
    }
    citations = [
        f"w(tangent) = (1+x)^(nk) = (1+x)^{mid.n * mid.k} with x the mod-2 "
        "Euler class of the canonical line bundle",
        "inverse class coefficient of x^j: binom(nk+j-1, nk-1) mod 2",
    ]
    if report.p1_coefficient is not None:
        section["p1_coefficient"] = report.p1_coefficient
        section["euler_square_nonzero"] = report.euler_square_nonzero
        citations.append(
            "p1(tangent) = (nk - 2k^2 - 2k) x0^2; x0^2 is nonzero when n-2k >= 4"
        )
    return section, citations


def _invariants_section(mid: ManifoldId) -> tuple[dict[str, Any], list[str]]:
    report: InvariantReport = full_report(mid)
    section: dict[str, Any] = {"dim": report.dim}
    citations: list[str] = []
    if report.skew_embed_lower_bound is not None:
        section["skew_embed_lower_bound"] = report.skew_embed_lower_bound
        citations.append(
            "skew embedding needs at least 2*dim + 2*d + 1 ambient dimensions, "
            "d the top cohomological degree with nonzero inverse class"
        )
    if report.non_immersion_dim is not None:
        section["non_immersion_dim"] = report.non_immersion_dim
        citations.append(
            "a nonzero inverse class in degree d forbids immersion in "
            "R^(dim + d - 1)"
        )
    if report.stable_span_upper_bound is not None:
        section["stable_span_upper_bound"] = report.stable_span_upper_bound
        citations.append("stable span is at most dim - 2m")
    if report.ucharrank is not None:
        section["ucharrank"] = _verdict_doc(report.ucharrank)
        citations.append(report.ucharrank.rule)
    if report.parallelizable is not None:
        section["parallelizable"] = _verdict_doc(report.parallelizable, True)
        citations.append(report.parallelizable.rule)
    return section, citations


# ---------------------------------------------------------------------------
# commands


def cmd_presentation(args: argparse.Namespace) -> int:
    mid = ManifoldId(args.family, args.n, args.k)
    section, citations = _presentation_section(mid)
    sys.stdout.write(_render_single(mid, "presentation", section, citations, args.format))
    return 0


def cmd_classes(args: argparse.Namespace) -> int:
    mid = ManifoldId(args.family, args.n, args.k)
    section, citations = _classes_section(mid)
    sys.stdout.write(_render_single(mid, "classes", section, citations, args.format))
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    mid = ManifoldId(args.family, args.n, args.k)
    section, citations = _invariants_section(mid)
    sys.stdout.write(_render_single(mid, "invariants", section, citations, args.format))
    return 0


def _sweep_row(mid: ManifoldId) -> dict[str, Any]:
    row: dict[str, Any] = {
        "family": mid.family.value,
        "n": mid.n,
        "k": mid.k,
        "dim": manifold_dim(mid),
    }
    if mid.family in (Family.PV, Family.PW, Family.Y):
        row["truncation"] = presentation(mid).truncation_exponent
    if mid.family in (Family.PV, Family.Y):
        report = char_class_report(mid)
        inv = full_report(mid)
        row["m"] = report.m
        row["skew_lower_bound"] = inv.skew_embed_lower_bound
        if inv.non_immersion_dim is not None:
            row["non_immersion"] = inv.non_immersion_dim
        if inv.stable_span_upper_bound is not None:
            row["stable_span_upper"] = inv.stable_span_upper_bound
    else:
        inv = full_report(mid)
    if inv.ucharrank is not None:
        row["ucharrank"] = _verdict_text(inv.ucharrank)
        row["ucharrank_rule"] = inv.ucharrank.rule
    if inv.parallelizable is not None:
        row["parallelizable"] = _verdict_text(inv.parallelizable, True)
        row["parallelizable_rule"] = inv.parallelizable.rule
    return row


def _render_sweep(rows: list[dict[str, Any]], skipped: int, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "spec_version": SPEC_VERSION,
            "columns": list(SWEEP_COLUMNS),
            "rows": rows,
            "skipped_invalid": skipped,
        }
        return json.dumps(doc, indent=2) + "\n"
    cells = [
        [_scalar_text(row[c]) if c in row else "" for c in SWEEP_COLUMNS]
        for row in rows
    ]
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        writer.writerows(cells)
        return buffer.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(SWEEP_COLUMNS) + " |"]
        lines.append("| " + " | ".join("---" for _ in SWEEP_COLUMNS) + " |")
        lines += ["| " + " | ".join(row) + " |" for row in cells]
        return "\n".join(lines) + "\n"
    # plain: aligned columns
    table = [list(SWEEP_COLUMNS)] + cells
    widths = [max(len(row[i]) for row in table) for i in range(len(SWEEP_COLUMNS))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in table
    ]
    lines.append(f"(skipped {skipped} invalid parameter pairs)")
    return "\n".join(lines) + "\n"


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = []
    skipped = 0
    n_lo, n_hi = args.n
    k_lo, k_hi = args.k
    for n in range(n_lo, n_hi + 1):
        for k in range(k_lo, k_hi + 1):
            try:
                mid = ManifoldId(args.family, n, k)
            except StiefelError:
                skipped += 1
                continue
            rows.append(_sweep_row(mid))
    text = _render_sweep(rows, skipped, args.format)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as err:
        print(f"{PROG}: error: cannot write {args.out!r}: {err}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suites(args.suites, args.max_n)
    if args.max_n < 1:
        for result in results:
            print(result.summary())
        print("vacuous: no cases run (max-n < 1)")
        return 0
    failed = False
    total = 0
    for result in results:
        print(result.summary())
        total += result.cases
        if not result.passed:
            failed = True
            for message in result.failures:
                print(f"  first failures: {message}")
            if result.overflow_failures:
                print(f"  ... and {result.overflow_failures} more")
    if failed:
        print("verification FAILED")
        return 2
    print(f"verification passed ({total} cases)")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"{PROG}: error: {err}", file=sys.stderr)
        return 1
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except StiefelError as err:
        print(f"{PROG}: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
