"""Command-line front end: build family data, run verifications, emit reports.

Exit codes: 0 = all checks pass, 1 = a mathematical mismatch was found,
2 = configuration or structural error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional

from .algebra import FAMILY_TOKENS, AlgebraSpec, SpecError, build_spec, data_sheet, validate_spec
from .denominator import (CheckResult, UnsupportedFormError, VerificationReport,
                          casimir_support_check, finite_identity_check,
                          q_depth_available, ratio_invariant, root_count_report, verify)
from .series import TruncationOverflowError
from .weylgroup import CertificationError

COMMANDS = ("verify", "inspect", "counts", "finite", "casimir", "ratio")


@dataclass
class RunConfig:
    command: str
    family: str
    k: Optional[int]
    l: Optional[int]
    depth: int
    format: str
    output: Optional[str]


def _parse_config_file(path: str) -> Dict[str, str]:
    values: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, _, val = line.partition("=")
            else:
                key, _, val = line.partition(" ")
            values[key.strip()] = val.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistden",
        description="Exact denominator-identity verification for twisted affine "
                    "Lie superalgebras.",
        epilog="Family tokens: " + ", ".join(FAMILY_TOKENS))
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("verify", "compare both sides of the denominator identity"),
            ("inspect", "print the family data sheet"),
            ("counts", "root-count and dimension bookkeeping report"),
            ("finite", "finite denominator identity check"),
            ("casimir", "Casimir support check for both sides"),
            ("ratio", "delta-line ratio check (h_dual = 0 families)")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--family", help="family token, e.g. G3_2 or A_2k_2l-1_2")
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--l", type=int, default=None)
        p.add_argument("--depth", type=int, default=None, help="truncation depth (default 6)")
        p.add_argument("--format", choices=("text", "json"), default=None)
        p.add_argument("--output", default=None, help="write the report to this path")
        p.add_argument("--config", default=None, help="flat key=value config file; flags win")
    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    file_vals: Dict[str, str] = {}
    if args.config:
        file_vals = _parse_config_file(args.config)

    def pick(flag, key, cast=str):
        if flag is not None:
            return flag
        if key in file_vals:
            return cast(file_vals[key])
        return None

    family = pick(args.family, "family")
    if family is None:
        raise SpecError("missing --family; valid tokens: " + ", ".join(FAMILY_TOKENS))
    depth = pick(args.depth, "depth", int)
    fmt = pick(args.format, "format") or "text"
    if fmt not in ("text", "json"):
        raise SpecError(f"unknown format {fmt!r}")
    depth = 6 if depth is None else depth
    if depth < 1:
        raise SpecError("depth must be >= 1")
    return RunConfig(command=args.command, family=family,
                     k=pick(args.k, "k", int), l=pick(args.l, "l", int),
                     depth=depth, format=fmt,
                     output=pick(args.output, "output"))


def _empty_report(spec: AlgebraSpec, depth: int, checks: Dict[str, CheckResult],
                  q_depth: int = 0, anchor: str = "") -> VerificationReport:
    status = "match" if all(c.passed for c in checks.values()) else "mismatch"
    return VerificationReport(
        family=spec.family, label=spec.label, k=spec.k, l=spec.l, depth=depth,
        q_depth=q_depth, anchor=anchor, status=status, lhs_terms=0, rhs_terms=0,
        mismatches=[], checks=checks)


def _run_command(config: RunConfig) -> VerificationReport:
    spec = build_spec(config.family, config.k, config.l)
    if config.command == "verify":
        return verify(spec, config.depth)
    if config.command == "inspect":
        rep = validate_spec(spec)
        checks = {"validation": CheckResult(rep.ok, "; ".join(rep.failures + rep.notes)
                                            or "all structural checks pass"),
                  "data_sheet": CheckResult(True, "\n" + data_sheet(spec))}
        return _empty_report(spec, config.depth, checks)
    if config.command == "counts":
        return _empty_report(spec, config.depth, {"root_counts": root_count_report(spec)})
    if config.command == "finite":
        return _empty_report(spec, config.depth,
                             {"finite_identity": finite_identity_check(spec, config.depth)})
    if config.command == "casimir":
        return _empty_report(spec, config.depth, casimir_support_check(spec, config.depth),
                             q_depth=q_depth_available(spec, config.depth))
    if config.command == "ratio":
        ratio = ratio_invariant(spec, config.depth)
        checks = {"ratio_invariant": ratio.check,
                  "quotient": CheckResult(True, f"1/f: {ratio.quotient}"),
                  "f_hat": CheckResult(True, f"f: {ratio.f_hat}")}
        return _empty_report(spec, config.depth, checks, q_depth=ratio.q_depth)
    raise SpecError(f"unknown command {config.command!r}")


def _use_color(stream) -> bool:
    return stream.isatty() and not os.environ.get("NO_COLOR")


def render_text(report: VerificationReport, color: bool = False) -> str:
    verdict = report.status.upper()
    if color:
        code = "32" if report.status == "match" else "31"
        verdict = f"\x1b[{code}m{verdict}\x1b[0m"
    lines = [f"{report.label} [{report.family}] k={report.k} l={report.l} "
             f"depth={report.depth} q_depth={report.q_depth}: {verdict} "
             f"(lhs {report.lhs_terms} terms, rhs {report.rhs_terms} terms)"]
    for name, check in report.checks.items():
        mark = "pass" if check.passed else "FAIL"
        lines.append(f"  [{mark}] {name}: {check.detail}")
    if report.mismatches:
        lines.append(f"  {len(report.mismatches)} coefficient mismatches:")
        lines.append("    weight | lhs | rhs")
        for w, a, b in report.mismatches:
            lines.append(f"    {w} | {a} | {b}")
    return "\n".join(lines)


def render_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), indent=2)


def run(config: RunConfig) -> int:
    try:
        report = _run_command(config)
    except (SpecError, UnsupportedFormError, TruncationOverflowError,
            CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render_json(report) if config.format == "json" else \
        render_text(report, color=_use_color(sys.stdout))
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.status == "match" else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _merge_config(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
