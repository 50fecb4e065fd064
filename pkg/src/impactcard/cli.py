"""Command line front end: validate, lint, render, score.

Exit codes are the machine contract and stay stable across releases:

    0   success
    1   the document failed to parse or has validation errors
    2   lint found error-severity findings and --strict was given
    64  usage error (bad flags, unknown format, malformed CSV)
    74  I/O error (missing input, unwritable or already existing output)

Every command accepts ``--format json`` and then writes a single JSON
object to stdout. For ``render``, ``--format`` otherwise names the
artifact format (svg or html); with ``json`` the artifact keeps its
default format and only the stdout summary changes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from enum import IntEnum
from pathlib import Path

from .docio import DocumentError, ValidationReport, parse_document, validate
from .evalkit import (
    inter_rater_agreement,
    mann_whitney_exact,
    read_rubric_csv,
    read_sus_csv,
    read_values_csv,
    rubric_overall,
    sus_score,
    EXACT_LIMIT,
)
from .lint import lint_document
from .model import ImpactAssessment
from .render import InvalidDocumentError, render_card_html, render_card_svg, render_report_html
from .theme import DEFAULT_THEME, Theme, load_theme

__all__ = ["ExitStatus", "main"]


class ExitStatus(IntEnum):
    OK = 0
    INVALID = 1
    LINT = 2
    USAGE = 64
    IO = 74


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract above says 64
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitStatus.USAGE, f"{self.prog}: error: {message}\n")


def _fail(code: ExitStatus, message: str) -> int:
    print(f"impactcard: error: {message}", file=sys.stderr)
    return int(code)


def _emit(as_json: bool, payload: dict, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _load_document(path: str) -> ImpactAssessment:
    raw = Path(path).read_bytes()
    return parse_document(raw)


def _finding_rows(report: ValidationReport) -> list[dict]:
    return [
        {"code": f.code, "severity": f.severity, "path": f.path, "message": f.message}
        for f in report.findings
    ]


def _resolve_theme(theme_arg: str | None) -> Theme:
    path = theme_arg or os.environ.get("IMPACTCARD_THEME")
    if not path:
        return DEFAULT_THEME
    return load_theme(path)


def cmd_validate(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    try:
        doc = _load_document(args.document)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read {args.document}: {exc}")
    except DocumentError as exc:
        _emit(as_json, {"ok": False, "error": str(exc), "findings": []},
              [f"parse error: {exc}"])
        return int(ExitStatus.INVALID)
    report = validate(doc)
    lines = [
        f"{f.severity} {f.code} {f.path}: {f.message}" for f in report.findings
    ]
    lines.append("ok" if report.ok else f"{len(report.findings)} finding(s)")
    _emit(as_json, {"ok": report.ok, "findings": _finding_rows(report)}, lines)
    return int(ExitStatus.OK if report.ok else ExitStatus.INVALID)


def cmd_lint(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    try:
        doc = _load_document(args.document)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read {args.document}: {exc}")
    except DocumentError as exc:
        _emit(as_json, {"ok": False, "error": str(exc), "findings": []},
              [f"parse error: {exc}"])
        return int(ExitStatus.INVALID)
    report = validate(doc)
    if not report.ok:
        lines = [f"{f.severity} {f.code} {f.path}: {f.message}" for f in report.findings]
        lines.append("document has validation errors; lint needs a valid document")
        _emit(as_json, {"ok": False, "findings": _finding_rows(report)}, lines)
        return int(ExitStatus.INVALID)
    try:
        theme = _resolve_theme(args.theme)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read theme: {exc}")
    except ValueError as exc:
        return _fail(ExitStatus.USAGE, f"bad theme: {exc}")
    lint = lint_document(doc, theme)
    lines = []
    for f in lint.findings:
        detail = ""
        if f.measured is not None:
            detail = f" (measured {f.measured:g}, threshold {f.threshold:g})"
        lines.append(f"{f.severity} {f.rule_id} {f.path}: {f.message}{detail}")
    errors = sum(1 for f in lint.findings if f.severity == "error")
    lines.append(
        "clean" if not lint.findings
        else f"{len(lint.findings)} finding(s), {errors} error(s)"
    )
    payload = {
        "passed": lint.passed,
        "findings": [
            {
                "rule_id": f.rule_id, "severity": f.severity, "path": f.path,
                "message": f.message, "measured": f.measured, "threshold": f.threshold,
            }
            for f in lint.findings
        ],
    }
    _emit(as_json, payload, lines)
    if args.strict and not lint.passed:
        return int(ExitStatus.LINT)
    return int(ExitStatus.OK)


def cmd_render(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    kind = "report" if args.report else "card"
    artifact_format = args.format if args.format in ("svg", "html") else None
    if artifact_format is None:
        artifact_format = "html" if kind == "report" else "svg"
    if kind == "report" and artifact_format == "svg":
        return _fail(ExitStatus.USAGE, "the report is an HTML document; use --format html")
    try:
        doc = _load_document(args.document)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read {args.document}: {exc}")
    except DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return int(ExitStatus.INVALID)
    try:
        theme = _resolve_theme(args.theme)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read theme: {exc}")
    except ValueError as exc:
        return _fail(ExitStatus.USAGE, f"bad theme: {exc}")
    try:
        if kind == "report":
            content = render_report_html(doc, theme)
        elif artifact_format == "svg":
            content = render_card_svg(doc, theme)
        else:
            content = render_card_html(doc, theme)
    except InvalidDocumentError as exc:
        for f in exc.report.findings:
            print(f"{f.severity} {f.code} {f.path}: {f.message}", file=sys.stderr)
        return _fail(ExitStatus.INVALID, "document has validation errors")
    out = Path(args.out)
    if out.exists() and not args.force:
        return _fail(ExitStatus.IO, f"{out} exists; pass --force to overwrite")
    try:
        out.write_text(content, encoding="utf-8")
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot write {out}: {exc}")
    payload = {"out": str(out), "kind": kind, "artifact_format": artifact_format,
               "bytes": len(content.encode("utf-8"))}
    _emit(as_json, payload, [f"wrote {out} ({kind}, {artifact_format}, {payload['bytes']} bytes)"])
    return int(ExitStatus.OK)


def _score_sus(args: argparse.Namespace, as_json: bool) -> int:
    rows = read_sus_csv(args.csv)
    scored = [(row_id, sus_score(response)) for row_id, response in rows]
    mean = sum(score for _, score in scored) / len(scored)
    lines = [f"{row_id} {score:.1f}" for row_id, score in scored]
    lines.append(f"mean {mean:.1f}")
    payload = {"rows": [{"id": i, "score": s} for i, s in scored], "mean": mean}
    _emit(as_json, payload, lines)
    return int(ExitStatus.OK)


def _score_rubric(args: argparse.Namespace, as_json: bool) -> int:
    rows = read_rubric_csv(args.csv)
    scored = [(row_id, rubric_overall(assessment)) for row_id, assessment in rows]
    mean = sum(overall for _, overall in scored) / len(scored)
    lines = [f"{row_id} {overall}" for row_id, overall in scored]
    lines.append(f"mean {mean:.2f}")
    payload = {"rows": [{"id": i, "overall": o} for i, o in scored], "mean": mean}
    _emit(as_json, payload, lines)
    return int(ExitStatus.OK)


def _aligned_overalls(path_a: str, path_b: str) -> tuple[list[int], list[int]]:
    series = []
    for path in (path_a, path_b):
        rows = read_rubric_csv(path)
        by_id: dict[str, int] = {}
        for row_id, assessment in rows:
            if row_id in by_id:
                raise ValueError(f"{path}: duplicate id '{row_id}'")
            by_id[row_id] = rubric_overall(assessment)
        series.append(by_id)
    first, second = series
    if first.keys() != second.keys():
        missing = sorted(first.keys() ^ second.keys())
        raise ValueError(f"rater files cover different ids: {', '.join(missing)}")
    ordered = sorted(first)
    return [first[i] for i in ordered], [second[i] for i in ordered]


def _score_agreement(args: argparse.Namespace, as_json: bool) -> int:
    first, second = _aligned_overalls(args.first, args.second)
    value = inter_rater_agreement(first, second)
    payload = {"pairs": len(first), "agreement": value}
    _emit(as_json, payload, [f"{len(first)} pairs, agreement {value:.2f}"])
    return int(ExitStatus.OK)


def _score_mwu(args: argparse.Namespace, as_json: bool) -> int:
    xs = [value for _, value in read_values_csv(args.first)]
    ys = [value for _, value in read_values_csv(args.second)]
    u, p = mann_whitney_exact(xs, ys)
    method = "exact" if len(xs) + len(ys) <= EXACT_LIMIT else "approximate"
    payload = {"u": u, "p": p, "method": method, "n1": len(xs), "n2": len(ys)}
    _emit(as_json, payload,
          [f"U={u:g} p={p:.6g} ({method}, n1={len(xs)}, n2={len(ys)})"])
    return int(ExitStatus.OK)


_SCORERS = {
    "sus": _score_sus,
    "rubric": _score_rubric,
    "agreement": _score_agreement,
    "mwu": _score_mwu,
}


def cmd_score(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    try:
        return _SCORERS[args.metric](args, as_json)
    except OSError as exc:
        return _fail(ExitStatus.IO, f"cannot read input: {exc}")
    except ValueError as exc:
        return _fail(ExitStatus.USAGE, str(exc))


def _build_parser() -> _Parser:
    parser = _Parser(prog="impactcard", description="Impact assessment cards: validate, lint, render, score.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_validate = sub.add_parser("validate", help="check a document against the schema and content rules")
    p_validate.add_argument("document", help="path to a .ia.json document")
    p_validate.add_argument("--format", choices=("text", "json"), default="text")
    p_validate.set_defaults(handler=cmd_validate)

    p_lint = sub.add_parser("lint", help="check readability, phrasing, and theme contrast")
    p_lint.add_argument("document", help="path to a .ia.json document")
    p_lint.add_argument("--theme", help="theme file (default: IMPACTCARD_THEME or built-in)")
    p_lint.add_argument("--strict", action="store_true", help="exit 2 when any error-severity finding exists")
    p_lint.add_argument("--format", choices=("text", "json"), default="text")
    p_lint.set_defaults(handler=cmd_lint)

    p_render = sub.add_parser("render", help="write the card (SVG or HTML) or the long-form report")
    p_render.add_argument("document", help="path to a .ia.json document")
    p_render.add_argument("--out", required=True, help="output file path")
    p_render.add_argument("--format", choices=("svg", "html", "json"),
                          help="artifact format; json keeps the default artifact and prints a JSON summary")
    p_render.add_argument("--report", action="store_true", help="write the long-form report instead of the card")
    p_render.add_argument("--theme", help="theme file (default: IMPACTCARD_THEME or built-in)")
    p_render.add_argument("--force", action="store_true", help="overwrite an existing output file")
    p_render.set_defaults(handler=cmd_render)

    p_score = sub.add_parser("score", help="score study instruments from CSV files")
    score_sub = p_score.add_subparsers(dest="metric", required=True, metavar="metric")

    p_sus = score_sub.add_parser("sus", help="score SUS responses (id,item1..item10)")
    p_sus.add_argument("csv")
    p_sus.add_argument("--format", choices=("text", "json"), default="text")

    p_rubric = score_sub.add_parser("rubric", help="score rubric assessments (id,context,...,clarity)")
    p_rubric.add_argument("csv")
    p_rubric.add_argument("--format", choices=("text", "json"), default="text")

    p_agree = score_sub.add_parser("agreement", help="exact-match agreement of two raters' rubric files")
    p_agree.add_argument("first")
    p_agree.add_argument("second")
    p_agree.add_argument("--format", choices=("text", "json"), default="text")

    p_mwu = score_sub.add_parser("mwu", help="Mann-Whitney U test between two value files (id,value)")
    p_mwu.add_argument("first")
    p_mwu.add_argument("second")
    p_mwu.add_argument("--format", choices=("text", "json"), default="text")

    p_score.set_defaults(handler=cmd_score)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.handler(args)
