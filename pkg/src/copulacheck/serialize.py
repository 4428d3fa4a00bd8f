"""JSON payloads, report emission, and CSV ingestion.

All scalars travel as strings: exact decimals ("0.3") and rational strings
("3/10") are accepted on input; emission always canonicalizes to rational
strings so that loading and re-emitting a payload is byte-stable.  The two
infinities are "-inf" and "+inf".

Payload loading is deliberately lenient about semantics: it validates shape
and parses values exactly, but does not re-run the semantic checks of the
public constructors (mass totals, dimension restrictions).  That keeps broken
instances loadable as verification subjects; ``check_df_axioms`` is the judge
of whether a payload actually is a distribution function.
"""

from __future__ import annotations

import csv
import io
import json

from .errors import ValidationError
from .families import (
    ComonotoneDf,
    CountermonotoneDf,
    EmpiricalDf,
    GridDf,
    GridMass,
    ProductDf,
)
from .monotone import Knot, LemmaReport, MonotoneFn
from .mvdf import DfReport, MultivariateDf
from .scalars import fmt, parse_scalar
from .sklar import CheckReport


# -- monotone functions --------------------------------------------------------


def monotone_to_payload(fn: MonotoneFn) -> dict:
    return {
        "knots": [
            {"x": fmt(k.x), "left": fmt(k.left), "value": fmt(k.value)} for k in fn.knots
        ]
    }


def monotone_from_payload(obj) -> MonotoneFn:
    if not isinstance(obj, dict) or "knots" not in obj:
        raise ValidationError('monotone function payload needs a "knots" list')
    knots = obj["knots"]
    if not isinstance(knots, list):
        raise ValidationError('"knots" must be a list')
    built = []
    for i, entry in enumerate(knots):
        if not isinstance(entry, dict):
            raise ValidationError(f"knot index {i}: expected an object")
        try:
            built.append(
                Knot(
                    x=parse_scalar(str(entry["x"])),
                    left=parse_scalar(str(entry["left"])),
                    value=parse_scalar(str(entry["value"])),
                )
            )
        except KeyError as exc:
            raise ValidationError(f"knot index {i}: missing field {exc.args[0]!r}") from exc
    return MonotoneFn(tuple(built))


# -- distribution functions ------------------------------------------------------


def df_to_payload(df: MultivariateDf) -> dict:
    return df.to_payload()


def _parse_margins(obj, family: str) -> tuple[MonotoneFn, ...]:
    margins = obj.get("margins")
    if not isinstance(margins, list) or not margins:
        raise ValidationError(f'{family} payload needs a non-empty "margins" list')
    return tuple(monotone_from_payload(m) for m in margins)


def df_from_payload(obj) -> MultivariateDf:
    if not isinstance(obj, dict):
        raise ValidationError("df payload must be an object")
    family = obj.get("family")
    if family == "empirical":
        rows = obj.get("rows")
        if not isinstance(rows, list) or not rows:
            raise ValidationError('empirical payload needs a non-empty "rows" list')
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list):
                raise ValidationError(f"row {i + 1}: expected a list")
            parsed.append(tuple(parse_scalar(str(v)) for v in row))
        return EmpiricalDf(tuple(parsed))
    if family == "product":
        return ProductDf(_parse_margins(obj, family))
    if family == "comonotone":
        return ComonotoneDf(_parse_margins(obj, family))
    if family == "countermonotone":
        return CountermonotoneDf(_parse_margins(obj, family))
    if family == "grid":
        masses = obj.get("masses")
        if not isinstance(masses, list) or not masses:
            raise ValidationError('grid payload needs a non-empty "masses" list')
        built = []
        for i, entry in enumerate(masses):
            if not isinstance(entry, dict) or "point" not in entry or "mass" not in entry:
                raise ValidationError(f'mass {i + 1}: expected {{"point", "mass"}}')
            built.append(
                GridMass(
                    point=tuple(parse_scalar(str(c)) for c in entry["point"]),
                    mass=parse_scalar(str(entry["mass"])),
                )
            )
        return GridDf(tuple(built))
    raise ValidationError(f"unknown df family {family!r}")


def load_payload(text: str):
    """Parse JSON text into a MonotoneFn or MultivariateDf by its shape."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    # wrong JSON types surface as Type/Key errors deep in the builders; at this
    # boundary they all mean the same thing: the payload is malformed
    try:
        if isinstance(obj, dict) and "knots" in obj:
            return monotone_from_payload(obj)
        return df_from_payload(obj)
    except (TypeError, KeyError, AttributeError) as exc:
        raise ValidationError(f"malformed payload: {exc}") from exc


def dumps_payload(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# -- CSV ingestion ---------------------------------------------------------------


def rows_from_csv(text: str, has_header: bool = False) -> tuple[tuple, ...]:
    """Parse CSV text into exact rows; errors report 1-based row and column."""
    reader = csv.reader(io.StringIO(text))
    rows = []
    width = None
    for lineno, record in enumerate(reader, start=1):
        if not record or (len(record) == 1 and record[0].strip() == ""):
            continue
        if has_header and lineno == 1:
            continue
        if width is None:
            width = len(record)
        if len(record) != width:
            raise ValidationError(f"row {lineno}: expected {width} columns, got {len(record)}")
        parsed = []
        for col, cell in enumerate(record, start=1):
            try:
                parsed.append(parse_scalar(cell))
            except ValidationError as exc:
                raise ValidationError(f"row {lineno}, column {col}: {exc}") from exc
        rows.append(tuple(parsed))
    if not rows:
        raise ValidationError("no data rows in CSV input")
    return tuple(rows)


# -- report JSON -------------------------------------------------------------------


def _truncate(entries: list, max_witnesses: int) -> tuple[list, bool]:
    if max_witnesses >= 0 and len(entries) > max_witnesses:
        return entries[:max_witnesses], True
    return entries, False


def _point_json(point) -> list:
    out = []
    for c in point:
        out.append(_point_json(c) if isinstance(c, tuple) else fmt(c))
    return out


def check_report_json_dict(report: CheckReport, max_witnesses: int = 20) -> dict:
    entries = [
        {
            "point": _point_json(v.point),
            "expected": fmt(v.expected),
            "got": fmt(v.got),
            "deviation": fmt(v.deviation),
            "kind": v.kind,
        }
        for v in report.violations
    ]
    shown, truncated = _truncate(entries, max_witnesses)
    return {
        "check": report.check_name,
        "points": report.points_tested,
        "pass": report.passed,
        "max_deviation": fmt(report.max_deviation),
        "violations": shown,
        "truncated": truncated,
    }


def lemma_report_json_dict(report: LemmaReport, max_witnesses: int = 20) -> dict:
    def entry_json(e):
        return {
            "point": fmt(e.point),
            "lhs": fmt(e.lhs),
            "rhs": fmt(e.rhs),
        }

    viol_a, trunc_a = _truncate(
        [entry_json(e) for e in report.checks_a if not e.holds], max_witnesses
    )
    viol_b, trunc_b = _truncate(
        [entry_json(e) for e in report.checks_b if not e.holds], max_witnesses
    )
    viol_lc, trunc_lc = _truncate(
        [entry_json(e) for e in report.left_continuity if not e.holds], max_witnesses
    )
    witnesses, trunc_ff = _truncate(
        [{"x": fmt(w.x), "lhs": fmt(w.lhs)} for w in report.ff_witnesses], max_witnesses
    )
    return {
        "check": "lemma",
        "pass": report.passed,
        "pass_a": report.pass_a,
        "pass_b": report.pass_b,
        "pass_leftcont": report.pass_leftcont,
        "points": {
            "a": len(report.checks_a),
            "b": len(report.checks_b),
            "left_continuity": len(report.left_continuity),
            "ff": len(report.ff_results),
        },
        "violations_a": viol_a,
        "violations_b": viol_b,
        "violations_leftcont": viol_lc,
        "ff_witnesses": witnesses,
        "truncated": trunc_a or trunc_b or trunc_lc or trunc_ff,
    }


def df_report_json_dict(report: DfReport, max_witnesses: int = 20) -> dict:
    vol, trunc_v = _truncate(
        [
            {"a": _point_json(c.box.a), "b": _point_json(c.box.b), "volume": fmt(c.volume)}
            for c in report.volume_checks
            if not c.holds
        ],
        max_witnesses,
    )
    lim, trunc_l = _truncate(
        [
            {"point": _point_json(c.point), "value": fmt(c.value), "expected": fmt(c.expected)}
            for c in report.limit_checks
            if not c.holds
        ],
        max_witnesses,
    )
    cont, trunc_c = _truncate(
        [
            {
                "point": _point_json(c.point),
                "axis": c.axis,
                "delta": fmt(c.delta),
                "value_at": fmt(c.value_at),
                "value_right": fmt(c.value_right),
            }
            for c in report.right_continuity_checks
            if not c.holds
        ],
        max_witnesses,
    )
    return {
        "check": "df_axioms",
        "pass": report.passed,
        "points": {
            "volumes": len(report.volume_checks),
            "limits": len(report.limit_checks),
            "right_continuity": len(report.right_continuity_checks),
        },
        "volume_violations": vol,
        "limit_violations": lim,
        "right_continuity_violations": cont,
        "truncated": trunc_v or trunc_l or trunc_c,
    }


def report_to_json(report, max_witnesses: int = 20) -> str:
    """Deterministic pretty JSON for any report type, ending in a newline."""
    return json.dumps(report.to_json_dict(max_witnesses), indent=2) + "\n"
