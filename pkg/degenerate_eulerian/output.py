# -*- coding: utf-8 -*-
"""
Output documents and their renderings.

Builds OutputDocument payloads for the table, expand, verify and list
commands and renders them as JSON, CSV or aligned text. Every value is
carried twice: as its lossless string rendering and, under "exact", as
(exponent-vector, coefficient-string) term lists over the variable order
given in params["variables"].
"""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence

from . import __version__
from .algebra import VARIABLES, RatFun, Scalar, Value, poly_from_terms, poly_terms, render, to_ratfun
from .config import TABLE_KINDS
from .context import SequenceContext, default_context
from .degenerate import deg_eulerian_number, deg_ordered_bell, deg_unsigned_stirling1
from .errors import NegativeIndex
from .generating import get_generating_function
from .models import IdentityInfo, IdentityReport, OutputDocument, OutputFormat

logger = logging.getLogger(__name__)


# =============================================================================
# Exact Values
# =============================================================================

def exact_value(value: Value) -> Dict[str, List]:
    """Structured form {"num": terms, "den": terms} of any exact value."""
    rf = to_ratfun(value)
    return {"num": poly_terms(rf.num), "den": poly_terms(rf.den)}


def decode_exact(data: Mapping[str, Sequence]) -> RatFun:
    return RatFun(poly_from_terms(data["num"]), poly_from_terms(data["den"]))


def _entry(n: int, values: Sequence[Value]) -> Dict[str, Any]:
    return {
        "n": n,
        "row": [render(v) for v in values],
        "exact": [exact_value(v) for v in values],
    }


def _value_entry(n: int, value: Value) -> Dict[str, Any]:
    return {"n": n, "value": render(value), "exact": exact_value(value)}


# =============================================================================
# Documents
# =============================================================================

def _table_row(kind: str, n: int, ctx: SequenceContext) -> List[Value]:
    if kind == "eulerian":
        return ctx.eulerian_triangle.row(n)
    if kind == "stirling1":
        return ctx.stirling_triangles.s1_row(n)
    if kind == "stirling2":
        return ctx.stirling_triangles.s2_row(n)
    if kind == "deg-eulerian":
        return [deg_eulerian_number(n, l, ctx) for l in range(max(1, n))]
    if kind == "deg-stirling1":
        return [deg_unsigned_stirling1(n, l) for l in range(n + 1)]
    raise ValueError(f"Unknown table kind: {kind}. Use one of {', '.join(TABLE_KINDS)}.")


def table_document(
    kind: str,
    n_max: int,
    ctx: Optional[SequenceContext] = None,
    fmt: OutputFormat = "json",
) -> OutputDocument:
    """Rows 0..n_max of a triangle, or values 0..n_max of a sequence."""
    if kind not in TABLE_KINDS:
        raise ValueError(f"Unknown table kind: {kind}. Use one of {', '.join(TABLE_KINDS)}.")
    if n_max < 0:
        raise NegativeIndex(f"n_max must be nonnegative, got {n_max}")
    ctx = ctx if ctx is not None else default_context()

    if kind == "ordered-bell":
        results = [_value_entry(n, deg_ordered_bell(n, ctx)) for n in range(n_max + 1)]
    else:
        results = [_entry(n, _table_row(kind, n, ctx)) for n in range(n_max + 1)]
    return OutputDocument(
        format=fmt,
        command="table",
        version=__version__,
        params={"kind": kind, "n_max": n_max, "variables": list(VARIABLES)},
        results=results,
    )


def expand_document(
    name: str,
    order: int,
    bindings: Optional[Mapping[str, Scalar]] = None,
    fmt: OutputFormat = "json",
) -> OutputDocument:
    """Sequence values (j! times the series coefficients) of a generating function."""
    gf = get_generating_function(name)
    values = gf.sequence(order, bindings)
    checked = gf.check_bindings(bindings)
    return OutputDocument(
        format=fmt,
        command="expand",
        version=__version__,
        params={
            "gf": name,
            "formula": gf.formula,
            "main_var": gf.main_var,
            "order": order,
            "bindings": {v: render(a) for v, a in checked.items()},
            "variables": list(VARIABLES),
        },
        results=[_value_entry(n, v) for n, v in enumerate(values)],
    )


def verify_document(
    reports: Sequence[IdentityReport],
    params: Dict[str, Any],
    fmt: OutputFormat = "json",
) -> OutputDocument:
    return OutputDocument(
        format=fmt,
        command="verify",
        version=__version__,
        params={**params, "passed": all(r.passed for r in reports)},
        results=[{"n": i, "id": r.id, "report": r.model_dump()} for i, r in enumerate(reports)],
    )


def list_document(infos: Sequence[IdentityInfo], fmt: OutputFormat = "json") -> OutputDocument:
    return OutputDocument(
        format=fmt,
        command="list",
        version=__version__,
        params={"count": len(infos)},
        results=[{"n": i, "id": info.tag, "identity": info.model_dump()} for i, info in enumerate(infos)],
    )


# =============================================================================
# Rendering
# =============================================================================

def render_json(doc: OutputDocument) -> str:
    return json.dumps(doc.model_dump(), ensure_ascii=False, indent=2)


def parse_json_document(text: str) -> OutputDocument:
    """Inverse of render_json."""
    return OutputDocument.model_validate(json.loads(text))


def document_values(doc: OutputDocument) -> List[Any]:
    """
    Decode the "exact" fields of a table or expand document.

    Row entries decode to a list of RatFun values, value entries to one RatFun.
    """
    decoded = []
    for entry in doc.results:
        exact = entry["exact"]
        if "row" in entry:
            decoded.append([decode_exact(item) for item in exact])
        else:
            decoded.append(decode_exact(exact))
    return decoded


def _csv_header(doc: OutputDocument) -> str:
    described = " ".join(f"{k}={v}" for k, v in doc.params.items() if k != "variables")
    return f"# {doc.command} {described}".rstrip()


def _csv_rows(doc: OutputDocument) -> List[List[str]]:
    rows = []
    for entry in doc.results:
        if "row" in entry:
            rows.append(entry["row"])
        elif "value" in entry:
            rows.append([entry["value"]])
        elif "report" in entry:
            report = entry["report"]
            counterexample = report["counterexample"] or {}
            indices = ";".join(f"{k}={v}" for k, v in counterexample.get("indices", {}).items())
            rows.append([report["id"], report["status"], str(report["comparisons"]), indices])
        elif "identity" in entry:
            info = entry["identity"]
            rows.append([info["tag"], info["anchor"], info["left_source"], info["right_source"]])
    return rows


def render_csv(doc: OutputDocument, header: bool = True) -> str:
    """One line per entry; an optional first line starting with '#' echoes the command."""
    buffer = io.StringIO()
    if header:
        buffer.write(_csv_header(doc) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(_csv_rows(doc))
    return buffer.getvalue()


def parse_csv_rows(text: str) -> List[List[str]]:
    """Data rows of a rendered CSV document, comment lines skipped."""
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    return [row for row in csv.reader(lines)]


def _text_table(title: str, headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            if i < len(widths):
                widths[i] = max(widths[i], len(cell))
            else:
                widths.append(len(cell))
    width = max(sum(widths) + 2 * (len(widths) - 1), len(title))
    lines = ["=" * width, title, "=" * width]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip())
    lines.append("-" * width)
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    lines.append("=" * width)
    return "\n".join(lines) + "\n"


def render_text(doc: OutputDocument) -> str:
    """Aligned console tables."""
    if doc.command == "verify":
        rows = []
        for entry in doc.results:
            report = entry["report"]
            counterexample = report["counterexample"]
            where = ""
            if counterexample:
                where = ", ".join(f"{k}={v}" for k, v in counterexample["indices"].items())
                if counterexample["label"]:
                    where = f"{where} ({counterexample['label']})".strip()
            rows.append([
                report["id"],
                report["status"].upper(),
                str(report["comparisons"]),
                f"{report['elapsed']:.3f}s",
                where,
            ])
        passed = sum(1 for entry in doc.results if entry["report"]["status"] == "pass")
        title = f"IDENTITY VERIFICATION: {passed}/{len(doc.results)} passed (n_max={doc.params.get('n_max')})"
        return _text_table(title, ["ID", "Status", "Checks", "Time", "Counterexample"], rows)

    if doc.command == "list":
        rows = [
            [entry["identity"]["tag"], entry["identity"]["anchor"], entry["identity"]["description"]]
            for entry in doc.results
        ]
        return _text_table(f"REGISTERED IDENTITIES ({len(rows)})", ["ID", "Anchor", "Description"], rows)

    if doc.command == "expand":
        title = f"EXPANSION OF {doc.params['gf']}: {doc.params['formula']}"
        rows = [[str(entry["n"]), entry["value"]] for entry in doc.results]
        return _text_table(title, ["n", "value"], rows)

    title = f"TABLE {doc.params['kind']} (n ≤ {doc.params['n_max']})"
    rows = [[str(entry["n"])] + list(entry.get("row", [entry.get("value", "")])) for entry in doc.results]
    return _text_table(title, ["n", "entries"], rows)


def render_document(doc: OutputDocument, fmt: Optional[OutputFormat] = None) -> str:
    fmt = fmt or doc.format
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "text":
        return render_text(doc)
    return render_json(doc)
