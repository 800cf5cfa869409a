"""Recompute the reference inner-derivation tables and compare."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import catalog
from .derivations import inner_derivation_space, symbolic_ad

MATCH = "match"
MATRIX_DIFFERS = "dimension-match-matrix-differs"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class ReportRow:
    id: str
    table: int
    case: str
    bindings: dict
    dimension_computed: int
    dimension_expected: int
    matrix_computed: list
    matrix_expected: list | None
    status: str
    flagged: bool
    note: str = ""

    @property
    def is_failure(self) -> bool:
        """Dimension mismatches always fail; matrix differences only on unflagged rows."""
        return self.status == MISMATCH or (self.status == MATRIX_DIFFERS and not self.flagged)


def _status(dim_c, dim_e, mat_c, mat_e) -> str:
    if dim_c != dim_e:
        return MISMATCH
    if mat_e is not None and mat_c == mat_e:
        return MATCH
    return MATRIX_DIFFERS


def compute_row(id: str, label: str = "", bindings: dict | None = None) -> ReportRow:
    bindings = bindings or {}
    entry = catalog.get_entry(id)
    a = catalog.instantiate(id, bindings)
    computed = symbolic_ad(a)
    expected = catalog.expected_inner_matrix(id, bindings)
    dim_c = inner_derivation_space(a).dim
    dim_e = catalog.expected_inner_dimension(id, bindings)
    mat_c = computed.rows()
    mat_e = expected.rows() if expected is not None else None
    status = _status(dim_c, dim_e, mat_c, mat_e)
    notes = [entry.note] if entry.note else []
    if status == MISMATCH:
        notes.append(f"computed dimension {dim_c}, table lists {dim_e}")
    elif status == MATRIX_DIFFERS:
        notes.append("table matrix differs from the computed one"
                     if mat_e is not None else "table matrix undefined for this case")
    return ReportRow(
        id=id, table=entry.table, case=label,
        bindings={k: str(v) for k, v in sorted(bindings.items())},
        dimension_computed=dim_c, dimension_expected=dim_e,
        matrix_computed=mat_c, matrix_expected=mat_e,
        status=status, flagged=entry.table_status == "flagged",
        note="; ".join(notes),
    )


def build_rows() -> list:
    """One row per catalog entry and per parameter case the tables split on."""
    rows = []
    for id in catalog.list_entries():
        for label, bindings in catalog.report_cases(id):
            rows.append(compute_row(id, label, bindings))
    return rows


def _matrix_text(m) -> list:
    if m is None:
        return ["(undefined)"]
    widths = [max(len(r[c]) for r in m) for c in range(len(m[0]))]
    return ["[ " + "  ".join(x.rjust(w) for x, w in zip(r, widths)) + " ]" for r in m]


def _label(row: ReportRow) -> str:
    return row.id + (f" ({row.case})" if row.case else "")


def render_table(rows) -> str:
    out = []
    for table in sorted({r.table for r in rows}):
        out.append(f"== Table {table} ==")
        for r in (r for r in rows if r.table == table):
            flag = " [flagged]" if r.flagged else ""
            out.append(f"{_label(r)}: dim {r.dimension_computed} (table {r.dimension_expected}) "
                       f"-> {r.status}{flag}")
            comp = _matrix_text(r.matrix_computed)
            if r.status == MATCH:
                out.extend("    " + line for line in comp)
            else:
                exp = _matrix_text(r.matrix_expected)
                w = max(len(x) for x in comp)
                out.append("    " + "computed".ljust(w) + "   table")
                for i in range(max(len(comp), len(exp))):
                    c = comp[i] if i < len(comp) else ""
                    e = exp[i] if i < len(exp) else ""
                    out.append("    " + c.ljust(w) + "   " + e)
            if r.note:
                out.append(f"    note: {r.note}")
        out.append("")
    return "\n".join(out)


def render_markdown(rows) -> str:
    out = ["| Algebra | Computed inner derivation | Dim | Table dim | Status | Note |",
           "|---|---|---|---|---|---|"]
    for r in rows:
        mat = "<br>".join(" ".join(x for x in row) for row in r.matrix_computed)
        status = r.status + (" (flagged)" if r.flagged else "")
        out.append(f"| {_label(r)} | {mat} | {r.dimension_computed} | {r.dimension_expected} "
                   f"| {status} | {r.note} |")
    return "\n".join(out) + "\n"


def render_json(rows) -> str:
    return json.dumps({"rows": [asdict(r) for r in rows]}, indent=2, sort_keys=True) + "\n"


RENDERERS = {"table": render_table, "markdown": render_markdown, "json": render_json}


def generate_report(format: str = "table", rows=None) -> str:
    if format not in RENDERERS:
        raise ValueError(f"unknown report format {format!r}")
    return RENDERERS[format](build_rows() if rows is None else rows)
