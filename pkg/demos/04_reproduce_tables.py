"""Recompute the reference tables of inner derivations and compare."""
from zinbiel.report import build_rows, generate_report

rows = build_rows()
print(generate_report("table", rows))

for r in rows:
    if r.is_failure:
        print("disagrees with the table:", r.id, r.case, r.status)
