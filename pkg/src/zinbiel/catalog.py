"""Classified nilpotent Zinbiel algebras of dimension 2, 3 and 4.

Each entry carries its product list (parameters left symbolic), parameter
constraints, and the reference inner-derivation table rows: the expected
dimension and, where one is printed, the expected generic matrix. The
expected values are the tabulated ones; :mod:`zinbiel.report` compares
them with what is computed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Mapping

from .algebra import AlgebraSpec
from .derivations import LinearForm, SymbolicAdMatrix, parse_form
from .linalg import scalar


class CatalogError(ValueError):
    pass


class UnknownAlgebraError(CatalogError, KeyError):
    def __str__(self):
        return self.args[0]


class BindingError(CatalogError):
    """Missing or unexpected parameter bindings."""


class ConstraintError(CatalogError):
    """A parameter value outside the admissible range."""


@dataclass(frozen=True)
class Param:
    """Coefficient ``factor * <parameter>`` inside a product list."""

    name: str
    factor: Fraction = Fraction(1)

    def __neg__(self):
        return Param(self.name, -self.factor)

    def resolve(self, bindings: Mapping) -> Fraction:
        return self.factor * bindings[self.name]


LAMBDA = Param("lambda")
ALPHA = Param("alpha")


@dataclass(frozen=True)
class Case:
    """One row of a reference table, possibly restricted to a parameter split.

    ``when`` is ``None`` (always) or ``(param, value, equal)``; ``matrix`` maps
    bindings to the printed generic matrix, or to ``None`` where the printed
    expression is undefined.
    """

    label: str
    dim: int
    matrix: Callable | None
    when: tuple | None = None
    representative: Mapping = field(default_factory=dict)

    def applies(self, bindings: Mapping) -> bool:
        if self.when is None:
            return True
        p, v, equal = self.when
        return (bindings[p] == v) == equal


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    products: tuple  # ((i, j, ((k, coeff), ...)), ...), 1-based
    cases: tuple
    params: tuple = ()
    excluded: Mapping = field(default_factory=dict)  # param -> forbidden values
    table_status: str = "verified"  # or "flagged"
    table: int = 0
    note: str = ""

    @property
    def param_constraints(self) -> tuple:
        return tuple(f"{p} != {v}" for p, vs in self.excluded.items() for v in vs)

    def case_for(self, bindings: Mapping) -> Case:
        return next(c for c in self.cases if c.applies(bindings))


def _rows(*rows):
    """Constant printed matrix given as rows of linear-form strings."""
    n = len(rows)
    forms = SymbolicAdMatrix(tuple(tuple(parse_form(x, n) for x in r) for r in rows))
    return lambda bindings: forms


def _zero(n):
    return _rows(*[["0"] * n for _ in range(n)])


def _param_rows(n, build):
    """Printed matrix depending on parameters; ``build`` returns rows of
    forms or strings, or ``None`` where undefined."""
    def make(bindings):
        rows = build(bindings, lambda s: parse_form(s, n))
        if rows is None:
            return None
        return SymbolicAdMatrix(tuple(tuple(x if isinstance(x, LinearForm) else parse_form(x, n)
                                            for x in r) for r in rows))
    return make


def _a15_generic(b, f):
    al = b["alpha"]
    if al == 1:
        return None
    q = (1 + al) / (1 - al)
    z = ["0"] * 4
    return [z, z, z, [f("a_2") - q * f("a_2"), q * f("a_1") - f("a_1"), "0", "0"]]


Z4 = ["0"] * 4
Z3 = ["0"] * 3
H = Fraction(1, 2)

_ENTRIES = [
    CatalogEntry("A_2^1", 2, ((1, 1, ((2, 1),)),), (Case("", 0, _zero(2)),), table=1),

    CatalogEntry("A_3^1", 3, (), (Case("", 0, _zero(3)),), table=2),
    CatalogEntry("A_3^2", 3, ((1, 1, ((3, 1),)),), (Case("", 0, _zero(3)),), table=2),
    CatalogEntry("A_3^3", 3, ((1, 1, ((3, 1),)), (2, 2, ((3, 1),))),
                 (Case("", 0, _zero(3)),), table=2),
    CatalogEntry("A_3^4", 3, ((1, 2, ((3, H),)), (2, 1, ((3, -H),))),
                 (Case("", 2, _rows(Z3, Z3, ["a_2", "-a_1", "0"])),), table=2),
    CatalogEntry("A_3^5", 3, ((2, 1, ((3, 1),)),),
                 (Case("", 2, _rows(Z3, Z3, ["-a_2", "a_1", "0"])),), table=2),
    CatalogEntry("A_3^6", 3, ((1, 1, ((3, 1),)), (1, 2, ((3, 1),)), (2, 2, ((3, LAMBDA),))),
                 (Case("", 2, _rows(Z3, Z3, ["a_2", "-a_1", "0"]),
                       representative={"lambda": Fraction(1)}),),
                 params=("lambda",), excluded={"lambda": (Fraction(0),)}, table=2),
    CatalogEntry("A_3^7", 3, ((1, 1, ((2, 1),)), (1, 2, ((3, H),)), (2, 1, ((3, 1),))),
                 (Case("", 0, _zero(3)),), table=2),

    CatalogEntry("A_4^1", 4, ((1, 1, ((2, 1),)), (1, 2, ((3, 1),)), (2, 1, ((3, 2),)),
                              (1, 3, ((4, 1),)), (2, 2, ((4, 3),)), (3, 1, ((4, 3),))),
                 (Case("", 3, _rows(Z4, Z4, ["-a_2", "a_1", "0", "0"],
                                    ["-2a_3", "0", "2a_1", "0"])),), table=3),
    CatalogEntry("A_4^2", 4, ((1, 1, ((3, 1),)), (1, 2, ((4, 1),)), (1, 3, ((4, 1),)),
                              (3, 1, ((4, 2),))),
                 (Case("", 3, _rows(Z4, Z4, Z4, ["a_2 - a_3", "-a_1", "a_1", "0"])),), table=3),
    CatalogEntry("A_4^3", 4, ((1, 1, ((3, 1),)), (1, 3, ((4, 1),)), (2, 2, ((4, 1),)),
                              (3, 1, ((4, 2),))),
                 (Case("", 2, _rows(Z4, Z4, Z4, ["-a_3", "0", "a_1", "0"])),), table=3),
    CatalogEntry("A_4^4", 4, ((1, 2, ((3, 1),)), (1, 3, ((4, 1),)), (2, 1, ((3, -1),))),
                 (Case("", 3, _rows(Z4, Z4, ["2a_2", "-2a_1", "0", "0"],
                                    ["a_3", "0", "-a_1", "0"])),), table=3),
    CatalogEntry("A_4^5", 4, ((1, 2, ((3, 1),)), (1, 3, ((4, 1),)), (2, 1, ((3, -1),)),
                              (2, 2, ((4, 1),))),
                 (Case("", 3, _rows(Z4, Z4, ["2a_2", "-2a_1", "0", "0"],
                                    ["a_3", "0", "-a_1", "0"])),), table=3),
    CatalogEntry("A_4^6", 4, ((1, 1, ((4, 1),)), (1, 2, ((3, 1),)), (2, 1, ((3, -1),)),
                              (2, 2, ((3, -2), (4, 1)))),
                 (Case("", 2, _rows(Z4, Z4, ["2a_2", "-2a_1", "0", "0"], Z4)),), table=3),
    CatalogEntry("A_4^7", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),)), (2, 2, ((3, -1),))),
                 (Case("", 2, _rows(Z4, Z4, ["a_2", "-a_1", "0", "0"],
                                    ["-a_2", "a_1", "0", "0"])),), table=3),
    CatalogEntry("A_4^8", 4, ((1, 1, ((3, 1),)), (1, 2, ((4, 1),)), (2, 1, ((3, -ALPHA),)),
                              (2, 2, ((4, -1),))),
                 (Case("alpha != 0", 2,
                       _param_rows(4, lambda b, f: [Z4, Z4,
                                                    [b["alpha"] * f("a_2"), -b["alpha"] * f("a_1"), "0", "0"],
                                                    ["a_2", "-a_1", "0", "0"]]),
                       when=("alpha", 0, False), representative={"alpha": Fraction(2)}),
                  Case("alpha = 0", 2, _rows(Z4, Z4, Z4, ["a_2", "-a_1", "0", "0"]),
                       when=("alpha", 0, True), representative={"alpha": Fraction(0)})),
                 params=("alpha",), table=3),
    CatalogEntry("A_4^9", 4, ((1, 1, ((4, 1),)), (1, 2, ((4, ALPHA),)), (2, 1, ((4, -ALPHA),)),
                              (2, 2, ((4, 1),)), (3, 3, ((4, 1),))),
                 (Case("alpha != 0", 2,
                       _param_rows(4, lambda b, f: [Z4, Z4, Z4,
                                                    [2 * b["alpha"] * f("a_2"),
                                                     -2 * b["alpha"] * f("a_1"), "0", "0"]]),
                       when=("alpha", 0, False), representative={"alpha": Fraction(2)}),
                  Case("alpha = 0", 0, _zero(4),
                       when=("alpha", 0, True), representative={"alpha": Fraction(0)})),
                 params=("alpha",), table=3,
                 note="printed product 'e_3 e_3 = e_4' read as e_3 o e_3 = e_4"),
    CatalogEntry("A_4^10", 4, ((1, 1, ((4, 1),)), (1, 3, ((4, 1),)), (2, 1, ((4, -1),)),
                               (2, 2, ((4, 1),)), (3, 1, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, Z4, ["2a_2", "-2a_1", "0", "0"])),), table=3),
    CatalogEntry("A_4^11", 4, ((1, 1, ((4, 1),)), (1, 2, ((4, 1),)), (2, 1, ((4, -1),)),
                               (3, 3, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, Z4, ["2a_2", "-2a_1", "0", "0"])),), table=3),
    CatalogEntry("A_4^12", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, ["a_2", "-a_1", "0", "0"],
                                    ["-a_2", "a_1", "0", "0"])),), table=3),
    CatalogEntry("A_4^13", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, ["2a_2", "-2a_1", "0", "0"], Z4)),),
                 table_status="flagged", table=3,
                 note="printed products identical to A_4^12; table row not reproducible"),
    CatalogEntry("A_4^14", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, Z4, ["-a_2", "a_1", "0", "0"])),),
                 table_status="flagged", table=3,
                 note="printed matrix drops the e_3 row implied by e_1 o e_2 = e_3"),
    CatalogEntry("A_4^15", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),))),
                 (Case("alpha != -1", 2, _param_rows(4, _a15_generic),
                       when=("alpha", -1, False), representative={"alpha": Fraction(2)}),
                  Case("alpha = -1", 2, _rows(Z4, Z4, Z4, ["a_2", "-a_1", "0", "0"]),
                       when=("alpha", -1, True), representative={"alpha": Fraction(-1)})),
                 params=("alpha",), table_status="flagged", table=3,
                 note="alpha appears in the table but not in the printed products"),
    CatalogEntry("A_4^16", 4, ((1, 2, ((3, 1),)), (2, 1, ((4, 1),))),
                 (Case("", 2, _rows(Z4, Z4, Z4, ["2a_2", "-2a_1", "0", "0"])),),
                 table_status="flagged", table=3,
                 note="printed products identical to A_4^12; table row not reproducible"),
]

CATALOG = {e.id: e for e in _ENTRIES}

# Generic sample values; split points are added per entry.
SAMPLE_VALUES = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3))


def list_entries() -> list:
    return [e.id for e in _ENTRIES]


def get_entry(id: str) -> CatalogEntry:
    try:
        return CATALOG[id]
    except KeyError:
        raise UnknownAlgebraError(f"unknown catalog algebra {id!r}") from None


def _check_bindings(entry: CatalogEntry, bindings: Mapping) -> dict:
    bindings = {k: scalar(v) for k, v in (bindings or {}).items()}
    missing = set(entry.params) - set(bindings)
    extra = set(bindings) - set(entry.params)
    if missing:
        raise BindingError(f"{entry.id}: missing binding for {', '.join(sorted(missing))}")
    if extra:
        raise BindingError(f"{entry.id}: unexpected parameter {', '.join(sorted(extra))}")
    for p, forbidden in entry.excluded.items():
        if bindings[p] in forbidden:
            raise ConstraintError(f"{entry.id}: {p} = {bindings[p]} violates {p} != {bindings[p]}")
    return bindings


def instantiate(id: str, bindings: Mapping | None = None) -> AlgebraSpec:
    """Dense algebra for catalog entry ``id`` with parameters substituted."""
    entry = get_entry(id)
    b = _check_bindings(entry, bindings or {})
    products = []
    for i, j, result in entry.products:
        products.append(((i, j), {k: c.resolve(b) if isinstance(c, Param) else c for k, c in result}))
    name = id if not b else id + "(" + ", ".join(f"{k}={v}" for k, v in sorted(b.items())) + ")"
    return AlgebraSpec.from_products(name, entry.dim, products)


def expected_inner_dimension(id: str, bindings: Mapping | None = None) -> int:
    entry = get_entry(id)
    return entry.case_for(_check_bindings(entry, bindings or {})).dim


def expected_inner_matrix(id: str, bindings: Mapping | None = None) -> SymbolicAdMatrix | None:
    """The tabulated generic matrix for this parameter case (``None`` if undefined)."""
    entry = get_entry(id)
    b = _check_bindings(entry, bindings or {})
    case = entry.case_for(b)
    return case.matrix(b) if case.matrix else None


def sample_bindings(id: str) -> list:
    """Admissible bindings: the table's split points plus generic values."""
    entry = get_entry(id)
    if not entry.params:
        return [{}]
    per_param = []
    for p in entry.params:
        values = {c.when[1] for c in entry.cases if c.when and c.when[0] == p}
        values |= set(SAMPLE_VALUES)
        values -= set(entry.excluded.get(p, ()))
        per_param.append(sorted(Fraction(v) for v in values))
    return [dict(zip(entry.params, combo)) for combo in cartesian(*per_param)]


def report_cases(id: str) -> list:
    """``(label, bindings)`` per table case, for report rows."""
    entry = get_entry(id)
    return [(c.label, dict(c.representative)) for c in entry.cases]
