"""JSON algebra documents.

::

    {
      "format": 1,
      "name": "A_2^1",
      "dim": 2,
      "products": [
        {"left": 1, "right": 1, "result": [{"basis": 2, "coeff": "1"}]}
      ]
    }

Indices are 1-based. Coefficients are strings ``"p"``, ``"-p"`` or ``"p/q"``.
Products not listed are zero.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraSpec

FORMAT_VERSION = 1

_RATIONAL = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


class AlgebraFormatError(ValueError):
    """Malformed algebra document; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class MalformedRationalError(AlgebraFormatError):
    pass


class IndexRangeError(AlgebraFormatError):
    pass


class DuplicateProductError(AlgebraFormatError):
    pass


def parse_rational(text, where: str = "") -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise MalformedRationalError(f"malformed rational {text!r}", where)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise MalformedRationalError(f"zero denominator in {text!r}", where)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _int_field(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise AlgebraFormatError(f"missing field {key!r}", where)
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise AlgebraFormatError(f"field {key!r} must be an integer, got {v!r}", f"{where}.{key}".lstrip("."))
    return v


def _index(obj: dict, key: str, dim: int, where: str) -> int:
    v = _int_field(obj, key, where)
    if not 1 <= v <= dim:
        raise IndexRangeError(f"index {v} outside 1..{dim}", f"{where}.{key}")
    return v


def _expect_keys(obj, allowed: set, where: str):
    if not isinstance(obj, dict):
        raise AlgebraFormatError("expected an object", where or "document")
    extra = set(obj) - allowed
    if extra:
        raise AlgebraFormatError(f"unknown field(s) {', '.join(sorted(extra))}", where or "document")


def parse_algebra(text: str) -> AlgebraSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    _expect_keys(doc, {"format", "name", "dim", "products"}, "")
    version = _int_field(doc, "format", "")
    if version != FORMAT_VERSION:
        raise AlgebraFormatError(f"unsupported format version {version}", "format")
    name = doc.get("name")
    if not isinstance(name, str):
        raise AlgebraFormatError("field 'name' must be a string", "name")
    dim = _int_field(doc, "dim", "")
    if dim < 1:
        raise AlgebraFormatError(f"dimension must be positive, got {dim}", "dim")
    products = doc.get("products")
    if not isinstance(products, list):
        raise AlgebraFormatError("field 'products' must be a list", "products")

    table = {}
    for p, rec in enumerate(products):
        where = f"products[{p}]"
        _expect_keys(rec, {"left", "right", "result"}, where)
        i = _index(rec, "left", dim, where)
        j = _index(rec, "right", dim, where)
        if (i, j) in table:
            raise DuplicateProductError(f"duplicate product e_{i} o e_{j}", where)
        result = rec.get("result")
        if not isinstance(result, list):
            raise AlgebraFormatError("field 'result' must be a list", f"{where}.result")
        coeffs = {}
        for r, term in enumerate(result):
            tw = f"{where}.result[{r}]"
            _expect_keys(term, {"basis", "coeff"}, tw)
            k = _index(term, "basis", dim, tw)
            if k in coeffs:
                raise DuplicateProductError(f"basis e_{k} listed twice", tw)
            if "coeff" not in term:
                raise AlgebraFormatError("missing field 'coeff'", tw)
            coeffs[k] = parse_rational(term["coeff"], f"{tw}.coeff")
        table[(i, j)] = coeffs
    return AlgebraSpec.from_products(name, dim, table)


def emit_algebra(a: AlgebraSpec) -> str:
    """Canonical document: products sorted by (left, right, basis), zeros dropped."""
    products = [
        {"left": i, "right": j,
         "result": [{"basis": k, "coeff": format_rational(c)} for k, c in sorted(res.items())]}
        for (i, j), res in sorted(a.products().items())
    ]
    doc = {"format": FORMAT_VERSION, "name": a.name, "dim": a.dim, "products": products}
    return json.dumps(doc, indent=2) + "\n"


def load_algebra(path) -> AlgebraSpec:
    return parse_algebra(Path(path).read_text())


def save_algebra(a: AlgebraSpec, path) -> None:
    Path(path).write_text(emit_algebra(a))
