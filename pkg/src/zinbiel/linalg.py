"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Vectors are tuples of scalars and
matrices are tuples of row tuples. Operator matrices follow the
columns-are-images convention: column ``i`` holds the coordinates of the
image of basis vector ``e_i``.

Every function returns fresh immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Raised when shapes are empty or do not line up."""


def scalar(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact scalar.

    Floats are refused: they would silently smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix")
    return m


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    """Coordinates of ``e_{i+1}`` in dimension ``n`` (``i`` is 0-based)."""
    if not 0 <= i < n:
        raise DimensionError(f"basis index {i} out of range for dimension {n}")
    return tuple(ONE if t == i else ZERO for t in range(n))


def zero_matrix(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def vadd(u: Vector, v: Vector) -> Vector:
    _same_length(u, v)
    return tuple(x + y for x, y in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    _same_length(u, v)
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, u: Vector) -> Vector:
    c = scalar(c)
    return tuple(c * x for x in u)


def is_zero(x) -> bool:
    """True for a zero scalar, vector or matrix."""
    if isinstance(x, tuple):
        return all(is_zero(y) for y in x)
    return x == 0


def linear_combination(coeffs: Sequence, vectors: Sequence[Vector]) -> Vector:
    if len(coeffs) != len(vectors):
        raise DimensionError("coefficient count differs from vector count")
    if not vectors:
        raise DimensionError("empty combination has no ambient length")
    out = zero_vector(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        out = vadd(out, vscale(c, v))
    return out


def madd(a: Matrix, b: Matrix) -> Matrix:
    _same_shape(a, b)
    return tuple(vadd(r, s) for r, s in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
    _same_shape(a, b)
    return tuple(vsub(r, s) for r, s in zip(a, b))


def mscale(c, a: Matrix) -> Matrix:
    return tuple(vscale(c, r) for r in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), ZERO) for c in bt) for r in a)


def matvec(a: Matrix, v: Vector) -> Vector:
    if shape(a)[1] != len(v):
        raise DimensionError(f"cannot apply {shape(a)} matrix to length-{len(v)} vector")
    return tuple(sum((x * y for x, y in zip(r, v)), ZERO) for r in a)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Operator commutator ``ab - ba``."""
    return msub(matmul(a, b), matmul(b, a))


def column(m: Matrix, j: int) -> Vector:
    return tuple(r[j] for r in m)


def from_columns(cols: Sequence[Vector]) -> Matrix:
    return transpose(tuple(cols))


def vectorize(m: Matrix) -> Vector:
    """Row-major flattening: entry ``(r, c)`` lands at ``r * ncols + c``."""
    return tuple(x for r in m for x in r)


def unvectorize(v: Vector, n: int) -> Matrix:
    if len(v) != n * n:
        raise DimensionError(f"length {len(v)} is not {n}x{n}")
    return tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n))


class RREF(NamedTuple):
    matrix: Matrix
    rank: int
    pivots: tuple


def rref(m: Sequence[Sequence]) -> RREF:
    """Reduced row-echelon form with unit, leftmost pivots.

    Returns ``(matrix, rank, pivot_columns)``; the input is not modified.
    """
    rows = [list(vector(r)) for r in m]
    if not rows or not rows[0]:
        raise DimensionError("rref of an empty matrix")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("ragged matrix")
    pivots = []
    prow = 0
    for c in range(ncols):
        if prow == len(rows):
            break
        src = next((r for r in range(prow, len(rows)) if rows[r][c] != 0), None)
        if src is None:
            continue
        rows[prow], rows[src] = rows[src], rows[prow]
        p = rows[prow][c]
        if p != 1:
            rows[prow] = [x / p for x in rows[prow]]
        for r in range(len(rows)):
            f = rows[r][c]
            if r != prow and f != 0:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[prow])]
        pivots.append(c)
        prow += 1
    return RREF(tuple(tuple(r) for r in rows), len(pivots), tuple(pivots))


def rank(m: Sequence[Sequence]) -> int:
    return rref(m).rank


@dataclass(frozen=True)
class Subspace:
    """A linear subspace held by its canonical (RREF) basis."""

    ambient_dim: int
    basis: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(b) if x != 0) for b in self.basis)

    def reduce(self, v: Sequence) -> Vector:
        """Residual of ``v`` after eliminating every pivot of the basis."""
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector length {len(v)} != ambient {self.ambient_dim}")
        for b, p in zip(self.basis, self.pivots):
            if v[p] != 0:
                v = vsub(v, vscale(v[p], b))
        return v

    def __contains__(self, v) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the canonical basis (pivot entries)."""
        v = vector(v)
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())


def span(vs: Sequence[Sequence], ambient_dim: int | None = None) -> Subspace:
    """Canonical basis of the span of ``vs``.

    ``ambient_dim`` is only needed when ``vs`` is empty.
    """
    vs = [vector(v) for v in vs]
    if not vs:
        if ambient_dim is None:
            raise DimensionError("span of no vectors needs an ambient dimension")
        return Subspace.zero(ambient_dim)
    n = len(vs[0])
    if any(len(v) != n for v in vs):
        raise DimensionError("vectors of mixed lengths")
    if ambient_dim is not None and ambient_dim != n:
        raise DimensionError(f"vectors have length {n}, expected {ambient_dim}")
    if n == 0:
        return Subspace(0, ())
    red = rref(vs)
    return Subspace(n, red.matrix[:red.rank])


def nullspace(m: Sequence[Sequence]) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    red = rref(m)
    ncols = len(red.matrix[0])
    free = [c for c in range(ncols) if c not in red.pivots]
    raw = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red.matrix, red.pivots):
            v[p] = -row[f]
        raw.append(v)
    # Raw kernel vectors are echelon by their last free column; re-canonicalise.
    return span(raw, ncols)


def _same_length(u, v):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")


def _same_shape(a, b):
    if shape(a) != shape(b):
        raise DimensionError(f"shape mismatch: {shape(a)} vs {shape(b)}")


def pretty(x) -> str:
    """Readable text for a scalar, vector or matrix (matrices one row per line)."""
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        cells = [[str(c) for c in r] for r in x]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)
    if isinstance(x, tuple):
        return "(" + ", ".join(str(c) for c in x) + ")"
    return str(x)
