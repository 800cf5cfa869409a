"""Finite-dimensional algebras given by structure constants.

An :class:`AlgebraSpec` stores the dense tensor ``gamma[i][j][k]`` with
``e_i o e_j = sum_k gamma[i][j][k] e_k`` (0-based in Python). Diagnostics
that name basis elements (violations, witnesses) use 1-based labels so they
read like ``e_1, e_2, ...``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Mapping, NamedTuple, Sequence

from .linalg import (
    ZERO,
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    from_columns,
    is_zero,
    nullspace,
    scalar,
    vadd,
    vector,
    vsub,
)


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    dim: int
    gamma: tuple

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionError("algebra dimension must be positive")
        g = self.gamma
        if len(g) != n or any(len(r) != n or any(len(c) != n for c in r) for r in g):
            raise DimensionError(f"structure tensor is not {n}x{n}x{n}")

    @classmethod
    def from_products(cls, name: str, dim: int,
                      products: Mapping[tuple, Mapping[int, object]] | Iterable = ()) -> "AlgebraSpec":
        """Build from sparse 1-based products ``{(i, j): {k: coeff}}``.

        Unlisted products are zero.
        """
        g = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        items = products.items() if isinstance(products, Mapping) else products
        for (i, j), result in items:
            for k, c in dict(result).items():
                for idx in (i, j, k):
                    if not 1 <= idx <= dim:
                        raise DimensionError(f"basis index {idx} outside 1..{dim}")
                g[i - 1][j - 1][k - 1] += scalar(c)
        return cls(name, dim, _freeze(g))

    @classmethod
    def abelian(cls, dim: int, name: str | None = None) -> "AlgebraSpec":
        return cls.from_products(name or f"abelian_{dim}", dim, {})

    def table(self, i: int, j: int) -> Vector:
        """Coordinates of ``e_{i+1} o e_{j+1}``."""
        return self.gamma[i][j]

    def products(self) -> dict:
        """Nonzero products as ``{(i, j): {k: coeff}}`` with 1-based labels."""
        out = {}
        n = self.dim
        for i, j in cartesian(range(n), repeat=2):
            res = {k + 1: c for k, c in enumerate(self.gamma[i][j]) if c != 0}
            if res:
                out[(i + 1, j + 1)] = res
        return out

    def scaled(self, c) -> "AlgebraSpec":
        c = scalar(c)
        return AlgebraSpec(self.name, self.dim,
                           tuple(tuple(tuple(c * x for x in col) for col in row) for row in self.gamma))

    def basis(self) -> list:
        return [basis_vector(self.dim, i) for i in range(self.dim)]


def _freeze(g) -> tuple:
    return tuple(tuple(tuple(col) for col in row) for row in g)


class ZinbielViolation(NamedTuple):
    triple: tuple  # 1-based (i, j, k)
    residual: Vector


class IdealCheck(NamedTuple):
    ok: bool
    witness: tuple | None = None  # (description, product vector)

    def __bool__(self):
        return self.ok


class NotAntisymmetricError(ValueError):
    """The bracket passed to the Jacobi check is not antisymmetric."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"[e_{pair[0]}, e_{pair[1]}] != -[e_{pair[1]}, e_{pair[0]}]")


def _check_len(a: AlgebraSpec, *vs):
    for v in vs:
        if len(v) != a.dim:
            raise DimensionError(f"vector of length {len(v)} used in {a.dim}-dimensional algebra")


def product(a: AlgebraSpec, u: Sequence, v: Sequence) -> Vector:
    """Bilinear product ``u o v``."""
    u, v = vector(u), vector(v)
    _check_len(a, u, v)
    n = a.dim
    out = [ZERO] * n
    for i in range(n):
        if u[i] == 0:
            continue
        for j in range(n):
            c = u[i] * v[j]
            if c == 0:
                continue
            for k, g in enumerate(a.gamma[i][j]):
                if g:
                    out[k] += c * g
    return tuple(out)


def zinbiel_residual(a: AlgebraSpec, u, v, w) -> Vector:
    """``(u o v) o w - u o (v o w) - u o (w o v)``."""
    lhs = product(a, product(a, u, v), w)
    rhs = vadd(product(a, u, product(a, v, w)), product(a, u, product(a, w, v)))
    return vsub(lhs, rhs)


def check_zinbiel(a: AlgebraSpec) -> list:
    """All basis triples violating the Zinbiel identity.

    The residual is trilinear, so an empty list means ``a`` is Zinbiel.
    """
    e = a.basis()
    out = []
    for i, j, k in cartesian(range(a.dim), repeat=3):
        r = zinbiel_residual(a, e[i], e[j], e[k])
        if not is_zero(r):
            out.append(ZinbielViolation((i + 1, j + 1, k + 1), r))
    return out


def is_zinbiel(a: AlgebraSpec) -> bool:
    return not check_zinbiel(a)


def left_mult(a: AlgebraSpec, u: Sequence) -> Matrix:
    """Matrix of ``L_u : v -> u o v``."""
    u = vector(u)
    _check_len(a, u)
    return from_columns([product(a, u, e) for e in a.basis()])


def right_mult(a: AlgebraSpec, u: Sequence) -> Matrix:
    """Matrix of ``R_u : v -> v o u``."""
    u = vector(u)
    _check_len(a, u)
    return from_columns([product(a, e, u) for e in a.basis()])


def commutator(a: AlgebraSpec) -> AlgebraSpec:
    """The bracket algebra ``[u, v] = u o v - v o u``."""
    n = a.dim
    g = tuple(tuple(vsub(a.gamma[i][j], a.gamma[j][i]) for j in range(n)) for i in range(n))
    return AlgebraSpec(f"[{a.name}]", n, g)


def check_jacobi(a: AlgebraSpec) -> list:
    """Basis triples ``(i, j, k)`` (1-based) where the Jacobi sum is nonzero.

    Raises :class:`NotAntisymmetricError` before looking at Jacobi if the
    product is not antisymmetric on basis pairs.
    """
    n = a.dim
    for i, j in cartesian(range(n), repeat=2):
        if not is_zero(vadd(a.gamma[i][j], a.gamma[j][i])):
            raise NotAntisymmetricError((i + 1, j + 1))
    e = a.basis()
    bad = []
    for i, j, k in cartesian(range(n), repeat=3):
        s = vadd(vadd(product(a, product(a, e[i], e[j]), e[k]),
                      product(a, product(a, e[j], e[k]), e[i])),
                 product(a, product(a, e[k], e[i]), e[j]))
        if not is_zero(s):
            bad.append((i + 1, j + 1, k + 1))
    return bad


def annihilator_left(a: AlgebraSpec) -> Subspace:
    """``Ann_L(A) = {u : u o A = 0}``."""
    # u o e_j = sum_i u_i gamma[i][j][:]; one equation per (j, k).
    n = a.dim
    rows = [[a.gamma[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return nullspace(rows)


def annihilator_right(a: AlgebraSpec) -> Subspace:
    """``Ann_R(A) = {u : A o u = 0}``."""
    n = a.dim
    rows = [[a.gamma[j][i][k] for i in range(n)] for j in range(n) for k in range(n)]
    return nullspace(rows)


def is_two_sided_ideal(a: AlgebraSpec, s: Subspace) -> IdealCheck:
    """Closure of ``s`` under multiplication by ``A`` on both sides.

    On failure the witness names the first offending product.
    """
    if s.ambient_dim != a.dim:
        raise DimensionError("subspace and algebra dimensions differ")
    e = a.basis()
    for bi, b in enumerate(s.basis):
        for j, ej in enumerate(e):
            p = product(a, b, ej)
            if p not in s:
                return IdealCheck(False, (f"b_{bi + 1} o e_{j + 1}", p))
            p = product(a, ej, b)
            if p not in s:
                return IdealCheck(False, (f"e_{j + 1} o b_{bi + 1}", p))
    return IdealCheck(True)
