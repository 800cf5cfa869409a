"""Inner derivations, the derivation algebra, and derivation identities.

Convention: ``ad_w(u) = u o w - w o u``. Matrices keep the columns-are-images
layout, so entry ``(j, i)`` is the ``e_j`` coefficient of ``ad_w(e_i)``,
which is ``d_{ij} = sum_t a_t (gamma_{it}^j - gamma_{ti}^j)`` for
``w = sum_t a_t e_t``. The row-indexed ``d_{ij}`` is therefore the transpose
of the displayed matrix.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import NamedTuple, Sequence

from .algebra import AlgebraSpec, commutator, left_mult, product, right_mult
from .linalg import (
    ZERO,
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    bracket,
    column,
    is_zero,
    linear_combination,
    madd,
    matvec,
    mscale,
    msub,
    nullspace,
    scalar,
    shape,
    span,
    unvectorize,
    vadd,
    vectorize,
    vector,
    vsub,
    zero_matrix,
)


# -- linear forms -------------------------------------------------------------

@dataclass(frozen=True)
class LinearForm:
    """``sum_t coeffs[t] * a_{t+1}`` over the coordinates of a generic ``w``."""

    coeffs: tuple

    @classmethod
    def zero(cls, n: int) -> "LinearForm":
        return cls((ZERO,) * n)

    @classmethod
    def coordinate(cls, n: int, t: int, c=1) -> "LinearForm":
        """``c * a_{t+1}``."""
        return cls(tuple(scalar(c) if s == t else ZERO for s in range(n)))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(vadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(vsub(self.coeffs, other.coeffs))

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-c for c in self.coeffs))

    def __mul__(self, c) -> "LinearForm":
        c = scalar(c)
        return LinearForm(tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, w: Sequence) -> Fraction:
        w = vector(w)
        if len(w) != len(self.coeffs):
            raise DimensionError("form and point have different lengths")
        return sum((c * x for c, x in zip(self.coeffs, w)), ZERO)

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def __str__(self) -> str:
        return render_form(self)


def _coef_text(c: Fraction) -> str:
    c = abs(c)
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def render_form(f: LinearForm) -> str:
    """Render as ``"a_2 - a_3"``, ``"-2a_1"``, ``"(1/2)a_1"``; zero is ``"0"``."""
    parts = []
    for t, c in enumerate(f.coeffs):
        if c == 0:
            continue
        term = f"{_coef_text(c)}a_{t + 1}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"\s*([+-])?\s*(?:([0-9]+)|\(([0-9]+)/([0-9]+)\))?\s*a_([0-9]+)\s*")


def parse_form(text: str, n: int) -> LinearForm:
    """Inverse of :func:`render_form` (tolerant of spacing and term order)."""
    s = text.strip()
    if not s:
        raise ValueError("empty linear form")
    if s == "0":
        return LinearForm.zero(n)
    coeffs = [ZERO] * n
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise ValueError(f"cannot parse linear form {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2):
            c = Fraction(int(m.group(2)))
        elif m.group(3):
            c = Fraction(int(m.group(3)), int(m.group(4)))
        else:
            c = Fraction(1)
        t = int(m.group(5))
        if not 1 <= t <= n:
            raise ValueError(f"coordinate a_{t} out of range 1..{n}")
        coeffs[t - 1] += sign * c
        pos = m.end()
        first = False
    return LinearForm(tuple(coeffs))


@dataclass(frozen=True)
class SymbolicAdMatrix:
    """``ad_w`` for a generic ``w``: an ``n x n`` grid of :class:`LinearForm`."""

    entries: tuple

    @property
    def dim(self) -> int:
        return len(self.entries)

    def evaluate(self, w: Sequence) -> Matrix:
        return tuple(tuple(f(w) for f in row) for row in self.entries)

    def rows(self) -> list:
        """Rendered entries, one list of strings per row."""
        return [[render_form(f) for f in row] for row in self.entries]

    def render(self, sep: str = "  ") -> str:
        return "\n".join(sep.join(r) for r in self.rows())

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "SymbolicAdMatrix":
        n = len(rows)
        return cls(tuple(tuple(parse_form(x, n) for x in r) for r in rows))

    @classmethod
    def from_generators(cls, gens: Sequence[Matrix]) -> "SymbolicAdMatrix":
        """``sum_t a_t * gens[t]`` as a matrix of forms."""
        n = len(gens)
        return cls(tuple(tuple(LinearForm(tuple(g[r][c] for g in gens)) for c in range(n))
                         for r in range(n)))


# -- inner derivations --------------------------------------------------------

def ad_matrix(a: AlgebraSpec, w: Sequence) -> Matrix:
    """Matrix of ``ad_w : u -> u o w - w o u``, i.e. ``R_w - L_w``."""
    w = vector(w)
    if len(w) != a.dim:
        raise DimensionError(f"w has length {len(w)}, algebra has dimension {a.dim}")
    return msub(right_mult(a, w), left_mult(a, w))


def ad_generators(a: AlgebraSpec) -> list:
    """``[ad_{e_1}, ..., ad_{e_n}]``; ``ad_w = sum_t w_t * ad_{e_t}``."""
    return [ad_matrix(a, basis_vector(a.dim, t)) for t in range(a.dim)]


def symbolic_ad(a: AlgebraSpec) -> SymbolicAdMatrix:
    """Generic inner derivation straight from the structure constants."""
    n = a.dim
    g = a.gamma
    entries = tuple(
        tuple(LinearForm(tuple(g[i][t][j] - g[t][i][j] for t in range(n))) for i in range(n))
        for j in range(n)
    )
    return SymbolicAdMatrix(entries)


@dataclass(frozen=True)
class DerivationSpace:
    """A space of operators on an ``n``-dimensional algebra.

    ``basis`` holds matrices whose row-major vectorizations form the
    canonical RREF basis of the space.
    """

    n: int
    basis: tuple
    kind: str  # "inner" or "full"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def subspace(self) -> Subspace:
        return Subspace(self.n * self.n, tuple(vectorize(m) for m in self.basis))

    def __contains__(self, m: Matrix) -> bool:
        return vectorize(m) in self.subspace()


def _space_from(subspace: Subspace, n: int, kind: str) -> DerivationSpace:
    return DerivationSpace(n, tuple(unvectorize(v, n) for v in subspace.basis), kind)


def inner_derivation_space(a: AlgebraSpec) -> DerivationSpace:
    """``Inn(A) = span{ad_w}`` as the span of the vectorized generators."""
    n = a.dim
    return _space_from(span([vectorize(b) for b in ad_generators(a)], n * n), n, "inner")


def ad_kernel(a: AlgebraSpec) -> Subspace:
    """``{w : ad_w = 0}``; its codimension is ``dim Inn(A)``."""
    gens = ad_generators(a)
    n = a.dim
    # column t of the system is vec(ad_{e_t})
    rows = [[vectorize(b)[p] for b in gens] for p in range(n * n)]
    return nullspace(rows)


def leibniz_system(a: AlgebraSpec) -> list:
    """The ``n^3 x n^2`` constraint matrix whose kernel is ``Der(A)``.

    Unknowns are the entries of ``d`` in row-major order. Row ``(i, j, k)``
    is the ``e_k`` component of ``d(e_i o e_j) - d(e_i) o e_j - e_i o d(e_j)``.
    """
    n = a.dim
    g = a.gamma
    rows = []
    for i, j, k in cartesian(range(n), repeat=3):
        row = [ZERO] * (n * n)
        # d(e_i o e_j)_k = sum_m gamma_ij^m d[k][m]
        for m in range(n):
            row[k * n + m] += g[i][j][m]
        # (d(e_i) o e_j)_k = sum_m d[m][i] gamma_mj^k
        for m in range(n):
            row[m * n + i] -= g[m][j][k]
        # (e_i o d(e_j))_k = sum_m d[m][j] gamma_im^k
        for m in range(n):
            row[m * n + j] -= g[i][m][k]
        rows.append(row)
    return rows


def derivation_space(a: AlgebraSpec) -> DerivationSpace:
    """``Der(A)``, solved as one exact nullspace."""
    return _space_from(nullspace(leibniz_system(a)), a.dim, "full")


class DerivationCheck(NamedTuple):
    ok: bool
    pair: tuple | None = None  # 1-based (i, j) of the first violation
    residual: Vector | None = None

    def __bool__(self):
        return self.ok


class NotADerivationError(ValueError):
    """A check that presupposes ``d`` in ``Der(A)`` was handed something else."""


def _check_square(a: AlgebraSpec, m: Matrix):
    if shape(m) != (a.dim, a.dim):
        raise DimensionError(f"operator of shape {shape(m)} on {a.dim}-dimensional algebra")


def is_derivation(a: AlgebraSpec, m: Matrix) -> DerivationCheck:
    """Leibniz rule on all basis pairs; reports the first failing pair."""
    _check_square(a, m)
    e = a.basis()
    for i, j in cartesian(range(a.dim), repeat=2):
        lhs = matvec(m, product(a, e[i], e[j]))
        rhs = vadd(product(a, column(m, i), e[j]), product(a, e[i], column(m, j)))
        r = vsub(lhs, rhs)
        if not is_zero(r):
            return DerivationCheck(False, (i + 1, j + 1), r)
    return DerivationCheck(True)


def _require_derivation(a, d):
    chk = is_derivation(a, d)
    if not chk:
        raise NotADerivationError(f"operator violates the Leibniz rule at pair {chk.pair}")


def check_mult_operator_identity(a: AlgebraSpec, d: Matrix) -> bool:
    """``[d, L_u] == L_{d(u)}`` and ``[d, R_u] == R_{d(u)}`` for basis ``u``."""
    _require_derivation(a, d)
    for u in a.basis():
        du = matvec(d, u)
        if bracket(d, left_mult(a, u)) != left_mult(a, du):
            return False
        if bracket(d, right_mult(a, u)) != right_mult(a, du):
            return False
    return True


def check_lie_derivation(a: AlgebraSpec, d: Matrix) -> bool:
    """``d`` is a derivation of the bracket algebra ``[u, v] = u o v - v o u``."""
    _require_derivation(a, d)
    return bool(is_derivation(commutator(a), d))


@dataclass(frozen=True)
class InnerIdealReport:
    identity_holds: bool          # d B_t - B_t d == ad_{d e_t} for all d, t
    first_failure: tuple | None   # (derivation index, 1-based t)
    inner_closed: bool            # [B_s, B_t] in Inn(A) for all s, t
    inner_abelian: bool           # [B_s, B_t] == 0 for all s, t
    inner_in_der: bool            # every generator is a derivation


def check_inner_ideal(a: AlgebraSpec) -> InnerIdealReport:
    gens = ad_generators(a)
    der = derivation_space(a)
    inn = inner_derivation_space(a)
    failure = None
    for di, d in enumerate(der.basis):
        for t, b in enumerate(gens):
            if bracket(d, b) != ad_matrix(a, column(d, t)):
                failure = (di, t + 1)
                break
        if failure:
            break
    brackets = [bracket(gens[s], gens[t]) for s in range(a.dim) for t in range(s + 1, a.dim)]
    return InnerIdealReport(
        identity_holds=failure is None,
        first_failure=failure,
        inner_closed=all(c in inn for c in brackets),
        inner_abelian=all(is_zero(c) for c in brackets),
        inner_in_der=all(is_derivation(a, b) for b in gens),
    )


def random_scalar(rng: random.Random, bound: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_vector(rng: random.Random, n: int) -> Vector:
    return tuple(random_scalar(rng) for _ in range(n))


def ad_linearity_check(a: AlgebraSpec, trials: int = 25, seed: int = 0, terms: int = 3) -> bool:
    """Randomized exact check that ``w -> ad_w`` is linear with image in ``Inn(A)``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    inn = inner_derivation_space(a)
    for _ in range(trials):
        k = rng.randint(1, terms)
        alphas = [random_scalar(rng) for _ in range(k)]
        ws = [random_vector(rng, a.dim) for _ in range(k)]
        if not ad_combination_holds(a, alphas, ws, inn):
            return False
    return True


def ad_combination_holds(a: AlgebraSpec, alphas, ws, inn: DerivationSpace | None = None) -> bool:
    """``ad_{sum alpha_i w_i} == sum alpha_i ad_{w_i}`` and lies in ``Inn(A)``."""
    inn = inn or inner_derivation_space(a)
    lhs = ad_matrix(a, linear_combination(alphas, [vector(w) for w in ws]))
    rhs = zero_matrix(a.dim)
    for c, w in zip(alphas, ws):
        rhs = madd(rhs, mscale(c, ad_matrix(a, w)))
    return lhs == rhs and lhs in inn


@dataclass(frozen=True)
class MultOperatorDiagnostic:
    """Which multiplication operators happen to be derivations.

    ``left_derivations[t]`` says whether ``L_{e_{t+1}}`` is a derivation;
    likewise for ``right_derivations``. ``*_closed`` records whether the
    span of the operators is closed under the operator commutator.
    """

    left_derivations: tuple
    right_derivations: tuple
    left_closed: bool
    right_closed: bool

    @property
    def left_in_der(self) -> bool:
        return all(self.left_derivations)

    @property
    def right_in_der(self) -> bool:
        return all(self.right_derivations)


def mult_operator_diagnostic(a: AlgebraSpec) -> MultOperatorDiagnostic:
    n = a.dim
    ls = [left_mult(a, e) for e in a.basis()]
    rs = [right_mult(a, e) for e in a.basis()]

    def closed(ops):
        sp = span([vectorize(o) for o in ops], n * n)
        return all(vectorize(bracket(x, y)) in sp for x in ops for y in ops)

    return MultOperatorDiagnostic(
        tuple(bool(is_derivation(a, m)) for m in ls),
        tuple(bool(is_derivation(a, m)) for m in rs),
        closed(ls),
        closed(rs),
    )
