"""Full property battery for one algebra.

Results split into *required* checks, which hold for every Zinbiel algebra
and therefore count as failures, and *diagnostics*, which merely record
what the algebra does (multiplication operators being derivations, inner
derivations commuting, and so on).
"""
from __future__ import annotations

from .algebra import (
    AlgebraSpec,
    NotAntisymmetricError,
    annihilator_left,
    annihilator_right,
    check_jacobi,
    check_zinbiel,
    commutator,
    is_two_sided_ideal,
)
from .derivations import (
    ad_generators,
    ad_linearity_check,
    check_inner_ideal,
    check_lie_derivation,
    check_mult_operator_identity,
    derivation_space,
    inner_derivation_space,
    is_derivation,
    mult_operator_diagnostic,
)

REQUIRED = ("zinbiel", "leibniz", "mult_operator_identity", "lie_derivation",
            "inner_bracket_identity", "ad_linearity")


def annihilator_report(a: AlgebraSpec) -> dict:
    out = {}
    for side, fn in (("left", annihilator_left), ("right", annihilator_right)):
        s = fn(a)
        chk = is_two_sided_ideal(a, s)
        out[side] = {
            "subspace": s,
            "ideal": chk.ok,
            "witness": chk.witness,
        }
    return out


def property_battery(a: AlgebraSpec, seed: int = 0, trials: int = 25) -> dict:
    der = derivation_space(a)
    inner = check_inner_ideal(a)
    gens = ad_generators(a)
    try:
        jacobi = check_jacobi(commutator(a))
    except NotAntisymmetricError as exc:  # cannot happen for a commutator; kept for safety
        jacobi = str(exc)
    mult = mult_operator_diagnostic(a)
    return {
        "zinbiel": not check_zinbiel(a),
        "der_dim": der.dim,
        "inner_dim": inner_derivation_space(a).dim,
        "leibniz": all(is_derivation(a, d) for d in der.basis),
        "mult_operator_identity": all(check_mult_operator_identity(a, d) for d in der.basis),
        "lie_derivation": all(check_lie_derivation(a, d) for d in der.basis),
        "inner_bracket_identity": inner.identity_holds,
        "ad_linearity": ad_linearity_check(a, trials=trials, seed=seed),
        # diagnostics
        "ad_generators_are_derivations": [bool(is_derivation(a, b)) for b in gens],
        "ad_first_violation": [is_derivation(a, b).pair for b in gens],
        "inner_closed_under_bracket": inner.inner_closed,
        "inner_abelian": inner.inner_abelian,
        "jacobi_violations": jacobi,
        "left_mult_are_derivations": list(mult.left_derivations),
        "right_mult_are_derivations": list(mult.right_derivations),
        "left_mult_span_closed": mult.left_closed,
        "right_mult_span_closed": mult.right_closed,
    }


def battery_passed(results: dict) -> bool:
    return all(results[k] for k in REQUIRED)
