"""Building an algebra from structure constants and testing the Zinbiel identity."""
from fractions import Fraction

from zinbiel import AlgebraSpec, check_zinbiel, commutator, left_mult, product, right_mult
from zinbiel.linalg import pretty

# e_1 o e_1 = e_2, e_1 o e_2 = 1/2 e_3, e_2 o e_1 = e_3   (1-based labels)
a = AlgebraSpec.from_products("A", 3, {
    (1, 1): {2: 1},
    (1, 2): {3: Fraction(1, 2)},
    (2, 1): {3: 1},
})
e1, e2, e3 = a.basis()

print("e1 o e2 =", pretty(product(a, e1, e2)))
print("L_{e1} =")
print(pretty(left_mult(a, e1)))    # columns are images of e_1, e_2, e_3
print("R_{e1} =")
print(pretty(right_mult(a, e1)))

# identity checked on all 27 basis triples; empty means Zinbiel
print("violations:", check_zinbiel(a))

# a one-dimensional idempotent is the simplest non-example
bad = AlgebraSpec.from_products("idem", 1, {(1, 1): {1: 1}})
for v in check_zinbiel(bad):
    print("violation at", v.triple, "residual", pretty(v.residual))

# Lie-ization
for (i, j), res in commutator(a).products().items():
    print(f"[e{i}, e{j}] =", " + ".join(f"{c} e{k}" for k, c in res.items()))
