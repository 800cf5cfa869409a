"""The full derivation algebra and the identities derivations satisfy."""
from zinbiel import (
    ad_matrix,
    check_inner_ideal,
    check_lie_derivation,
    check_mult_operator_identity,
    derivation_space,
    instantiate,
    is_derivation,
)
from zinbiel.linalg import pretty

a = instantiate("A_2^1")
der = derivation_space(a)
print("dim Der(A_2^1) =", der.dim)
for d in der.basis:
    print(pretty(d))
    print("  [d, L_u] = L_d(u):", check_mult_operator_identity(a, d),
          " Lie derivation:", check_lie_derivation(a, d))

# inner maps need not be derivations
a = instantiate("A_4^1")
chk = is_derivation(a, ad_matrix(a, (1, 0, 0, 0)))
print("ad_e1 is a derivation of A_4^1:", chk.ok, "first failing pair:", chk.pair)

# [d, ad_w] = ad_{d(w)} holds; inner derivations need not commute
print(check_inner_ideal(a))
