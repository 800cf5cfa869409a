"""Inner derivations ad_w(u) = u o w - w o u, symbolic and as a subspace."""
from zinbiel import ad_generators, ad_matrix, inner_derivation_space, instantiate, symbolic_ad
from zinbiel.linalg import pretty

a = instantiate("A_4^1")

# generic w = a_1 e_1 + ... + a_4 e_4
print(symbolic_ad(a).render())

# ad_w at a concrete point agrees with the symbolic matrix
w = (1, 2, 3, 4)
print(ad_matrix(a, w) == symbolic_ad(a).evaluate(w))

# Inn(A) is spanned by ad_{e_1}, ..., ad_{e_n}
for t, b in enumerate(ad_generators(a), 1):
    print(f"ad_e{t} =")
    print(pretty(b))
inn = inner_derivation_space(a)
print("dim Inn(A_4^1) =", inn.dim)

# parameter families: the dimension drops at alpha = 0
for alpha in (0, 2):
    print("A_4^9, alpha =", alpha, "->", inner_derivation_space(instantiate("A_4^9", {"alpha": alpha})).dim)
