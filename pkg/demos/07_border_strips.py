"""
Border-strip tableaux and signed Psi coefficients
=================================================
"""

# %%
from heckeposet.borderstrips import d_coefficient, enumerate_bst, expand_in_psi, skew_oracle, uniform_sign_check

for flavor in ("DIF", "ESF"):
    tabs = enumerate_bst(flavor, (2, 1, 2), (4, 1))
    print(flavor, [str(t) for t in tabs], "d =", d_coefficient(flavor, (2, 1, 2), (4, 1)))

# %%
print("DIF vector of (2,1,2):")
for beta, d in sorted(expand_in_psi("DIF", (2, 1, 2)).items()):
    print(f"  {beta}: {d}")

# %%
# Tableaux of type (s, ..., s) all carry the same sign.
print("(5,2,1,8), s = 4:", uniform_sign_check((5, 2, 1, 8), 4))

# %%
# Skew Schur functions: the classical rule gives a symmetric vector.
poset, chi = skew_oracle((3, 3, 2), (2,))
print("skew poset covers:", poset.covers())
print("chi:", {str(b): c for b, c in sorted(chi.items())})
