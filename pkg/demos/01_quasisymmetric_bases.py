"""
Quasisymmetric bases and the type-1 power sums
==============================================

Exact arithmetic in the monomial, fundamental and Psi bases of QSym.
"""

# %%
# Psi_(2,3,1) expands over the coarsenings of (2,3,1) with weights z / pi.
from heckeposet.compositions import Composition, coarsenings, pi_pair, z_stat
from heckeposet.qsym import (
    QsymElement,
    convert,
    coproduct,
    expand_in_psi,
    power_sum_p,
    product,
    psi_in_monomial,
)

alpha = Composition((2, 3, 1))
print("z =", z_stat(alpha))
for beta in coarsenings(alpha):
    print(f"  pi({alpha}, {beta}) = {pi_pair(alpha, beta)}")
print("Psi_(2,3,1) =", psi_in_monomial(alpha))

# %%
# Basis changes go through M; equality compares across bases.
F2 = QsymElement.basis_element("F", (2,))
print("F_(2) in M:  ", convert(F2, "M"))
print("F_(2) in Psi:", expand_in_psi(F2))

# %%
# A power sum p_lambda is the sum of Psi_a over the rearrangements a of lambda.
print("p_(2,1) =", expand_in_psi(power_sum_p((2, 1))))

# %%
# Quasi-shuffle product and deconcatenation coproduct on the monomial basis.
M1 = QsymElement.basis_element("M", (1,))
print("M_(1) M_(1) =", product(M1, M1))
for (left, right), c in sorted(coproduct(QsymElement.basis_element("M", (1, 2))).items()):
    print(f"  {c} * M_{left} (x) M_{right}")
