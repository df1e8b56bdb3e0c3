"""
Psi expansions from starred P-partitions
========================================

The coefficient of Psi_b / z_b in K_P is a signed count of enriched
P-partitions with exactly one ambiguous element per level.
"""

# %%
from heckeposet.compositions import Composition
from heckeposet.hecke import characteristic_of_poset_module
from heckeposet.ppart import enumerate_starred, kp_in_psi_via_starred
from heckeposet.qsym import psi_normalized
from heckeposet.tableaux import poset_dual_immaculate

P = poset_dual_immaculate(Composition((2, 1, 2)))
print("covers:", P.covers())
for f in enumerate_starred(P, (4, 1)):
    print("  ", f, " sign", f.sign)

# %%
# The same numbers from solving the triangular Psi system exactly.
starred = kp_in_psi_via_starred(P)
solved = psi_normalized(characteristic_of_poset_module(P))
for beta in sorted(starred):
    print(f"  {beta}: starred {starred[beta]:>3}   linear solve {solved[beta]}")
print("agree:", starred == solved)
