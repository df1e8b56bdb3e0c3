"""
Twisting poset modules by the three involutions
===============================================

phi, theta and chi twists of M_P are again built from posets; numpy
matrices let us check the intertwiners directly.
"""

# %%
from heckeposet.hecke import characteristic, characteristic_of_poset_module, twist
from heckeposet.posets import LabeledPoset
from heckeposet.qsym import invol_psi, invol_rho

P = LabeledPoset.from_covers(5, [(5, 1), (1, 3), (1, 4), (2, 4)])
K = characteristic_of_poset_module(P)
print("K_P =", K)

for which, expected in (("phi", invol_rho(K)), ("theta", invol_psi(K)), ("chi", K)):
    data = twist(P, which)
    ch = characteristic(data.target)
    print(f"{which:>5}: intertwiner {data.is_intertwiner()}, character matches {ch == expected}")
    print("       twisted pibar_1 =", data.twisted[0].tolist())
