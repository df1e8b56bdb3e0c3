"""
Weak Bruhat intervals, regular posets and the diagram construction
=================================================================
"""

# %%
from heckeposet.compositions import Composition
from heckeposet.hecke import characteristic, functor_F, interval_module
from heckeposet.permutations import Permutation, f_map, interval
from heckeposet.posets import is_regular, poset_from_interval, sigma_R
from heckeposet.tableaux import build_D_steps, canonical_poset

sigma, rho = Permutation.parse("25134"), Permutation.parse("52143")
I = interval("right", sigma, rho)
print("[25134, 52143]_R =", [str(g) for g in I.sorted()])

# %%
# Regular posets correspond to right intervals.
Q = poset_from_interval(sigma, rho)
print("poset:", Q.covers(), " regular:", is_regular(Q), " round trip:", sigma_R(Q) == I.elements)

# %%
# f(g) = w0 g^-1 carries a left interval onto a right one, matching characters.
lo, hi = Permutation.parse("1324"), Permutation.parse("3421")
left = interval("left", lo, hi).elements
a, b = functor_F(lo, hi)
print("F endpoints:", a, b, " images agree:", {f_map(g) for g in left} == interval("right", a, b).elements)
print("ch left  =", characteristic(interval_module("left", "plain", lo, hi)))
print("ch right =", characteristic(interval_module("right", "bar", a, b)))

# %%
# The diagram D(alpha; rho) has Sigma_R(P_D) equal to f([w0(alpha), rho]_L).
steps = build_D_steps(Composition((1, 1, 2, 2, 1, 1, 1)), Permutation.parse("841539762"))
print("rows:   ", [sorted(r) for r in steps.rows])
print("columns:", [sorted(c) for c in steps.columns])
print("cells:  ", steps.diagram.sorted_cells())
print("P_D covers:", canonical_poset(steps.diagram).covers())
