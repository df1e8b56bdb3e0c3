"""
Poset modules of the 0-Hecke algebra
====================================

A labeled poset P on [n] gives a right H_n(0)-module on its linear
extensions. We walk through a 5-element example.
"""

# %%
from heckeposet.hecke import Kind, characteristic, check_relations, poset_module, restrict
from heckeposet.posets import LabeledPoset, sigma_L, sigma_R, split

P = LabeledPoset.from_covers(5, [(5, 1), (1, 3), (1, 4), (2, 4)])
print(P)
print("strict covers (drawn bold):", P.strict_covers())
print("Sigma_R:", sorted(map(str, sigma_R(P))))
print("Sigma_L:", sorted(map(str, sigma_L(P))))

# %%
# The pibar action: -id on descents, a move along the weak order when the
# swap stays inside Sigma_R, zero otherwise.
M = poset_module(P)
for b in M.basis:
    moves = []
    for i in range(1, 5):
        mv = M.act(i, b)
        if mv.kind is Kind.NEG_SELF:
            moves.append(f"pibar_{i}: -self")
        elif mv.kind is Kind.SEND:
            moves.append(f"pibar_{i}: {mv.target}")
    print(b, "|", ", ".join(moves))
print("relations hold:", check_relations(M))
print("ch(M_P) =", characteristic(M))

# %%
# Adding one relation between an incomparable pair splits the extensions.
low, high = split(P, 1, 2)
print("2 before 1:", sorted(map(str, sigma_R(low))))
print("1 before 2:", sorted(map(str, sigma_R(high))))

# %%
# Restriction pairs a lower subposet with its complement, both standardized.
for q, rest in restrict(P, 3):
    print("lower part", q.covers(), "| upper part", rest.covers())

# %%
# Not every poset module is an interval module: this one has dimension 8.
R = LabeledPoset.from_covers(5, [(1, 2), (1, 5), (3, 4), (3, 2), (5, 4)])
print("dim =", poset_module(R).dimension, " ch =", characteristic(poset_module(R)))
