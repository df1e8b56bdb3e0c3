"""
Dual immaculate, extended Schur and quasisymmetric Schur posets
==============================================================
"""

# %%
from collections import Counter

from heckeposet.compositions import Composition, comp_of
from heckeposet.hecke import characteristic_of_poset_module
from heckeposet.qsym import QsymElement
from heckeposet.tableaux import (
    classes,
    dif_diagram,
    esf_diagram,
    poset_dual_immaculate,
    poset_quasischur,
    quasischur_data,
    read,
    read_tau,
    row_descents,
    set_extremes,
    sink_from,
    sit_enumerate,
    sit_extremes,
)

alpha = Composition((3, 2, 4))
src, snk = sit_extremes(alpha)
print("SIT source / sink:", src, "|", snk, " reads", read(src), read(snk))
print("SET sink read:", read(set_extremes(alpha)[1]))
print("DIF diagram:", dif_diagram(alpha).sorted_cells())
print("ESF diagram:", esf_diagram(alpha).sorted_cells())

# %%
# The poset character agrees with the descent generating function of SITs.
small = Composition((2, 1, 2))
via_tableaux = QsymElement("F", Counter(comp_of(row_descents(t), 5) for t in sit_enumerate(small)))
print("DIF character matches:", characteristic_of_poset_module(poset_dual_immaculate(small)) == via_tableaux)

# %%
# SRCT classes: each has one source and one sink; the sink comes from a direct algorithm.
shape = Composition((2, 3, 2, 4))
for cls in classes(shape):
    sink = sink_from(cls.source)
    base, top = quasischur_data(shape, cls)
    print(f"source {cls.source}  ->  sink {sink}")
    print(f"   read(sink) = {read_tau(sink, cls.source)}, base {base}, size {len(cls.members)}")
    print("   poset covers:", poset_quasischur(shape, cls).covers())
