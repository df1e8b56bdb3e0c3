"""Exact 0-Hecke poset modules and quasisymmetric power sum expansions."""

from heckeposet.compositions import Composition, Partition
from heckeposet.permutations import Permutation, WeakInterval
from heckeposet.posets import LabeledPoset
from heckeposet.qsym import QsymElement

__all__ = [
    "Composition",
    "Partition",
    "Permutation",
    "WeakInterval",
    "LabeledPoset",
    "QsymElement",
]

__version__ = "0.1.0"
