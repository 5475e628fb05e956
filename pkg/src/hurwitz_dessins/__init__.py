"""Weak Hurwitz numbers for branch data (2,...,2), (2h+1,1,2,...,2), pi over the sphere.

Closed forms, the explicit dessins behind them, and a permutation-triple oracle.
"""

from .branch_data import (
    BranchDataError,
    BranchDatum,
    FamilyDatum,
    Partition,
    expand,
    family_data,
    make_family_datum,
    repeated_partitions,
    riemann_hurwitz_check,
)
from .closed_form import (
    CaseLabel,
    OutOfFamilyError,
    classify_g0h2,
    floor_half_sum,
    nu,
    nu_g1_h3,
    nu_g2_h4,
    symmetric_family_count_S,
)
from .octagon import octagon_pairings
from .realizations import RealizationDescriptor, realizations_g0h2, realizations_g1, realizations_g2

__version__ = "0.1.0"
