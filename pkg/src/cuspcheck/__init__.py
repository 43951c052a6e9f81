"""Exact invariants of plane curve cusps and conjecture checks for rational
cuspidal projective plane curves."""

from .branchdata import (
    BranchType,
    MultiplicityData,
    Semigroup,
    branch_from_newton_pairs,
    multiplicity_data,
    one_pair,
    semigroup_from_generators,
    semigroup_of,
)
from .curvecheck import CurveSpec, conjectureA_check, dimensions_report, genus_check
from .numerics import IntPoly, Rat

__all__ = [
    "BranchType",
    "CurveSpec",
    "IntPoly",
    "MultiplicityData",
    "Rat",
    "Semigroup",
    "branch_from_newton_pairs",
    "conjectureA_check",
    "dimensions_report",
    "genus_check",
    "multiplicity_data",
    "one_pair",
    "semigroup_from_generators",
    "semigroup_of",
]
