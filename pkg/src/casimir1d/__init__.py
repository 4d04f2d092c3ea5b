"""Casimir energies, forces and entropies of a partitioned one-dimensional box.

Natural units (hbar = c = k_B = 1) throughout.
"""
from .casimir import (
    CasimirReport,
    Cavity,
    planck_energy,
    planck_entropy,
    planck_force,
    planck_free_energy,
    report,
    rj_energy,
    rj_entropy,
    rj_force,
    zp_energy,
    zp_force,
)
from .errors import (
    Casimir1DError,
    ConsistencyViolation,
    DegenerateCutoff,
    IllConditionedLadder,
    InvalidParameter,
    NoConvergence,
)
from .modesum import BoundaryPair, CutoffFamily, CutoffSpec, RegularizedValue
from .spectra import PLANCK_ZP, RAYLEIGH_JEANS, ZERO_POINT, SpectrumModel, interpolated

__version__ = "0.1.0"
