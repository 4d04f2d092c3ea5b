"""Casimir energies, free energies, forces and entropies of a partitioned box.

A box of length ``L`` is split by a partition at ``x``.  Every ``delta``
quantity is the value for the partition at ``x`` minus the value for the
partition at the centre, ``f(x) + f(L-x) - 2 f(L/2)``.  Forces are the
net push on the partition, ``X(x) - X(L-x)``; negative values point toward
the wall at the origin.

Zero-point pieces use closed forms; thermal pieces are convergent mode
sums from :mod:`casimir1d.modesum`.  Natural units throughout.
"""
from __future__ import annotations

import contextlib
import functools
import math
from dataclasses import dataclass

from . import spectra
from .errors import ConsistencyViolation, InvalidParameter
from .modesum import BoundaryPair, Kernel, convergent_thermal_sum

__all__ = [
    "Cavity",
    "CasimirReport",
    "zp_coefficient",
    "zp_energy",
    "zp_force",
    "rj_energy",
    "rj_force",
    "rj_entropy",
    "planck_energy",
    "planck_free_energy",
    "planck_force",
    "planck_entropy",
    "thermal_difference",
    "report",
    "perturbed_zero_point",
]

MIN_WALL_FRACTION = 1e-6
FIRST_LAW_ATOL = 1e-8

_zp_scale = 1.0


@contextlib.contextmanager
def perturbed_zero_point(factor: float):
    """Temporarily scale the zero-point coefficient (fault-injection hook)."""
    global _zp_scale
    old = _zp_scale
    _zp_scale = float(factor)
    try:
        yield
    finally:
        _zp_scale = old


@dataclass(frozen=True)
class Cavity:
    length: float
    partition: float

    def __post_init__(self):
        L, x = self.length, self.partition
        if not (L > 0 and math.isfinite(L)):
            raise InvalidParameter(f"box length must be positive, got {L}")
        if not 0 < x < L:
            raise InvalidParameter(f"partition must lie strictly inside (0, {L}), got {x}")
        if min(x, L - x) < MIN_WALL_FRACTION * L:
            raise InvalidParameter(f"partition at {x} is closer than {MIN_WALL_FRACTION}*L to a wall")

    @property
    def left(self) -> float:
        return self.partition

    @property
    def right(self) -> float:
        return self.length - self.partition

    @property
    def centre(self) -> float:
        return 0.5 * self.length

    def moved(self, partition: float) -> "Cavity":
        return Cavity(self.length, partition)


@dataclass(frozen=True)
class CasimirReport:
    delta_u: float
    delta_f: float
    delta_x: float
    delta_s: float
    cavity: Cavity
    temperature: float
    bc: BoundaryPair
    spectrum: spectra.SpectrumModel = spectra.PLANCK_ZP

    @property
    def first_law_residual(self) -> float:
        return abs(self.delta_f - (self.delta_u - self.temperature * self.delta_s))


def zp_coefficient(bc: BoundaryPair) -> float:
    """``1/24 - alpha/8 + alpha^2/16``: 1/24 for like, -1/48 for unlike pairs."""
    a = bc.alpha
    # (2 - 6a + 3a^2)/48 keeps unlike == -like/2 exact in floating point
    return (2 - 6 * a + 3 * a * a) / 48 * _zp_scale


def zp_energy(cav: Cavity, bc: BoundaryPair) -> float:
    """Zero-temperature Casimir energy.

    Like pairs: ``-(pi/24)(1/x + 1/(L-x) - 4/L)`` (negative); unlike pairs
    carry ``-1/2`` times that (positive).
    """
    x, r, L = cav.left, cav.right, cav.length
    return -math.pi * zp_coefficient(bc) * (1 / x + 1 / r - 4 / L)


def zp_force(cav: Cavity, bc: BoundaryPair) -> float:
    """``-d(zp_energy)/dx``: attractive for like, repulsive for unlike pairs."""
    x, r = cav.left, cav.right
    return -math.pi * zp_coefficient(bc) * (1 / x**2 - 1 / r**2)


def rj_energy(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """Equipartition produces no Casimir energy for either boundary pair."""
    if not temperature > 0:
        raise InvalidParameter(f"temperature must be positive, got {temperature}")
    return 0.0


def rj_force(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """High-temperature force ``(T/2)(alpha - 1)(1/x - 1/(L-x))``; zero for unlike pairs."""
    if not temperature > 0:
        raise InvalidParameter(f"temperature must be positive, got {temperature}")
    if bc is BoundaryPair.UNLIKE:
        return 0.0
    return -0.5 * temperature * (1 / cav.left - 1 / cav.right)


def rj_entropy(cav: Cavity, bc: BoundaryPair) -> float:
    """Temperature-independent high-temperature Casimir entropy.

    For like pairs this is the integral of ``rj_force/T`` from the centre,
    ``(1/2) ln(L^2 / (4 x (L-x)))``, which is also the ``T -> inf`` limit of
    :func:`planck_entropy`.  Unlike pairs have no equipartition force and no
    Casimir entropy.
    """
    if bc is BoundaryPair.UNLIKE:
        return 0.0
    L = cav.length
    return 0.5 * math.log(L * L / (4.0 * cav.left * cav.right))


@functools.lru_cache(maxsize=4096)
def _cached_sum(length, bc, temperature, kernel, model):
    return convergent_thermal_sum(length, bc, temperature, kernel, model)


def thermal_difference(cav: Cavity, bc: BoundaryPair, temperature: float, kernel,
                       model: spectra.SpectrumModel = spectra.PLANCK_ZP) -> float:
    """Partition-position change of a convergent thermal mode sum.

    Force kernels give ``S(x) - S(L-x)``; all others give
    ``S(x) + S(L-x) - 2 S(L/2)``.  Zero at ``T = 0``.
    """
    kernel = Kernel(kernel)
    if temperature == 0:
        return 0.0
    if not temperature > 0:
        raise InvalidParameter(f"temperature must be non-negative, got {temperature}")
    t = float(temperature)
    left = _cached_sum(cav.left, bc, t, kernel, model)
    right = _cached_sum(cav.right, bc, t, kernel, model)
    if kernel is Kernel.THERMAL_FORCE:
        return left - right
    return left + right - 2.0 * _cached_sum(cav.centre, bc, t, kernel, model)


def planck_energy(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """Casimir energy for the Planck spectrum with zero-point energy."""
    return zp_energy(cav, bc) + thermal_difference(cav, bc, temperature, Kernel.THERMAL_ENERGY)


def planck_free_energy(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """Helmholtz free-energy change; its zero-point part equals :func:`zp_energy`."""
    return zp_energy(cav, bc) + thermal_difference(cav, bc, temperature, Kernel.THERMAL_FREE_ENERGY)


def planck_force(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """Net force on the partition, summed mode by mode."""
    return zp_force(cav, bc) + thermal_difference(cav, bc, temperature, Kernel.THERMAL_FORCE)


def planck_entropy(cav: Cavity, bc: BoundaryPair, temperature: float) -> float:
    """Casimir entropy (units of ``k_B``); vanishes at ``T = 0``."""
    return thermal_difference(cav, bc, temperature, Kernel.ENTROPY)


def report(cav: Cavity, bc: BoundaryPair, temperature: float) -> CasimirReport:
    """All four Planck observables at one configuration.

    Raises
    ------
    ConsistencyViolation
        If ``|dF - (dU - T dS)|`` exceeds ``1e-8``.
    """
    rep = CasimirReport(
        delta_u=planck_energy(cav, bc, temperature),
        delta_f=planck_free_energy(cav, bc, temperature),
        delta_x=planck_force(cav, bc, temperature),
        delta_s=planck_entropy(cav, bc, temperature),
        cavity=cav,
        temperature=float(temperature),
        bc=bc,
    )
    values = (rep.delta_u, rep.delta_f, rep.delta_x, rep.delta_s)
    if not all(math.isfinite(v) for v in values):
        raise ConsistencyViolation(f"non-finite observable in {rep}")
    if rep.first_law_residual > FIRST_LAW_ATOL:
        raise ConsistencyViolation(
            f"first law violated by {rep.first_law_residual:.3e} at x={cav.partition}, T={temperature}"
        )
    return rep
