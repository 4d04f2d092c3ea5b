"""Per-normal-mode thermodynamics for the Wien-compatible spectrum families.

All quantities are in natural units (hbar = c = k_B = 1).  To restore SI
units multiply energies by ``hbar`` for an angular frequency argument,
write ``omega/T`` as ``hbar*omega/(k_B*T)``, and express entropies in
units of ``k_B``.

Every function accepts scalars or numpy arrays for ``omega``.  The
closed forms are evaluated through ``expm1``/``log1p`` so that the large
``omega/T`` tail (which mode sums probe heavily) neither overflows nor
loses digits.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter

__all__ = [
    "Kind",
    "SpectrumModel",
    "ModePoint",
    "ZERO_POINT",
    "RAYLEIGH_JEANS",
    "PLANCK_ZP",
    "interpolated",
    "energy_per_mode",
    "thermal_energy_per_mode",
    "free_energy_per_mode",
    "thermal_free_energy_per_mode",
    "entropy_per_mode",
    "force_per_mode",
    "thermal_force_per_mode",
]


class Kind(enum.Enum):
    ZERO_POINT = "zero-point"
    RAYLEIGH_JEANS = "rayleigh-jeans"
    PLANCK_ZP = "planck-zp"
    INTERPOLATED = "interpolated"


@dataclass(frozen=True)
class SpectrumModel:
    """A per-mode energy law.

    ``c1`` and ``c2`` are only meaningful for ``Kind.INTERPOLATED``; the
    family ``c1*w*exp(-c2*w/T)/(1 - exp(-c1*w/T)) + w/2`` reduces to the
    Planck law with zero-point energy at ``c1 = c2 = 1``.
    """

    kind: Kind
    c1: float = 1.0
    c2: float = 1.0

    def __post_init__(self):
        if self.kind is Kind.INTERPOLATED and not (self.c1 > 0 and self.c2 > 0):
            raise InvalidParameter(
                f"interpolated spectrum needs c1 > 0 and c2 > 0, got ({self.c1}, {self.c2})"
            )

    def __str__(self):
        if self.kind is Kind.INTERPOLATED:
            return f"interpolated(c1={self.c1!r}, c2={self.c2!r})"
        return self.kind.value


ZERO_POINT = SpectrumModel(Kind.ZERO_POINT)
RAYLEIGH_JEANS = SpectrumModel(Kind.RAYLEIGH_JEANS)
PLANCK_ZP = SpectrumModel(Kind.PLANCK_ZP)


def interpolated(c1: float, c2: float) -> SpectrumModel:
    return SpectrumModel(Kind.INTERPOLATED, float(c1), float(c2))


@dataclass(frozen=True)
class ModePoint:
    """An (angular frequency, temperature) pair with validated ranges."""

    omega: float
    temperature: float = 0.0

    def __post_init__(self):
        if not self.omega > 0:
            raise InvalidParameter(f"omega must be positive, got {self.omega}")
        if not self.temperature >= 0:
            raise InvalidParameter(f"temperature must be non-negative, got {self.temperature}")


def _check(omega, temperature, *, positive_t: bool):
    omega = np.asarray(omega, dtype=float)
    if np.any(~(omega > 0)):
        raise InvalidParameter("omega must be positive")
    if positive_t:
        if not temperature > 0:
            raise InvalidParameter(f"temperature must be positive, got {temperature}")
    elif not temperature >= 0:
        raise InvalidParameter(f"temperature must be non-negative, got {temperature}")
    return omega, float(temperature)


def _out(value):
    return float(value) if np.ndim(value) == 0 else value


def _bose(y):
    """1/(e^y - 1), zero once e^y overflows."""
    with np.errstate(over="ignore"):
        return 1.0 / np.expm1(y)


def _log1m_exp(y):
    """log(1 - e^-y) for y > 0, accurate at both small and large y."""
    y = np.asarray(y, dtype=float)
    small = y < np.log(2.0)
    with np.errstate(under="ignore"):
        return np.where(small, np.log(-np.expm1(-np.where(small, y, 1.0))),
                        np.log1p(-np.exp(-np.where(small, 1.0, y))))


def _planck_thermal(omega, temperature):
    return omega * _bose(omega / temperature)


def _interpolated_thermal(omega, temperature, c1, c2):
    y = omega / temperature
    with np.errstate(under="ignore"):
        return c1 * omega * np.exp(-c2 * y) / -np.expm1(-c1 * y)


def thermal_energy_per_mode(model: SpectrumModel, omega, temperature):
    """Per-mode energy with the ``omega/2`` zero-point part removed.

    Rayleigh-Jeans has no zero-point part, so its value is simply ``T``.
    """
    if model.kind is Kind.ZERO_POINT:
        raise InvalidParameter("zero-point spectrum has no thermal part")
    omega, temperature = _check(omega, temperature, positive_t=True)
    if model.kind is Kind.RAYLEIGH_JEANS:
        return _out(np.full_like(omega, temperature))
    if model.kind is Kind.PLANCK_ZP:
        return _out(_planck_thermal(omega, temperature))
    return _out(_interpolated_thermal(omega, temperature, model.c1, model.c2))


def energy_per_mode(model: SpectrumModel, omega, temperature=0.0):
    """Average energy of a normal mode of angular frequency ``omega``.

    Parameters
    ----------
    model : SpectrumModel
    omega : float or ndarray
        Positive angular frequency.
    temperature : float
        ``T >= 0``; Rayleigh-Jeans and the interpolating family need
        ``T > 0``.  Planck at ``T = 0`` is the zero-point value.

    Returns
    -------
    float or ndarray
    """
    if model.kind is Kind.ZERO_POINT:
        omega, _ = _check(omega, temperature, positive_t=False)
        return _out(0.5 * omega)
    if model.kind is Kind.PLANCK_ZP:
        omega, temperature = _check(omega, temperature, positive_t=False)
        if temperature == 0:
            return _out(0.5 * omega)
        return _out(0.5 * omega + _planck_thermal(omega, temperature))
    if model.kind is Kind.RAYLEIGH_JEANS:
        return thermal_energy_per_mode(model, omega, temperature)
    omega, temperature = _check(omega, temperature, positive_t=True)
    return _out(0.5 * omega + _interpolated_thermal(omega, temperature, model.c1, model.c2))


def thermal_free_energy_per_mode(omega, temperature):
    """``T*ln(1 - exp(-omega/T))``, the Planck free energy minus ``omega/2``."""
    omega, temperature = _check(omega, temperature, positive_t=True)
    return _out(temperature * _log1m_exp(omega / temperature))


def free_energy_per_mode(omega, temperature=0.0):
    """Helmholtz free energy ``T*ln[2 sinh(omega/2T)]`` of one Planck mode.

    Evaluated as ``omega/2 + T*ln(1 - e^(-omega/T))`` so it stays finite
    for any ``omega/T``; ``T = 0`` returns ``omega/2``.
    """
    omega, temperature = _check(omega, temperature, positive_t=False)
    if temperature == 0:
        return _out(0.5 * omega)
    return _out(0.5 * omega + temperature * _log1m_exp(omega / temperature))


def entropy_per_mode(model: SpectrumModel, omega, temperature):
    """Entropy of one normal mode, in units of ``k_B``.

    Planck: ``-ln[2 sinh(y/2)] + (y/2) coth(y/2)`` with ``y = omega/T``,
    computed as ``-ln(1 - e^-y) + y/(e^y - 1)``.  Rayleigh-Jeans:
    ``1 - ln(y)``.  The zero-point spectrum carries no entropy.  No entropy
    is defined for the interpolating family.
    """
    if model.kind is Kind.INTERPOLATED:
        raise InvalidParameter("entropy is not defined for the interpolating family")
    if model.kind is Kind.ZERO_POINT:
        omega, _ = _check(omega, temperature, positive_t=False)
        return _out(np.zeros_like(omega))
    omega, temperature = _check(omega, temperature, positive_t=True)
    y = omega / temperature
    if model.kind is Kind.RAYLEIGH_JEANS:
        return _out(1.0 - np.log(y))
    return _out(-_log1m_exp(y) + y * _bose(y))


def thermal_force_per_mode(omega, length, temperature):
    """``(omega/length)/(e^(omega/T) - 1)``: the convergent part of the mode force."""
    omega, temperature = _check(omega, temperature, positive_t=True)
    if not length > 0:
        raise InvalidParameter(f"length must be positive, got {length}")
    return _out(omega / length * _bose(omega / temperature))


def force_per_mode(omega, length, temperature=0.0):
    """Force ``(omega/2L) coth(omega/2T)`` one Planck mode exerts on a wall.

    This is ``-dF/dL`` for a mode whose frequency scales as ``1/L``.
    """
    omega, temperature = _check(omega, temperature, positive_t=False)
    if not length > 0:
        raise InvalidParameter(f"length must be positive, got {length}")
    zp = 0.5 * omega / length
    if temperature == 0:
        return _out(zp)
    return _out(zp + omega / length * _bose(omega / temperature))
