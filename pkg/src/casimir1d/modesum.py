"""Normal-mode enumeration and summation.

Two kinds of sums appear.  Zero-point and Rayleigh-Jeans sums diverge and
are regularized with a smooth cutoff weight ``w(Lambda*omega)``; only
differences between cavities survive the ``Lambda -> 0`` limit, which is
taken by polynomial (Richardson/Neville) extrapolation over a ladder of
cutoffs.  Thermal sums converge on their own and are truncated once the
exponential tail is reached.

These routines are the independent oracle layer against which the closed
forms in :mod:`casimir1d.casimir` are checked.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import spectra
from .errors import DegenerateCutoff, IllConditionedLadder, InvalidParameter, NoConvergence

__all__ = [
    "BoundaryPair",
    "CutoffFamily",
    "CutoffSpec",
    "RegularizedValue",
    "Kernel",
    "default_ladder",
    "mode_frequency",
    "mode_frequencies",
    "geometric_cutoff_sum",
    "regularized_zp_sum",
    "cutoff_mode_sum",
    "convergent_thermal_sum",
    "extrapolate_ladder",
]

# Beyond this Lambda*pi/L every cutoff weight underflows.
MAX_CUTOFF_EXPONENT = 700.0
# Below double resolution, so the truncated tail never shows in the result and
# sums stay smooth in L (finite differences of them are meaningful).
TERM_RTOL = 1e-17
MAX_MODES = 10**8
_BLOCK = 256
_GAUSS_TAIL = 38.0  # e^-(38) < 1e-16: Gaussian weights past this are negligible


class BoundaryPair(enum.Enum):
    """Wall/partition condition pairing; ``alpha`` shifts the mode ladder."""

    LIKE = "like"
    UNLIKE = "unlike"

    @property
    def alpha(self) -> int:
        return 0 if self is BoundaryPair.LIKE else 1

    @classmethod
    def parse(cls, value) -> "BoundaryPair":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter(f"boundary pair must be 'like' or 'unlike', got {value!r}") from None


class CutoffFamily(enum.Enum):
    EXPONENTIAL = "exp"
    GAUSSIAN = "gauss"

    def weight(self, arg):
        if self is CutoffFamily.EXPONENTIAL:
            return np.exp(-arg)
        return np.exp(-arg * arg)


@dataclass(frozen=True)
class CutoffSpec:
    """A cutoff family, the working cutoff length and its extrapolation ladder.

    ``ladder`` is strictly decreasing and ends at ``lam``.  When omitted it
    is the single point ``(lam,)``.
    """

    family: CutoffFamily = CutoffFamily.EXPONENTIAL
    lam: float = 0.01
    ladder: tuple = ()

    def __post_init__(self):
        if not self.lam > 0:
            raise InvalidParameter(f"cutoff length must be positive, got {self.lam}")
        ladder = tuple(float(v) for v in self.ladder) or (float(self.lam),)
        if any(v <= 0 for v in ladder) or any(a <= b for a, b in zip(ladder, ladder[1:])):
            raise InvalidParameter(f"ladder must be positive and strictly decreasing: {ladder}")
        if ladder[-1] != self.lam:
            raise InvalidParameter("ladder must end at the working cutoff length")
        object.__setattr__(self, "ladder", ladder)
        object.__setattr__(self, "family", CutoffFamily(self.family))

    @classmethod
    def from_ladder(cls, ladder: Sequence[float], family=CutoffFamily.EXPONENTIAL) -> "CutoffSpec":
        ladder = tuple(float(v) for v in ladder)
        return cls(family=CutoffFamily(family), lam=ladder[-1], ladder=ladder)


def default_ladder(shortest: float, factors=(0.08, 0.04, 0.02, 0.01)) -> tuple:
    """Cutoff ladder scaled to the smallest length in the system."""
    return tuple(f * shortest for f in factors)


@dataclass(frozen=True)
class RegularizedValue:
    value: float
    lambda_used: float
    error_estimate: float = 0.0


class Kernel(enum.Enum):
    THERMAL_ENERGY = "thermal-energy"
    THERMAL_FREE_ENERGY = "thermal-free-energy"
    ENTROPY = "entropy"
    THERMAL_FORCE = "thermal-force"


def _check_length(length):
    if not length > 0:
        raise InvalidParameter(f"length must be positive, got {length}")


def mode_frequency(n: int, length: float, bc: BoundaryPair) -> float:
    """Angular frequency ``pi*(n - alpha/2)/length`` of mode ``n >= 1``."""
    if int(n) != n or n < 1:
        raise InvalidParameter(f"mode index must be a positive integer, got {n}")
    _check_length(length)
    return math.pi * (n - 0.5 * bc.alpha) / length


def mode_frequencies(n, length: float, bc: BoundaryPair) -> np.ndarray:
    """Vectorised :func:`mode_frequency` for an integer array ``n``."""
    return np.pi * (np.asarray(n, dtype=float) - 0.5 * bc.alpha) / length


def _gauss_modes(length, bc, lam):
    """Mode frequencies that carry a non-negligible Gaussian weight."""
    n_max = int(math.ceil(math.sqrt(_GAUSS_TAIL) * length / (math.pi * lam) + 1))
    if n_max > MAX_MODES:
        raise NoConvergence(f"Gaussian cutoff sum needs {n_max} modes")
    return mode_frequencies(np.arange(1, n_max + 1), length, bc)


def _check_exponent(length, lam):
    if lam * math.pi / length > MAX_CUTOFF_EXPONENT:
        raise DegenerateCutoff(f"cutoff {lam} too large for length {length}: all weights underflow")


def geometric_cutoff_sum(length: float, bc: BoundaryPair, cutoff: CutoffSpec) -> float:
    """Weighted mode count ``sum_n w(Lambda*omega_n)`` at the working cutoff.

    For the exponential weight this is the geometric series
    ``e^{-a(1-alpha/2)}/(1 - e^{-a})`` with ``a = Lambda*pi/L``, whose small
    ``Lambda`` expansion is ``L/(Lambda*pi) + (alpha - 1)/2 + O(Lambda)``.
    """
    _check_length(length)
    lam = cutoff.lam
    _check_exponent(length, lam)
    if cutoff.family is CutoffFamily.EXPONENTIAL:
        a = lam * math.pi / length
        return math.exp(-a * (1 - 0.5 * bc.alpha)) / -math.expm1(-a)
    w = _gauss_modes(length, bc, lam)
    return math.fsum(cutoff.family.weight(lam * w))


def _zp_closed_form(length, bc, lam):
    # -(1/2) d/dLambda of the geometric series
    b = math.pi / length
    g = math.exp(-b * lam * (1 - 0.5 * bc.alpha)) / -math.expm1(-b * lam)
    return 0.5 * b * g * ((1 - 0.5 * bc.alpha) + 1.0 / math.expm1(b * lam))


def cutoff_mode_sum(length: float, bc: BoundaryPair, lam: float, family: CutoffFamily,
                    per_mode) -> float:
    """``sum_n per_mode(omega_n) * w(lam*omega_n)`` by direct summation.

    ``per_mode`` maps an array of frequencies to per-mode values.  The sum
    runs until the weight falls below ``1e-16``; used for the Gaussian
    family and as the brute-force check on the exponential closed forms.
    """
    _check_length(length)
    _check_exponent(length, lam)
    family = CutoffFamily(family)
    if family is CutoffFamily.GAUSSIAN:
        w = _gauss_modes(length, bc, lam)
    else:
        n_max = int(math.ceil(37.0 * length / (math.pi * lam) + 1))
        if n_max > MAX_MODES:
            raise NoConvergence(f"exponential cutoff sum needs {n_max} modes")
        w = mode_frequencies(np.arange(1, n_max + 1), length, bc)
    with np.errstate(under="ignore"):
        terms = np.asarray(per_mode(w), dtype=float) * family.weight(lam * w)
    return math.fsum(terms)


def regularized_zp_sum(length: float, bc: BoundaryPair, cutoff: CutoffSpec,
                       *, direct: bool = False) -> list[RegularizedValue]:
    """Cutoff-weighted zero-point energy ``sum_n (omega_n/2) w(Lambda*omega_n)``.

    One :class:`RegularizedValue` is returned per ladder point, in ladder
    order.  Values are finite-cutoff numbers that diverge like
    ``L/(2*pi*Lambda^2)``; they are meant to be combined into cavity
    differences before :func:`extrapolate_ladder` is applied.

    The exponential family uses the closed form ``-(1/2) dG/dLambda`` of
    the geometric series ``G``; ``direct=True`` (or the Gaussian family)
    sums the modes explicitly.
    """
    _check_length(length)
    out = []
    for lam in cutoff.ladder:
        _check_exponent(length, lam)
        if cutoff.family is CutoffFamily.EXPONENTIAL and not direct:
            value = _zp_closed_form(length, bc, lam)
        else:
            value = cutoff_mode_sum(length, bc, lam, cutoff.family, lambda w: 0.5 * w)
        out.append(RegularizedValue(value, lam, 0.0))
    return out


def _kernel_terms(kernel: Kernel, w, length, temperature, model):
    if kernel is Kernel.THERMAL_ENERGY:
        return spectra.thermal_energy_per_mode(model, w, temperature)
    if kernel is Kernel.THERMAL_FREE_ENERGY:
        return spectra.thermal_free_energy_per_mode(w, temperature)
    if kernel is Kernel.ENTROPY:
        return spectra.entropy_per_mode(spectra.PLANCK_ZP, w, temperature)
    return spectra.thermal_force_per_mode(w, length, temperature)


def convergent_thermal_sum(length: float, bc: BoundaryPair, temperature: float,
                           kernel, model: spectra.SpectrumModel = spectra.PLANCK_ZP) -> float:
    """Sum a convergent per-mode thermal kernel over all modes of a cavity.

    Summation proceeds in blocks of increasing ``n`` and stops at the
    first mode ``n > n_min = ceil(10*T*L/pi)`` whose term is below
    ``1e-17`` of the partial sum; ``n_min`` keeps the stop inside the
    exponential tail.  Partial sums use ``math.fsum`` so the result does
    not depend on blocking.

    Parameters
    ----------
    length : float
        Cavity length.
    bc : BoundaryPair
    temperature : float
        ``T > 0``.
    kernel : Kernel or str
        ``thermal-energy``, ``thermal-free-energy``, ``entropy`` or
        ``thermal-force``.
    model : SpectrumModel
        Energy law for the ``thermal-energy`` kernel (Planck by default;
        the interpolating family is allowed).  The other kernels are
        Planck-only.

    Raises
    ------
    NoConvergence
        If more than ``1e8`` modes would be needed.
    """
    kernel = Kernel(kernel)
    _check_length(length)
    if not temperature > 0:
        raise InvalidParameter(f"temperature must be positive, got {temperature}")
    if model.kind is spectra.Kind.ZERO_POINT or (
        model.kind is spectra.Kind.RAYLEIGH_JEANS
    ):
        raise InvalidParameter(f"{model} has no convergent thermal sum")
    if kernel is not Kernel.THERMAL_ENERGY and model.kind is not spectra.Kind.PLANCK_ZP:
        raise InvalidParameter(f"kernel {kernel.value} is only defined for the Planck spectrum")

    n_min = math.ceil(10.0 * temperature * length / math.pi)
    acc: list[float] = []
    partial = 0.0
    start = 1
    while start <= MAX_MODES:
        n = np.arange(start, start + _BLOCK)
        terms = np.asarray(_kernel_terms(kernel, mode_frequencies(n, length, bc),
                                         length, temperature, model), dtype=float)
        running = partial + np.cumsum(terms)
        stop = np.flatnonzero((n > n_min) & (np.abs(terms) <= TERM_RTOL * np.abs(running)))
        if stop.size:
            acc.extend(terms[: stop[0] + 1].tolist())
            return math.fsum(acc)
        acc.extend(terms.tolist())
        partial = running[-1]
        start += _BLOCK
    raise NoConvergence(
        f"thermal sum ({kernel.value}, L={length}, T={temperature}) did not converge in {MAX_MODES} modes"
    )


def extrapolate_ladder(values: Sequence[tuple[float, float]], *, rtol: float = 1e-8,
                       atol: float = 0.0) -> RegularizedValue:
    """Extrapolate ``f(Lambda)`` sampled on a decreasing ladder to ``Lambda = 0``.

    Builds the Neville tableau of interpolating polynomials in ``Lambda``
    and reads off the diagonal ``P_0(0), P_01(0), P_012(0), ...``.  The
    last diagonal entry is the result; ``error_estimate`` is its distance
    from the one before.

    Raises
    ------
    IllConditionedLadder
        If the last correction is larger than the previous one and not
        negligible (``> rtol`` times the data scale and ``> atol``), i.e.
        the extrapolants are diverging.  Pass ``atol`` at the rounding level
        of the inputs when they are differences of large, cancelling sums.
    """
    pts = [(float(l), float(v)) for l, v in values]
    if len(pts) < 3:
        raise InvalidParameter("extrapolation needs at least three ladder points")
    lams = [l for l, _ in pts]
    if any(l <= 0 for l in lams) or any(a <= b for a, b in zip(lams, lams[1:])):
        raise InvalidParameter("ladder lambdas must be positive and strictly decreasing")

    col = [v for _, v in pts]
    diag = [col[0]]
    for k in range(1, len(pts)):
        col = [
            (lams[i + k] * col[i] - lams[i] * col[i + 1]) / (lams[i + k] - lams[i])
            for i in range(len(col) - 1)
        ]
        diag.append(col[0])

    steps = [abs(b - a) for a, b in zip(diag, diag[1:])]
    scale = max(max(abs(v) for _, v in pts), 1e-300)
    if steps[-1] > steps[-2] and steps[-1] > max(rtol * scale, atol):
        raise IllConditionedLadder(f"extrapolants diverge: {diag}")
    return RegularizedValue(diag[-1], lams[-1], steps[-1])
