"""Spectrum selection by minimal Casimir-energy spread.

An ensemble of boxes at one temperature, with partitions spread uniformly
over the box, is assigned the functional

    I(c1, c2) = integral_{delta}^{L/2} |dU(x; c1, c2)| dx

where ``dU`` is the Casimir energy for the two-parameter Wien-compatible
family ``c1*w*exp(-c2*w/T)/(1 - exp(-c1*w/T)) + w/2``.  The Planck law
with zero-point energy is the member ``c1 = c2 = 1``.  This module
evaluates ``I`` and searches the ``(c1, c2)`` plane for its minimum.
"""
from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import spectra
from .casimir import Cavity, thermal_difference, zp_energy
from .errors import InvalidParameter
from .modesum import BoundaryPair, Kernel

__all__ = [
    "MaxEntConfig",
    "Optimum",
    "Search",
    "interpolated_casimir_energy",
    "objective",
    "objective_reference",
    "ensemble_sum",
    "grid_search",
    "minimize_spread",
]

SEARCH_BOUNDS = (0.25, 4.0)
GRID_POINTS = 25


@dataclass(frozen=True)
class MaxEntConfig:
    length: float = 3.0
    temperature: float = 1.0
    delta: float = 0.15
    panels: int = 64
    bc: BoundaryPair = BoundaryPair.LIKE

    def __post_init__(self):
        if not self.length > 0:
            raise InvalidParameter(f"length must be positive, got {self.length}")
        if not self.temperature > 0:
            raise InvalidParameter(f"temperature must be positive, got {self.temperature}")
        if not 0 < self.delta < self.length / 2:
            raise InvalidParameter(f"delta must lie in (0, L/2), got {self.delta}")
        if self.panels < 16 or self.panels % 2:
            raise InvalidParameter(f"panels must be even and >= 16, got {self.panels}")
        object.__setattr__(self, "bc", BoundaryPair.parse(self.bc))


@dataclass(frozen=True)
class Optimum:
    c1: float
    c2: float
    objective: float
    iterations: int
    converged: bool


class Search(enum.Enum):
    GRID = "grid"
    GRID_THEN_LOCAL = "grid-then-local"


def interpolated_casimir_energy(cav: Cavity, bc: BoundaryPair, temperature: float,
                                c1: float, c2: float) -> float:
    """Casimir energy for the interpolating family at ``(c1, c2)``."""
    model = spectra.interpolated(c1, c2)
    return zp_energy(cav, bc) + thermal_difference(cav, bc, temperature, Kernel.THERMAL_ENERGY, model)


def _integrand(cfg: MaxEntConfig, c1, c2):
    def du(x):
        return interpolated_casimir_energy(Cavity(cfg.length, x), cfg.bc, cfg.temperature, c1, c2)
    return du


def _bisect_root(f, a, fa, b, fb, tol=1e-13):
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0 or b - a < tol:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def _simpson(values, h):
    return h / 3.0 * (values[0] + values[-1] + 4.0 * sum(values[1:-1:2]) + 2.0 * sum(values[2:-1:2]))


def objective(cfg: MaxEntConfig, c1: float, c2: float) -> float:
    """``I(c1, c2)`` by composite Simpson over ``[delta, L/2]``.

    ``dU`` is sampled on ``cfg.panels`` uniform panels; wherever it changes
    sign the crossing is bracketed by bisection and the interval is split
    there, so each Simpson piece integrates a smooth function.
    """
    du = _integrand(cfg, c1, c2)
    a, b = cfg.delta, 0.5 * cfg.length
    xs = np.linspace(a, b, cfg.panels + 1)
    fs = [du(x) for x in xs]

    breaks = [a]
    for i in range(len(xs) - 1):
        if fs[i] != 0 and fs[i + 1] != 0 and (fs[i] < 0) != (fs[i + 1] < 0):
            breaks.append(_bisect_root(du, xs[i], fs[i], xs[i + 1], fs[i + 1]))
    breaks.append(b)

    total = 0.0
    for lo, hi in zip(breaks, breaks[1:]):
        m = max(2, 2 * round(cfg.panels * (hi - lo) / (b - a) / 2))
        nodes = np.linspace(lo, hi, m + 1)
        vals = [abs(du(x)) for x in nodes]
        total += _simpson(vals, (hi - lo) / m)
    return total


def objective_reference(cfg: MaxEntConfig, c1: float, c2: float, rtol: float = 1e-7) -> float:
    """``I(c1, c2)`` by adaptive trapezoid refinement, without sign splitting.

    Independent of :func:`objective`; used to check its quadrature.
    """
    du = _integrand(cfg, c1, c2)
    b = 0.5 * cfg.length

    def f(x):
        return abs(du(x))

    a = cfg.delta
    coarse = np.linspace(a, b, 257)
    fc = [f(x) for x in coarse]
    # absolute per-unit-length tolerance from a plain trapezoid estimate
    scale = rtol * max(np.trapezoid(fc, coarse), 1e-300) / (b - a)

    def refine(lo, flo, hi, fhi, whole, depth):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        left = 0.25 * (hi - lo) * (flo + fmid)
        right = 0.25 * (hi - lo) * (fmid + fhi)
        if abs(left + right - whole) <= 3 * scale * (hi - lo) or depth > 30:
            return left + right + (left + right - whole) / 3.0
        return (refine(lo, flo, mid, fmid, left, depth + 1)
                + refine(mid, fmid, hi, fhi, right, depth + 1))

    return math.fsum(
        refine(coarse[k], fc[k], coarse[k + 1], fc[k + 1],
               0.5 * (coarse[k + 1] - coarse[k]) * (fc[k] + fc[k + 1]), 0)
        for k in range(len(coarse) - 1)
    )


def ensemble_sum(cfg: MaxEntConfig, c1: float, c2: float, boxes: int) -> float:
    """Spacing-weighted sum of ``|dU|`` over ``boxes`` evenly spaced partitions.

    Partitions sit at the midpoints of ``boxes`` equal cells of
    ``[delta, L/2]``; the result tends to :func:`objective` as the spacing
    shrinks (second order).
    """
    if boxes < 1:
        raise InvalidParameter("need at least one box")
    du = _integrand(cfg, c1, c2)
    h = (0.5 * cfg.length - cfg.delta) / boxes
    return h * math.fsum(abs(du(cfg.delta + (i + 0.5) * h)) for i in range(boxes))


def _workers():
    try:
        return max(1, int(os.environ.get("CASIMIR1D_THREADS", "1")))
    except ValueError:
        return 1


def grid_search(cfg: MaxEntConfig, c1_values, c2_values):
    """Evaluate ``I`` on a lattice; returns ``(values, (i, j))`` with the argmin indices.

    Ties resolve to the first lattice point in row-major order.
    """
    points = [(c1, c2) for c1 in c1_values for c2 in c2_values]
    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        flat = list(pool.map(lambda p: objective(cfg, *p), points))
    values = np.array(flat).reshape(len(c1_values), len(c2_values))
    i, j = np.unravel_index(int(np.argmin(values)), values.shape)
    return values, (int(i), int(j))


def minimize_spread(cfg: MaxEntConfig, search=Search.GRID_THEN_LOCAL, *,
                    grid_points: int = GRID_POINTS, bounds=SEARCH_BOUNDS,
                    max_iter: int = 500, ftol: float = 1e-8) -> Optimum:
    """Find the ``(c1, c2)`` minimising the Casimir-energy spread.

    A logarithmic ``grid_points x grid_points`` lattice over ``bounds``
    gives the starting point; ``GRID_THEN_LOCAL`` then runs a bounded
    Nelder-Mead simplex until the objective improves by less than
    ``ftol`` per step or ``max_iter`` iterations pass.
    """
    search = Search(search)
    lattice = np.geomspace(bounds[0], bounds[1], grid_points)
    values, (i, j) = grid_search(cfg, lattice, lattice)
    c1, c2, best = float(lattice[i]), float(lattice[j]), float(values[i, j])
    if search is Search.GRID:
        return Optimum(c1, c2, best, 0, True)

    step = math.log(lattice[1] / lattice[0]) if grid_points > 1 else 0.1
    simplex = np.array([[c1, c2], [c1 * math.exp(step), c2], [c1, c2 * math.exp(step)]])
    res = minimize(
        lambda p: objective(cfg, float(p[0]), float(p[1])),
        x0=[c1, c2],
        method="Nelder-Mead",
        bounds=[bounds, bounds],
        options={"maxiter": max_iter, "xatol": 1e-6, "fatol": ftol, "initial_simplex": simplex},
    )
    if res.fun <= best:
        c1, c2, best = float(res.x[0]), float(res.x[1]), float(res.fun)
    return Optimum(c1, c2, best, int(res.nit), bool(res.success))
