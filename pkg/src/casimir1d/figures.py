"""Curve data for the seven standard plots and for generic sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from . import casimir, spectra
from .curves import CurveSet
from .errors import InvalidParameter
from .modesum import BoundaryPair

COMMANDS = ("permode", "energy", "force", "entropy", "figure", "optimize", "verify")

# omega range for per-mode curves; the T=2 curve meets the zero-point line well before this
OMEGA_MAX = 10.0


@dataclass(frozen=True)
class RunConfig:
    command: str = "energy"
    bc: BoundaryPair = BoundaryPair.LIKE
    length: float = 3.0
    temperatures: tuple = (0.0,)
    x_points: int = 201
    x_min_fraction: float = 0.02
    output_format: str = "csv"
    output_path: Optional[str] = None
    cutoff: str = "exp"
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParameter(f"unknown command {self.command!r}")
        object.__setattr__(self, "bc", BoundaryPair.parse(self.bc))
        object.__setattr__(self, "temperatures", tuple(float(t) for t in self.temperatures))
        if not self.length > 0:
            raise InvalidParameter(f"length must be positive, got {self.length}")
        if self.x_points < 2:
            raise InvalidParameter("need at least two grid points")
        if not 0 < self.x_min_fraction < 0.5:
            raise InvalidParameter(f"x_min_fraction must lie in (0, 0.5), got {self.x_min_fraction}")
        if any(not t >= 0 for t in self.temperatures):
            raise InvalidParameter("temperatures must be non-negative")
        if self.command in ("permode", "energy", "force", "entropy") and not self.temperatures:
            raise InvalidParameter(f"{self.command} needs at least one temperature")
        if self.output_format not in ("csv", "json"):
            raise InvalidParameter(f"format must be csv or json, got {self.output_format!r}")

    def x_grid(self) -> np.ndarray:
        lo = self.x_min_fraction * self.length
        return np.linspace(lo, self.length - lo, self.x_points)


def _label(t: float) -> str:
    return f"T={t:g}"


def _meta(cfg: RunConfig, **extra) -> dict:
    meta = {"command": cfg.command}
    meta.update(extra)
    return meta


def _sweep(cfg: RunConfig, observable, temperatures) -> dict:
    xs = cfg.x_grid()
    cols = {"x": xs}
    for t in temperatures:
        cols[_label(t)] = [observable(casimir.Cavity(cfg.length, float(x)), cfg.bc, t) for x in xs]
    return cols


_OBSERVABLES = {
    "energy": casimir.planck_energy,
    "force": casimir.planck_force,
    "entropy": casimir.planck_entropy,
}


def per_mode_curves(cfg: RunConfig, omega_max: float = OMEGA_MAX) -> CurveSet:
    """Planck energy, free energy and entropy per mode against omega."""
    omega = omega_max * np.arange(1, cfg.x_points + 1) / cfg.x_points
    cols = {"omega": omega}
    for t in cfg.temperatures:
        cols[f"U {_label(t)}"] = spectra.energy_per_mode(spectra.PLANCK_ZP, omega, t)
        cols[f"F {_label(t)}"] = spectra.free_energy_per_mode(omega, t)
        cols[f"S {_label(t)}"] = (np.zeros_like(omega) if t == 0
                                  else spectra.entropy_per_mode(spectra.PLANCK_ZP, omega, t))
    return CurveSet(_meta(cfg, temperatures=list(cfg.temperatures)), cols)


def run_query(cfg: RunConfig) -> CurveSet:
    """Sweep one observable over the partition grid for each temperature."""
    if cfg.command == "permode":
        return per_mode_curves(cfg)
    if cfg.command not in _OBSERVABLES:
        raise InvalidParameter(f"run_query does not handle {cfg.command!r}")
    cols = _sweep(cfg, _OBSERVABLES[cfg.command], cfg.temperatures)
    return CurveSet(
        _meta(cfg, spectrum="planck-zp", bc=cfg.bc.value, length=cfg.length,
              temperatures=list(cfg.temperatures)),
        cols,
    )


# figure -> (observable, boundary pair, default temperatures)
FIGURES = {
    2: ("energy", BoundaryPair.LIKE, (0.0, 1.0, 3.0)),
    3: ("energy", BoundaryPair.UNLIKE, (0.0, 1.0, 3.0)),
    4: ("force", BoundaryPair.LIKE, (0.0, 1.0, 3.0)),
    5: ("force", BoundaryPair.UNLIKE, (0.0, 1.0, 3.0)),
    6: ("entropy", BoundaryPair.LIKE, (0.25, 0.5, 1.0, 2.0)),
    7: ("entropy", BoundaryPair.UNLIKE, (0.1, 0.2, 0.5, 1.0)),
}


def emit_figure(n: int, overrides: Optional[RunConfig] = None, *, temperatures=None,
                bc=None) -> CurveSet:
    """Curve data for plot ``n`` (1-7).

    ``overrides`` supplies length and grid settings; ``temperatures`` and
    ``bc`` replace the plot's own choices when given.

    1. per-mode Planck energy vs omega at T = 0, 1, 2 plus the
       equipartition levels for T = 1, 2
    2-3. Casimir energy vs x, like / unlike
    4-5. Casimir force vs x, like / unlike
    6. Casimir entropy vs x, like, with the high-temperature limit and
       the curve ``(1/2)|ln(x/(L-x))|``
    7. Casimir entropy vs x, unlike
    """
    if n not in range(1, 8):
        raise InvalidParameter(f"figure index must be 1..7, got {n}")
    base = overrides or RunConfig(command="figure")
    base = replace(base, command="figure")

    if n == 1:
        temps = tuple(temperatures) if temperatures is not None else (0.0, 1.0, 2.0)
        omega = OMEGA_MAX * np.arange(1, base.x_points + 1) / base.x_points
        cols = {"omega": omega}
        for t in temps:
            cols[_label(t)] = spectra.energy_per_mode(spectra.PLANCK_ZP, omega, t)
        for t in temps:
            if t > 0:
                cols[f"rayleigh-jeans {_label(t)}"] = spectra.energy_per_mode(spectra.RAYLEIGH_JEANS, omega, t)
        return CurveSet(_meta(base, figure=1, quantity="energy per mode",
                              temperatures=list(temps)), cols)

    quantity, fig_bc, fig_temps = FIGURES[n]
    temps = tuple(float(t) for t in (temperatures if temperatures is not None else fig_temps))
    cfg = replace(base, bc=BoundaryPair.parse(bc) if bc is not None else fig_bc, temperatures=temps)
    cols = _sweep(cfg, _OBSERVABLES[quantity], temps)
    if n == 6:
        cols["rayleigh-jeans limit"] = [
            casimir.rj_entropy(casimir.Cavity(cfg.length, float(x)), cfg.bc) for x in cols["x"]
        ]
        if cfg.bc is BoundaryPair.LIKE:
            # the commonly quoted closed form; it is not the T -> inf limit
            # of the curves above (which is the column before)
            x = np.asarray(cols["x"], dtype=float)
            cols["log-ratio curve"] = 0.5 * np.abs(np.log(x / (cfg.length - x)))
    return CurveSet(
        _meta(cfg, figure=n, quantity=quantity, spectrum="planck-zp", bc=cfg.bc.value,
              length=cfg.length, temperatures=list(temps)),
        cols,
    )
