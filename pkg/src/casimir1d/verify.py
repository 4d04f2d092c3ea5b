"""Oracle suite: closed forms against independent numerical routes.

Each check returns ``(passed, detail)``.  Checks are grouped by the
module whose invariants they exercise so callers can run a subset.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import mpmath
import numpy as np
from scipy.integrate import quad

from . import casimir, maxent, spectra
from .casimir import Cavity
from .modesum import (
    BoundaryPair,
    CutoffFamily,
    CutoffSpec,
    cutoff_mode_sum,
    default_ladder,
    extrapolate_ladder,
    geometric_cutoff_sum,
    mode_frequencies,
    regularized_zp_sum,
)

LIKE, UNLIKE = BoundaryPair.LIKE, BoundaryPair.UNLIKE
ORACLE_POINTS = ((1.0, 3.0), (0.5, 3.0), (1.2, 3.0))
ORACLE_ATOL = 1e-5
NOISE_RTOL = 1e-12  # rounding floor for differences of cancelling cutoff sums


@dataclass(frozen=True)
class Check:
    name: str
    group: str
    run: Callable[[], tuple]


# ---------------------------------------------------------------- ladder oracles

def ladder_difference(cav: Cavity, bc: BoundaryPair, family, per_mode_total) -> tuple:
    """Extrapolate ``f(x) + f(L-x) - 2 f(L/2)`` of a cutoff sum to zero cutoff.

    ``per_mode_total(length, lam)`` returns the cutoff-weighted sum for one
    sub-cavity.
    """
    ladder = default_ladder(min(cav.left, cav.right))
    pts, size = [], 0.0
    for lam in ladder:
        parts = (per_mode_total(cav.left, lam), per_mode_total(cav.right, lam),
                 per_mode_total(cav.centre, lam))
        size = max(size, *(abs(v) for v in parts))
        pts.append((lam, parts[0] + parts[1] - 2.0 * parts[2]))
    return extrapolate_ladder(pts, atol=NOISE_RTOL * size)


def zp_energy_oracle(cav: Cavity, bc: BoundaryPair, family=CutoffFamily.EXPONENTIAL):
    family = CutoffFamily(family)

    def total(length, lam):
        return regularized_zp_sum(length, bc, CutoffSpec(family, lam))[0].value

    return ladder_difference(cav, bc, family, total)


def rj_energy_oracle(cav: Cavity, bc: BoundaryPair, temperature: float, family=CutoffFamily.EXPONENTIAL):
    family = CutoffFamily(family)

    def total(length, lam):
        return temperature * geometric_cutoff_sum(length, bc, CutoffSpec(family, lam))

    return ladder_difference(cav, bc, family, total)


def rj_force_oracle(cav: Cavity, bc: BoundaryPair, temperature: float, family=CutoffFamily.EXPONENTIAL):
    """Cutoff-regularised ``sum_n [T/x - T/(L-x)]`` extrapolated to zero cutoff."""
    family = CutoffFamily(family)
    ladder = default_ladder(min(cav.left, cav.right))
    pts = []
    for lam in ladder:
        spec = CutoffSpec(family, lam)
        left = temperature / cav.left * geometric_cutoff_sum(cav.left, bc, spec)
        right = temperature / cav.right * geometric_cutoff_sum(cav.right, bc, spec)
        size = max(abs(left), abs(right))
        pts.append((lam, left - right))
    return extrapolate_ladder(pts, atol=NOISE_RTOL * size)


def rj_entropy_oracle(cav: Cavity, bc: BoundaryPair, temperature: float = 1.0) -> float:
    """Integrate ``rj_force/T`` from the centre to the partition (isothermal first law)."""
    value, _ = quad(lambda s: casimir.rj_force(Cavity(cav.length, s), bc, temperature) / temperature,
                    cav.centre, cav.partition, epsabs=1e-13, epsrel=1e-13)
    return value


def _central(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)


# ---------------------------------------------------------------- check bodies

def _zp_oracle(family):
    def run():
        worst = 0.0
        for x, L in ORACLE_POINTS:
            for bc in (LIKE, UNLIKE):
                cav = Cavity(L, x)
                worst = max(worst, abs(zp_energy_oracle(cav, bc, family).value - casimir.zp_energy(cav, bc)))
        return worst < ORACLE_ATOL, f"max |ladder - closed form| = {worst:.2e}"
    return run


def _cutoff_independence():
    worst = 0.0
    for bc in (LIKE, UNLIKE):
        cav = Cavity(3.0, 1.0)
        a = zp_energy_oracle(cav, bc, CutoffFamily.EXPONENTIAL).value
        b = zp_energy_oracle(cav, bc, CutoffFamily.GAUSSIAN).value
        worst = max(worst, abs(a - b))
    return worst < ORACLE_ATOL, f"|exp - gauss| = {worst:.2e}"


def _rj_energy_null(family):
    def run():
        worst = max(abs(rj_energy_oracle(Cavity(L, x), bc, 1.0, family).value)
                    for x, L in ORACLE_POINTS for bc in (LIKE, UNLIKE))
        return worst < 1e-6, f"max |extrapolant| = {worst:.2e}"
    return run


def _rj_force_oracle(family):
    def run():
        worst = 0.0
        for x, L in ORACLE_POINTS:
            for bc in (LIKE, UNLIKE):
                cav = Cavity(L, x)
                worst = max(worst, abs(rj_force_oracle(cav, bc, 2.0, family).value
                                       - casimir.rj_force(cav, bc, 2.0)))
        return worst < 1e-6, f"max |ladder - closed form| = {worst:.2e}"
    return run


def _geometric_constant():
    worst = 0.0
    for bc in (LIKE, UNLIKE):
        lams = (1e-2, 1e-3, 1e-4)
        pts = [(lam, geometric_cutoff_sum(1.0, bc, CutoffSpec(CutoffFamily.EXPONENTIAL, lam))
                - 1.0 / (lam * math.pi)) for lam in lams]
        const = extrapolate_ladder(pts).value
        worst = max(worst, abs(const - 0.5 * (bc.alpha - 1)))
    return worst < 1e-8, f"max |constant - (alpha-1)/2| = {worst:.2e}"


def _interlacing():
    n = np.arange(1, 1001)
    like = mode_frequencies(n, 1.0, LIKE)
    unlike = mode_frequencies(n, 1.0, UNLIKE)
    ok = bool(np.all(np.diff(like) > 0) and np.all(unlike < like) and np.all(like[:-1] < unlike[1:]))
    return ok, "unlike_n < like_n < unlike_{n+1} for n <= 1000"


def _gaussian_direct():
    cav_len, lam = 1.0, 0.1
    closed = regularized_zp_sum(cav_len, LIKE, CutoffSpec(CutoffFamily.EXPONENTIAL, lam))[0].value
    direct = cutoff_mode_sum(cav_len, LIKE, lam, CutoffFamily.EXPONENTIAL, lambda w: 0.5 * w)
    rel = abs(closed - direct) / abs(closed)
    return rel < 1e-10, f"closed vs direct relative gap {rel:.2e}"


GRID_X = np.linspace(0.06, 2.94, 50)
GRID_T = (0.0, 0.5, 1.0, 3.0)


def _mirror():
    worst = 0.0
    L = 3.0
    for bc in (LIKE, UNLIKE):
        for t in GRID_T:
            for x in GRID_X:
                a, b = Cavity(L, x), Cavity(L, L - x)
                for f in (casimir.planck_energy, casimir.planck_free_energy, casimir.planck_entropy):
                    worst = max(worst, abs(f(a, bc, t) - f(b, bc, t)))
                worst = max(worst, abs(casimir.planck_force(a, bc, t) + casimir.planck_force(b, bc, t)))
    return worst < 1e-10, f"max mirror residual {worst:.2e}"


def _sign_structure():
    ok = True
    for x in GRID_X:
        if abs(x - 1.5) < 1e-12:
            continue
        cav = Cavity(3.0, x)
        lk, ul = casimir.zp_energy(cav, LIKE), casimir.zp_energy(cav, UNLIKE)
        ok &= lk < 0 < ul and ul == -0.5 * lk
    return ok, "like < 0 < unlike and unlike == -like/2 on grid"


def _first_law():
    worst = 0.0
    for bc in (LIKE, UNLIKE):
        for t in (0.25, 1.0, 3.0):
            for x in np.linspace(0.06, 2.94, 25):
                worst = max(worst, casimir.report(Cavity(3.0, x), bc, t).first_law_residual)
    return worst < 1e-8, f"max |dF - (dU - T dS)| = {worst:.2e}"


def free_energy_mp(cav: Cavity, bc: BoundaryPair, t: float, dps: int = 34) -> mpmath.mpf:
    """Casimir free energy summed mode by mode in ``dps``-digit arithmetic.

    Shares no code with :func:`casimir1d.casimir.planck_free_energy`.
    Used where the force is many orders smaller than its zero-point and
    thermal pieces, so a double-precision difference quotient of the
    free energy would be swamped by rounding.
    """
    with mpmath.workdps(dps):
        x, L, T = mpmath.mpf(cav.partition), mpmath.mpf(cav.length), mpmath.mpf(t)
        shift = mpmath.mpf(bc.alpha) / 2
        coeff = mpmath.mpf(1) / 24 - mpmath.mpf(bc.alpha) / 8 + mpmath.mpf(bc.alpha) ** 2 / 16
        total = -mpmath.pi * coeff * (1 / x + 1 / (L - x) - 4 / L)
        if t == 0:
            return +total
        eps = mpmath.mpf(10) ** (-dps - 5)

        def thermal(length):
            acc, n = mpmath.mpf(0), 1
            while True:
                y = mpmath.pi * (n - shift) / (length * T)
                term = T * mpmath.log(-mpmath.expm1(-y))
                acc += term
                if y > 10 and abs(term) < eps * (abs(acc) + 1):
                    return acc
                n += 1

        return +(total + thermal(x) + thermal(L - x) - 2 * thermal(L / 2))


def force_duality_residual(cav: Cavity, bc: BoundaryPair, t: float, h: float = 1e-5) -> tuple:
    """Compare the summed force with ``-d(free energy)/dx``.

    The derivative is a central difference (step ``h``) of
    :func:`free_energy_mp`.  Returns ``(relative force gap, absolute gap
    between the high-precision and double-precision free energies)``.
    """
    with mpmath.workdps(34):
        fp = free_energy_mp(cav.moved(cav.partition + h), bc, t)
        fm = free_energy_mp(cav.moved(cav.partition - h), bc, t)
        fd = float(-(fp - fm) / (2 * mpmath.mpf(h)))
        f0 = free_energy_mp(cav, bc, t)
    force = casimir.planck_force(cav, bc, t)
    return abs(fd - force) / abs(force), abs(float(f0) - casimir.planck_free_energy(cav, bc, t))


def _force_duality():
    worst = worst_f = 0.0
    for bc in (LIKE, UNLIKE):
        for t in (0.25, 1.0, 3.0):
            for x in np.linspace(0.06, 2.94, 25):
                cav = Cavity(3.0, x)
                if abs(casimir.planck_force(cav, bc, t)) > 1e-8:
                    rel, gap = force_duality_residual(cav, bc, t)
                    worst, worst_f = max(worst, rel), max(worst_f, gap)
    return worst < 1e-6 and worst_f < 1e-12, f"max relative gap {worst:.2e}, free-energy gap {worst_f:.2e}"


def entropy_duality_residual(cav: Cavity, bc: BoundaryPair, t: float) -> float:
    h = 1e-5 * t
    fd = -_central(lambda s: casimir.planck_free_energy(cav, bc, s), t, h)
    s = casimir.planck_entropy(cav, bc, t)
    return abs(fd - s) / abs(s)


def _entropy_duality():
    worst = 0.0
    for bc in (LIKE, UNLIKE):
        for t in (0.25, 1.0, 3.0):
            for x in (0.3, 0.7, 1.0, 1.2, 2.0):
                cav = Cavity(3.0, x)
                if abs(casimir.planck_entropy(cav, bc, t)) > 1e-6:
                    worst = max(worst, entropy_duality_residual(cav, bc, t))
    return worst < 1e-6, f"max relative gap {worst:.2e}"


def _high_t_limits():
    cav, t = Cavity(3.0, 1.0), 50.0
    gaps = []
    for bc in (LIKE, UNLIKE):
        gaps.append(abs(casimir.planck_energy(cav, bc, t)))
        gaps.append(abs(casimir.planck_force(cav, bc, t) - casimir.rj_force(cav, bc, t)))
        gaps.append(abs(casimir.planck_entropy(cav, bc, t) - casimir.rj_entropy(cav, bc)))
    worst = max(gaps)
    return worst < 1e-3, f"max gap to equipartition limits at T=50: {worst:.2e}"


def _rj_entropy_first_law():
    worst = 0.0
    for x in (0.3, 1.0, 1.2, 2.5):
        for bc in (LIKE, UNLIKE):
            cav = Cavity(3.0, x)
            worst = max(worst, abs(rj_entropy_oracle(cav, bc) - casimir.rj_entropy(cav, bc)))
    return worst < 1e-8, f"max |integral of X/T - closed form| = {worst:.2e}"


def _force_monotone():
    cav = Cavity(3.0, 1.0)
    temps = (0.0, 0.5, 1.0, 2.0, 3.0)
    like = [casimir.planck_force(cav, LIKE, t) for t in temps]
    unlike = [casimir.planck_force(cav, UNLIKE, t) for t in temps]
    ok = all(b < a for a, b in zip(like, like[1:])) and all(b < a for a, b in zip(unlike, unlike[1:]))
    ok &= all(v >= 0 for v in unlike)
    return ok, f"like {like[0]:.4f}->{like[-1]:.4f}, unlike {unlike[0]:.4f}->{unlike[-1]:.2e}"


def _entropy_nonmonotone():
    cav = Cavity(3.0, 1.0)
    s = {t: casimir.planck_entropy(cav, UNLIKE, t) for t in (0.05, 0.2, 1.0)}
    return s[0.2] > s[0.05] and s[1.0] < s[0.2], ", ".join(f"S(T={t})={v:.3e}" for t, v in s.items())


def _objective_positive():
    vals = [maxent.objective(maxent.MaxEntConfig(bc=bc), c1, c2)
            for bc in (LIKE, UNLIKE) for c1, c2 in ((1, 1), (0.5, 2), (3, 0.4))]
    return min(vals) > 0, f"min objective {min(vals):.3e}"


def _quadrature_agreement():
    worst = 0.0
    for bc in (LIKE, UNLIKE):
        cfg = maxent.MaxEntConfig(bc=bc)
        a = maxent.objective(cfg, 1.0, 1.0)
        b = maxent.objective_reference(cfg, 1.0, 1.0)
        worst = max(worst, abs(a - b) / b)
    return worst < 1e-4, f"Simpson vs adaptive trapezoid relative gap {worst:.2e}"


def _local_minimum():
    eps = 0.05
    lines = []
    ok = True
    for bc in (LIKE, UNLIKE):
        cfg = maxent.MaxEntConfig(bc=bc)
        centre = maxent.objective(cfg, 1.0, 1.0)
        nbrs = {p: maxent.objective(cfg, *p) for p in
                ((1 + eps, 1), (1 - eps, 1), (1, 1 + eps), (1, 1 - eps))}
        worse = [p for p, v in nbrs.items() if v <= centre]
        ok &= not worse
        lines.append(f"{bc.value}: I(1,1)={centre:.4e}, lower at {worse or 'none'}")
    return ok, "; ".join(lines)


def checks(family=CutoffFamily.EXPONENTIAL) -> list:
    family = CutoffFamily(family)
    return [
        Check("zero-point closed form vs cutoff ladder", "modesum", _zp_oracle(family)),
        Check("cutoff-family independence", "modesum", _cutoff_independence),
        Check("equipartition Casimir energy vanishes", "modesum", _rj_energy_null(family)),
        Check("equipartition force vs cutoff ladder", "modesum", _rj_force_oracle(family)),
        Check("geometric-series constant term", "modesum", _geometric_constant),
        Check("mode interlacing", "modesum", _interlacing),
        Check("closed-form vs direct zero-point sum", "modesum", _gaussian_direct),
        Check("mirror symmetry", "casimir", _mirror),
        Check("zero-point sign structure", "casimir", _sign_structure),
        Check("first law dF = dU - T dS", "casimir", _first_law),
        Check("force = -d(free energy)/dx", "casimir", _force_duality),
        Check("entropy = -d(free energy)/dT", "casimir", _entropy_duality),
        Check("high-temperature limits", "casimir", _high_t_limits),
        Check("equipartition entropy from first law", "casimir", _rj_entropy_first_law),
        Check("force monotone in temperature", "casimir", _force_monotone),
        Check("unlike entropy rises then falls", "casimir", _entropy_nonmonotone),
        Check("objective positive", "maxent", _objective_positive),
        Check("quadrature agreement", "maxent", _quadrature_agreement),
        Check("local minimum at Planck point", "maxent", _local_minimum),
    ]


def run_checks(family=CutoffFamily.EXPONENTIAL, groups=None, stream=None):
    """Run the suite, print one line per check and return ``(all_passed, results)``."""
    results = []
    for check in checks(family):
        if groups and check.group not in groups:
            continue
        try:
            passed, detail = check.run()
        except Exception as exc:  # a crashing oracle is a failed check, not a crash
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((check, bool(passed), detail))
        if stream is not None:
            print(f"{'PASS' if passed else 'FAIL'}  [{check.group}] {check.name}: {detail}", file=stream)
    return all(p for _, p, _ in results), results
