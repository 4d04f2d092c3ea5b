import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from casimir1d import modesum
from casimir1d.errors import DegenerateCutoff, IllConditionedLadder, InvalidParameter
from casimir1d.modesum import (BoundaryPair, CutoffFamily, CutoffSpec, Kernel,
                               convergent_thermal_sum, extrapolate_ladder,
                               geometric_cutoff_sum, mode_frequency, regularized_zp_sum)

LIKE, UNLIKE = BoundaryPair.LIKE, BoundaryPair.UNLIKE


def test_mode_ladders():
    assert mode_frequency(1, 1.0, LIKE) == pytest.approx(math.pi)
    assert mode_frequency(1, 1.0, UNLIKE) == pytest.approx(math.pi / 2)
    assert mode_frequency(3, 2.0, UNLIKE) == pytest.approx(2.5 * math.pi / 2)
    with pytest.raises(InvalidParameter):
        mode_frequency(0, 1.0, LIKE)


@given(st.floats(0.05, 20.0), st.integers(1, 1000))
def test_unlike_modes_interlace_like_modes(length, n):
    assert (mode_frequency(n - 1, length, LIKE) if n > 1 else 0.0) \
        < mode_frequency(n, length, UNLIKE) < mode_frequency(n, length, LIKE)


def test_boundary_pair_parse():
    assert BoundaryPair.parse("Like") is LIKE
    assert BoundaryPair.parse(UNLIKE) is UNLIKE
    assert (LIKE.alpha, UNLIKE.alpha) == (0, 1)
    with pytest.raises(InvalidParameter):
        BoundaryPair.parse("mixed")


def test_geometric_sum_expansion():
    a = 0.01 * math.pi
    value = geometric_cutoff_sum(1.0, LIKE, CutoffSpec(lam=0.01))
    assert value == pytest.approx(1 / a - 0.5, abs=3e-3)
    assert value == pytest.approx(1 / a - 0.5 + a / 12, abs=1e-6)
    unlike = geometric_cutoff_sum(1.0, UNLIKE, CutoffSpec(lam=0.01))
    assert unlike == pytest.approx(1 / a - a / 24, abs=1e-6)


def test_geometric_sum_closed_form_matches_direct_count():
    spec = CutoffSpec(lam=0.05)
    direct = modesum.cutoff_mode_sum(2.0, UNLIKE, 0.05, CutoffFamily.EXPONENTIAL, np.ones_like)
    assert geometric_cutoff_sum(2.0, UNLIKE, spec) == pytest.approx(direct, rel=1e-13)


@pytest.mark.parametrize("bc", [LIKE, UNLIKE])
def test_zp_closed_form_matches_direct_sum(bc):
    spec = CutoffSpec.from_ladder((0.2, 0.1, 0.05))
    closed = regularized_zp_sum(1.5, bc, spec)
    direct = regularized_zp_sum(1.5, bc, spec, direct=True)
    for a, b in zip(closed, direct):
        assert a.value == pytest.approx(b.value, rel=1e-12)


def test_zp_sum_leading_divergence():
    # sum (omega_n/2) e^{-Lambda omega_n} ~ L/(2 pi Lambda^2)
    for lam in (1e-2, 1e-3):
        (val,) = regularized_zp_sum(2.0, LIKE, CutoffSpec(lam=lam))
        assert val.value * lam**2 == pytest.approx(2.0 / (2 * math.pi), rel=5 * lam)


def test_extrapolate_polynomial_exactly():
    pts = [(l, 3.0 + 2 * l - 5 * l**2 + l**3) for l in (0.4, 0.2, 0.1, 0.05)]
    res = extrapolate_ladder(pts)
    assert res.value == pytest.approx(3.0, abs=1e-12)
    assert res.lambda_used == 0.05


def test_extrapolate_smooth_function():
    pts = [(l, math.exp(l)) for l in (0.08, 0.04, 0.02, 0.01)]
    res = extrapolate_ladder(pts)
    assert res.value == pytest.approx(1.0, abs=1e-7)
    assert abs(res.value - 1.0) < res.error_estimate < 1e-4


def test_extrapolate_rejects_diverging_ladder():
    pts = [(0.08, 0.0), (0.04, 0.0), (0.02, 0.0), (0.01, 1.0)]
    with pytest.raises(IllConditionedLadder):
        extrapolate_ladder(pts)


@pytest.mark.parametrize("pts", [
    [(0.1, 1.0), (0.05, 1.0)],
    [(0.1, 1.0), (0.2, 1.0), (0.05, 1.0)],
    [(0.1, 1.0), (0.0, 1.0), (-0.1, 1.0)],
])
def test_extrapolate_rejects_bad_ladders(pts):
    with pytest.raises(InvalidParameter):
        extrapolate_ladder(pts)


def test_cutoff_spec_validation():
    with pytest.raises(InvalidParameter):
        CutoffSpec(lam=0.0)
    with pytest.raises(InvalidParameter):
        CutoffSpec(lam=0.01, ladder=(0.02, 0.03, 0.01))
    with pytest.raises(InvalidParameter):
        CutoffSpec(lam=0.01, ladder=(0.04, 0.02))
    assert CutoffSpec.from_ladder([0.1, 0.05]).lam == 0.05


def test_thermal_energy_sum_matches_brute_force():
    n = np.arange(1, 200001)
    w = math.pi * n / 3.0
    with np.errstate(over="ignore"):
        brute = math.fsum(w / np.expm1(w))
    assert convergent_thermal_sum(3.0, LIKE, 1.0, Kernel.THERMAL_ENERGY) == pytest.approx(brute, rel=1e-13)
    assert brute == pytest.approx(1.114429558094751, rel=1e-13)


@pytest.mark.parametrize("kernel", list(Kernel))
def test_thermal_sum_stops_and_is_blocking_independent(kernel, monkeypatch):
    base = convergent_thermal_sum(2.0, UNLIKE, 2.5, kernel)
    monkeypatch.setattr(modesum, "_BLOCK", 7)
    assert convergent_thermal_sum(2.0, UNLIKE, 2.5, kernel) == pytest.approx(base, rel=1e-15)


def test_thermal_sum_rejects_zero_point_and_non_planck_kernels():
    from casimir1d.spectra import RAYLEIGH_JEANS, ZERO_POINT, interpolated
    for model in (ZERO_POINT, RAYLEIGH_JEANS):
        with pytest.raises(InvalidParameter):
            convergent_thermal_sum(1.0, LIKE, 1.0, Kernel.THERMAL_ENERGY, model)
    with pytest.raises(InvalidParameter):
        convergent_thermal_sum(1.0, LIKE, 1.0, Kernel.ENTROPY, interpolated(2, 1))
    with pytest.raises(InvalidParameter):
        convergent_thermal_sum(1.0, LIKE, 0.0, Kernel.ENTROPY)


def test_cutoff_exponent_guard():
    with pytest.raises(DegenerateCutoff):
        geometric_cutoff_sum(1e-3, LIKE, CutoffSpec(lam=1.0))


def test_extrapolate_accepts_rounding_noise_with_floor():
    pts = [(0.08, -9e-16), (0.04, -6e-15), (0.02, -1.2e-14), (0.01, -2.7e-14)]
    with pytest.raises(IllConditionedLadder):
        extrapolate_ladder(pts)
    assert abs(extrapolate_ladder(pts, atol=1e-10).value) < 1e-12
