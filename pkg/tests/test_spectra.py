import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir1d import spectra
from casimir1d.errors import InvalidParameter
from casimir1d.spectra import PLANCK_ZP, RAYLEIGH_JEANS, ZERO_POINT, interpolated

E = math.e


def planck_forms(omega, t):
    """The three textbook forms of the Planck law with zero-point energy."""
    y = omega / t
    return (
        omega * math.exp(-y) / (1 - math.exp(-y)) + omega / 2,
        omega / (math.exp(y) - 1) + omega / 2,
        0.5 * omega / math.tanh(0.5 * y),
    )


def test_planck_energy_matches_all_three_forms():
    forms = planck_forms(1.0, 1.0)
    assert max(forms) - min(forms) < 1e-15
    assert spectra.energy_per_mode(PLANCK_ZP, 1.0, 1.0) == pytest.approx(1 / (E - 1) + 0.5, rel=1e-15)
    assert spectra.energy_per_mode(PLANCK_ZP, 1.0, 1.0) == pytest.approx(1.081977, abs=1e-6)


def test_zero_temperature_limits():
    assert spectra.energy_per_mode(PLANCK_ZP, 1.0, 0.0) == 0.5
    assert spectra.free_energy_per_mode(1.0, 0.0) == 0.5
    assert spectra.force_per_mode(1.0, 1.0, 0.0) == 0.5
    assert spectra.energy_per_mode(ZERO_POINT, 3.0) == 1.5


def test_interpolated_at_unit_parameters_is_planck():
    assert spectra.energy_per_mode(interpolated(1, 1), 2.3, 0.7) == pytest.approx(
        spectra.energy_per_mode(PLANCK_ZP, 2.3, 0.7), rel=1e-15)
    omega = np.geomspace(1e-3, 80, 50)
    np.testing.assert_allclose(spectra.thermal_energy_per_mode(interpolated(1, 1), omega, 1.3),
                               spectra.thermal_energy_per_mode(PLANCK_ZP, omega, 1.3), rtol=1e-14)


def test_equipartition():
    assert spectra.energy_per_mode(RAYLEIGH_JEANS, 5.0, 2.0) == 2.0
    assert spectra.thermal_energy_per_mode(RAYLEIGH_JEANS, 5.0, 2.0) == 2.0


def test_thermal_energy():
    assert spectra.thermal_energy_per_mode(PLANCK_ZP, 1.0, 1.0) == pytest.approx(1 / (E - 1), rel=1e-15)
    assert 0 < spectra.thermal_energy_per_mode(PLANCK_ZP, 40.0, 1.0) < 1e-15
    with pytest.raises(InvalidParameter):
        spectra.thermal_energy_per_mode(ZERO_POINT, 1.0, 1.0)


def test_free_energy_forms_agree():
    direct = math.log(2 * math.sinh(0.5))
    stable = 0.5 + math.log(1 - 1 / E)
    assert abs(direct - stable) < 1e-12
    assert spectra.free_energy_per_mode(1.0, 1.0) == pytest.approx(stable, abs=1e-14)
    assert spectra.free_energy_per_mode(1.0, 1.0) == pytest.approx(0.0413249, abs=1e-7)


def test_free_energy_classical_limit_negative_and_decreasing():
    temps = [10.0, 100.0, 1000.0]
    vals = [spectra.free_energy_per_mode(1.0, t) for t in temps]
    assert all(v < 0 for v in vals)
    assert vals[0] > vals[1] > vals[2]


def test_no_overflow_far_in_tail():
    assert spectra.energy_per_mode(PLANCK_ZP, 1e4, 1.0) == 5e3
    assert spectra.free_energy_per_mode(1e4, 1.0) == 5e3
    assert spectra.entropy_per_mode(PLANCK_ZP, 1e4, 1.0) == 0.0
    assert spectra.force_per_mode(1e4, 2.0, 1.0) == 2.5e3


def test_entropy_values():
    assert spectra.entropy_per_mode(PLANCK_ZP, 20.0, 1.0) < 1e-7
    small = spectra.entropy_per_mode(PLANCK_ZP, 1e-3, 1.0)
    assert small == pytest.approx(-math.log(1e-3) + 1, rel=1e-4)
    expected = -math.log(2 * math.sinh(0.5)) + 0.5 / math.tanh(0.5)
    assert spectra.entropy_per_mode(PLANCK_ZP, 1.0, 1.0) == pytest.approx(expected, rel=1e-14)
    u, f = spectra.energy_per_mode(PLANCK_ZP, 1.0, 1.0), spectra.free_energy_per_mode(1.0, 1.0)
    assert expected == pytest.approx(u - f, rel=1e-14)
    assert spectra.entropy_per_mode(ZERO_POINT, 2.0, 1.0) == 0.0
    assert spectra.entropy_per_mode(RAYLEIGH_JEANS, 2.0, 1.0) == pytest.approx(1 - math.log(2.0))


def test_entropy_undefined_for_interpolated():
    with pytest.raises(InvalidParameter):
        spectra.entropy_per_mode(interpolated(2, 1), 1.0, 1.0)


def test_force_per_mode():
    expected = 0.25 / math.tanh(0.5)
    thermal_split = 1 / (2 * 2) + (1 / 2) / (E - 1)
    assert expected == pytest.approx(thermal_split, rel=1e-14)
    assert spectra.force_per_mode(1.0, 2.0, 1.0) == pytest.approx(expected, rel=1e-14)
    assert spectra.force_per_mode(1e-8, 1.0, 1.0) == pytest.approx(1.0, rel=1e-8)
    assert spectra.force_per_mode(1.0, 2.0, 1.0) - 0.25 == pytest.approx(
        spectra.thermal_force_per_mode(1.0, 2.0, 1.0), rel=1e-14)


@pytest.mark.parametrize("bad", [
    lambda: spectra.energy_per_mode(PLANCK_ZP, 0.0, 1.0),
    lambda: spectra.energy_per_mode(PLANCK_ZP, 1.0, -1.0),
    lambda: spectra.energy_per_mode(RAYLEIGH_JEANS, 1.0, 0.0),
    lambda: spectra.energy_per_mode(interpolated(1, 1), 1.0, 0.0),
    lambda: interpolated(0, 1),
    lambda: interpolated(1, -2),
    lambda: spectra.ModePoint(-1.0, 1.0),
    lambda: spectra.force_per_mode(1.0, 0.0, 1.0),
])
def test_invalid_parameters(bad):
    with pytest.raises(InvalidParameter):
        bad()


omegas = st.floats(0.01, 50.0)
temps = st.floats(0.1, 10.0)


@given(omegas, temps)
def test_entropy_is_energy_minus_free_energy_over_t(omega, t):
    s = spectra.entropy_per_mode(PLANCK_ZP, omega, t)
    u = spectra.energy_per_mode(PLANCK_ZP, omega, t)
    f = spectra.free_energy_per_mode(omega, t)
    assert abs(s - (u - f) / t) < 1e-10


@given(omegas, temps)
def test_entropy_is_minus_dF_dT(omega, t):
    h = 1e-5 * t
    fd = -(spectra.free_energy_per_mode(omega, t + h) - spectra.free_energy_per_mode(omega, t - h)) / (2 * h)
    s = spectra.entropy_per_mode(PLANCK_ZP, omega, t)
    # the 1e-6 relative target is met wherever rounding in F/h stays below it
    assert abs(fd - s) <= 1e-6 * abs(s) + 1e-15 * abs(spectra.free_energy_per_mode(omega, t)) / h


@given(omegas, st.floats(0.1, 9.0), st.floats(1e-3, 1.0))
def test_planck_energy_monotone_in_t_and_above_zero_point(omega, t, dt):
    lo = spectra.energy_per_mode(PLANCK_ZP, omega, t)
    hi = spectra.energy_per_mode(PLANCK_ZP, omega, t + dt)
    assert hi >= lo >= 0.5 * omega


@given(omegas, temps, st.sampled_from([0.5, 2.0, 10.0]))
def test_wien_scaling(omega, t, lam):
    a = spectra.energy_per_mode(PLANCK_ZP, lam * omega, lam * t) / (lam * omega)
    b = spectra.energy_per_mode(PLANCK_ZP, omega, t) / omega
    assert a == pytest.approx(b, rel=1e-12)


@settings(max_examples=50)
@given(st.floats(0.25, 4.0), st.floats(0.25, 4.0))
def test_interpolated_limits(c1, c2):
    model = interpolated(c1, c2)
    t = 1.0
    assert spectra.energy_per_mode(model, 1e-7, t) == pytest.approx(t, rel=1e-5)
    big = 400.0 / min(c1, c2)
    assert spectra.energy_per_mode(model, big, t) == pytest.approx(0.5 * big, rel=1e-12)
