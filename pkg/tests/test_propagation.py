import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewlink.errors import DomainError
from ewlink.propagation import (
    AntennaSpec,
    PathGeometry,
    TargetSpec,
    effective_area,
    eirp,
    free_space_loss,
    gain_from_beamwidths,
    power_density,
    reception_solid_angle,
    target_gain,
    target_gain_expanded,
)

LAM_1G3 = 299_792_458.0 / 1.3e9


def test_gain_from_beamwidths_reference_radar():
    assert gain_from_beamwidths(0.18, 20.0, 1.0) == pytest.approx(40.59, abs=0.01)


def test_gain_from_beamwidths_isotropic():
    side = math.degrees(math.sqrt(4 * math.pi))
    assert gain_from_beamwidths(side, side, 1.0) == pytest.approx(0.0, abs=1e-12)


def test_gain_from_beamwidths_pencil():
    assert gain_from_beamwidths(15.0, 15.0, 1.0) == pytest.approx(22.63, abs=0.01)


def test_gain_efficiency_scales_linearly():
    assert gain_from_beamwidths(10, 10, 0.5) == pytest.approx(gain_from_beamwidths(10, 10, 1.0) - 10 * math.log10(2))


@pytest.mark.parametrize("az, el, eff", [(0, 10, 1), (10, 361, 1), (10, 10, 0), (10, 10, 1.2), (-1, 5, 1)])
def test_gain_from_beamwidths_domain(az, el, eff):
    with pytest.raises(DomainError):
        gain_from_beamwidths(az, el, eff)


def test_antenna_spec():
    assert AntennaSpec(gain_db=12.5).gain == 12.5
    beam = AntennaSpec(az_beamwidth_deg=0.18, el_beamwidth_deg=20.0, efficiency=1.0)
    assert beam.gain == gain_from_beamwidths(0.18, 20.0, 1.0)
    assert AntennaSpec(az_beamwidth_deg=0.18, el_beamwidth_deg=20.0).gain == beam.gain
    with pytest.raises(DomainError):
        AntennaSpec(gain_db=3.0, az_beamwidth_deg=1.0, el_beamwidth_deg=1.0)
    with pytest.raises(DomainError):
        AntennaSpec(az_beamwidth_deg=1.0)
    with pytest.raises(DomainError):
        AntennaSpec(az_beamwidth_deg=1.0, el_beamwidth_deg=1.0, efficiency=2.0)


def test_eirp():
    assert eirp(0.0, 0.0) == 0.0
    assert eirp(43.909, 40.59) == pytest.approx(84.50, abs=0.01)
    assert eirp(38.325, 22.63) == pytest.approx(60.96, abs=0.01)


def test_power_density():
    assert power_density(0.0, 1.0) == pytest.approx(-10.99, abs=0.01)
    assert power_density(84.50, 10e3) == pytest.approx(-6.49, abs=0.02)
    assert power_density(0.0, 10.0) - power_density(0.0, 20.0) == pytest.approx(20 * math.log10(2), abs=1e-12)
    with pytest.raises(DomainError):
        power_density(0.0, 0.0)


def test_effective_area():
    assert effective_area(0.230610, 0.0) == pytest.approx(4.232e-3, abs=1e-6)
    assert effective_area(0.230610, 40.59) == pytest.approx(48.50, abs=0.1)
    assert effective_area(1.0, 10 * math.log10(4 * math.pi)) == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(DomainError):
        effective_area(0.0, 0.0)


def test_reception_solid_angle():
    assert reception_solid_angle(0.230610, 40.59, 10e3) == pytest.approx(4.85e-7, abs=1e-9)
    assert reception_solid_angle(0.5, 0.0, 7.0) == pytest.approx(0.5**2 / (4 * math.pi * 49.0), rel=1e-12)
    assert reception_solid_angle(0.3, 0.0, 1.0) == pytest.approx(7.162e-3, abs=1e-5)


@given(
    st.floats(min_value=1e-3, max_value=10.0),
    st.floats(min_value=-20.0, max_value=60.0),
    st.floats(min_value=1.0, max_value=1e6),
)
def test_solid_angle_area_consistency(lam, g, r):
    assert reception_solid_angle(lam, g, r) * r**2 == pytest.approx(effective_area(lam, g), rel=1e-12)


def test_free_space_loss_examples():
    assert free_space_loss(1e3, frequency_hz=1e9, variant="km_GHz_form") == pytest.approx(92.45, abs=1e-12)
    assert free_space_loss(1e3, frequency_hz=1e9) == pytest.approx(92.45, abs=0.01)
    assert free_space_loss(10e3, frequency_hz=1.3e9) == pytest.approx(114.73, abs=0.01)
    ten_x = free_space_loss(10e3, wavelength_m=0.3) - free_space_loss(1e3, wavelength_m=0.3)
    assert ten_x == pytest.approx(20.0, abs=1e-12)


def test_free_space_loss_wavelength_and_frequency_agree():
    assert free_space_loss(5e3, wavelength_m=LAM_1G3) == pytest.approx(free_space_loss(5e3, frequency_hz=1.3e9), abs=1e-12)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"frequency_hz": 1e9, "wavelength_m": 0.3},
        {},
        {"frequency_hz": -1.0},
        {"wavelength_m": 0.0},
        {"frequency_hz": 1e9, "variant": "bogus"},
    ],
)
def test_free_space_loss_bad_inputs(kwargs):
    with pytest.raises(DomainError):
        free_space_loss(1e3, **kwargs)


@given(
    st.floats(min_value=1.0, max_value=1e6),
    st.floats(min_value=1e6, max_value=100e9),
    st.sampled_from(["wavelength_form", "km_GHz_form", "km_MHz_form"]),
)
def test_free_space_loss_variants_agree(r, f, variant):
    exact = free_space_loss(r, frequency_hz=f)
    assert abs(free_space_loss(r, frequency_hz=f, variant=variant) - exact) < 0.02


def test_target_gain_examples():
    assert target_gain(LAM_1G3**2 / (4 * math.pi), LAM_1G3) == pytest.approx(0.0, abs=1e-12)
    assert target_gain(3.0, 0.230610) == pytest.approx(28.51, abs=0.02)
    assert target_gain(0.005, 0.230610) == pytest.approx(0.72, abs=0.02)
    with pytest.raises(DomainError):
        target_gain(0.0, 0.23)


@given(st.floats(min_value=1e-6, max_value=1e4), st.floats(min_value=1e-3, max_value=100.0))
def test_target_gain_expansion(rcs, lam):
    assert target_gain(rcs, lam) == pytest.approx(target_gain_expanded(rcs, lam), abs=1e-9)


@given(
    st.floats(min_value=1e-4, max_value=1e3),
    st.floats(min_value=1e-3, max_value=10.0),
    st.floats(min_value=1e-3, max_value=1e3),
)
def test_target_gain_scale_invariance(rcs, lam, k):
    assert target_gain(k**2 * rcs, k * lam) == pytest.approx(target_gain(rcs, lam), abs=1e-9)


def test_target_gain_monotone():
    assert target_gain(10.0, 0.3) - target_gain(1.0, 0.3) == pytest.approx(10.0, abs=1e-12)
    assert target_gain(2.0, 0.3) > target_gain(1.0, 0.3)
    assert target_gain(1.0, 0.3) > target_gain(1.0, 0.4)


def test_value_types_validate():
    with pytest.raises(DomainError):
        PathGeometry(0.0, 1.0)
    with pytest.raises(DomainError):
        TargetSpec("x", -1.0)
    assert PathGeometry.from_frequency(1e3, 299_792_458.0).wavelength_m == 1.0
