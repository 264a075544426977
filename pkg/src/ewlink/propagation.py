"""Antenna, spreading and free-space-loss building blocks.

Losses are returned as positive dB numbers and subtracted by callers.
Angles enter in degrees and are converted to radians internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .db_units import SPEED_OF_LIGHT, db_to_ratio, ratio_to_db, wavelength_from_frequency
from .errors import DomainError

FOUR_PI = 4.0 * math.pi
FOUR_PI_DB = 10.0 * math.log10(FOUR_PI)

# rounded constants of the textbook dB forms of the free-space loss
FSL_CONST_WAVELENGTH_DB = 21.98
FSL_CONST_KM_GHZ_DB = 92.45
FSL_CONST_KM_MHZ_DB = 32.45

FSL_VARIANTS = ("exact", "wavelength_form", "km_GHz_form", "km_MHz_form")


def _positive(x: float, what: str) -> None:
    if not x > 0:
        raise DomainError(f"{what} must be positive, got {x!r}")


def gain_from_beamwidths(az_deg: float, el_deg: float, efficiency: float = 1.0) -> float:
    """Directive gain in dB from the beam solid angle.

    G = efficiency * 4 pi / (theta_az * theta_el), with both beamwidths in
    radians.
    """
    for name, angle in (("azimuth beamwidth", az_deg), ("elevation beamwidth", el_deg)):
        if not 0.0 < angle <= 360.0:
            raise DomainError(f"{name} must lie in (0, 360] degrees, got {angle!r}")
    if not 0.0 < efficiency <= 1.0:
        raise DomainError(f"antenna efficiency must lie in (0, 1], got {efficiency!r}")
    beam_sr = math.radians(az_deg) * math.radians(el_deg)
    return ratio_to_db(efficiency * FOUR_PI / beam_sr)


@dataclass(frozen=True)
class AntennaSpec:
    """Either a direct gain in dB or a beamwidth/efficiency triple.

    >>> round(AntennaSpec(az_beamwidth_deg=0.18, el_beamwidth_deg=20.0).gain, 2)
    40.59
    """

    gain_db: float | None = None
    az_beamwidth_deg: float | None = None
    el_beamwidth_deg: float | None = None
    efficiency: float | None = None

    def __post_init__(self) -> None:
        beam = (self.az_beamwidth_deg, self.el_beamwidth_deg)
        has_beam = any(v is not None for v in beam)
        if self.gain_db is not None and (has_beam or self.efficiency is not None):
            raise DomainError("antenna takes either gain_db or beamwidths, not both")
        if self.gain_db is None:
            if not all(v is not None for v in beam):
                raise DomainError("antenna needs gain_db or both beamwidths")
            # validates ranges eagerly
            gain_from_beamwidths(*beam, self._efficiency)
        elif not math.isfinite(self.gain_db):
            raise DomainError(f"antenna gain must be finite, got {self.gain_db!r}")

    @property
    def _efficiency(self) -> float:
        return 1.0 if self.efficiency is None else self.efficiency

    @property
    def uses_beamwidths(self) -> bool:
        return self.gain_db is None

    @property
    def gain(self) -> float:
        """Resolved gain in dB."""
        if self.gain_db is not None:
            return self.gain_db
        return gain_from_beamwidths(self.az_beamwidth_deg, self.el_beamwidth_deg, self._efficiency)


@dataclass(frozen=True)
class PathGeometry:
    range_m: float
    wavelength_m: float

    def __post_init__(self) -> None:
        _positive(self.range_m, "range")
        _positive(self.wavelength_m, "wavelength")

    @classmethod
    def from_frequency(cls, range_m: float, frequency_hz: float) -> PathGeometry:
        return cls(range_m, wavelength_from_frequency(frequency_hz))


@dataclass(frozen=True)
class TargetSpec:
    name: str
    rcs_m2: float

    def __post_init__(self) -> None:
        if not self.name:
            raise DomainError("target name must be non-empty")
        _positive(self.rcs_m2, f"RCS of target {self.name!r}")


def eirp(p_tx_dbw: float, g_tx_db: float) -> float:
    return p_tx_dbw + g_tx_db


def spreading_loss(range_m: float) -> float:
    """Sphere-surface spreading ``10 log10(4 pi R^2)`` in dB(m^2), positive."""
    _positive(range_m, "range")
    return ratio_to_db(FOUR_PI * range_m**2)


def power_density(eirp_dbw: float, range_m: float) -> float:
    """Power density in dB(W/m^2) at distance ``range_m`` from an EIRP."""
    return eirp_dbw - spreading_loss(range_m)


def effective_area(wavelength_m: float, g_rx_db: float) -> float:
    """Effective aperture in m^2 of an antenna with gain ``g_rx_db``."""
    _positive(wavelength_m, "wavelength")
    return wavelength_m**2 * db_to_ratio(g_rx_db) / FOUR_PI


def reception_solid_angle(wavelength_m: float, g_rx_db: float, range_m: float) -> float:
    _positive(range_m, "range")
    return effective_area(wavelength_m, g_rx_db) / range_m**2


def free_space_loss(
    range_m: float,
    *,
    wavelength_m: float | None = None,
    frequency_hz: float | None = None,
    variant: str = "exact",
) -> float:
    """One-way free-space loss in dB (positive).

    Exactly one of ``wavelength_m`` / ``frequency_hz`` must be given.
    ``variant`` picks the exact ``20 log10(4 pi R / lambda)`` or one of the
    rounded-constant forms (metres/wavelength, km/GHz, km/MHz); all agree
    with the exact form to about 0.005 dB.
    """
    if (wavelength_m is None) == (frequency_hz is None):
        raise DomainError("give exactly one of wavelength_m or frequency_hz")
    _positive(range_m, "range")
    if wavelength_m is None:
        _positive(frequency_hz, "frequency")
        wavelength_m = wavelength_from_frequency(frequency_hz)
    else:
        _positive(wavelength_m, "wavelength")
        frequency_hz = SPEED_OF_LIGHT / wavelength_m

    if variant == "exact":
        return 20.0 * math.log10(FOUR_PI * range_m / wavelength_m)
    if variant == "wavelength_form":
        return FSL_CONST_WAVELENGTH_DB + 20.0 * math.log10(range_m) - 20.0 * math.log10(wavelength_m)
    if variant == "km_GHz_form":
        return FSL_CONST_KM_GHZ_DB + 20.0 * math.log10(range_m / 1e3) + 20.0 * math.log10(frequency_hz / 1e9)
    if variant == "km_MHz_form":
        return FSL_CONST_KM_MHZ_DB + 20.0 * math.log10(range_m / 1e3) + 20.0 * math.log10(frequency_hz / 1e6)
    raise DomainError(f"unknown free-space-loss variant {variant!r}; expected one of {FSL_VARIANTS}")


def target_gain(rcs_m2: float, wavelength_m: float) -> float:
    """Radar cross section recast as a dimensionless gain, ``4 pi sigma / lambda^2`` in dB.

    A zero or negative RCS has no gain and is rejected.
    """
    _positive(rcs_m2, "RCS")
    _positive(wavelength_m, "wavelength")
    return ratio_to_db(FOUR_PI * rcs_m2 / wavelength_m**2)


def target_gain_expanded(rcs_m2: float, wavelength_m: float) -> float:
    """Same quantity summed term by term: 10log(4pi) + 10log(sigma) - 20log(lambda)."""
    _positive(rcs_m2, "RCS")
    _positive(wavelength_m, "wavelength")
    return FOUR_PI_DB + 10.0 * math.log10(rcs_m2) - 20.0 * math.log10(wavelength_m)
