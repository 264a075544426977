"""Unit conversion utilities for the decibel and linear power domains.

Everything in this package is carried as dB-domain floats; this module is
the only place that crosses between linear and logarithmic values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

BOLTZMANN = 1.380649e-23  # J/K, exact SI value
SPEED_OF_LIGHT = 299_792_458.0  # m/s
REFERENCE_TEMPERATURE = 290.0  # K

DBM_OFFSET = 30.0


@dataclass(frozen=True)
class PhysicalConstants:
    boltzmann: float = BOLTZMANN
    speed_of_light: float = SPEED_OF_LIGHT
    reference_temperature: float = REFERENCE_TEMPERATURE


CONSTANTS = PhysicalConstants()


def _require_positive(x: float, what: str) -> None:
    # `not x > 0` also rejects NaN
    if not x > 0:
        raise DomainError(f"{what} must be positive, got {x!r}")


def ratio_to_db(x: float) -> float:
    """Convert a positive linear power ratio to dB: ``10 log10(x)``."""
    _require_positive(x, "linear ratio")
    return 10.0 * math.log10(x)


def db_to_ratio(x_db: float) -> float:
    """Convert dB to a linear power ratio: ``10^(x_db / 10)``."""
    return 10.0 ** (x_db / 10.0)


def watts_to_dbw(p_w: float) -> float:
    """Absolute power in watts to dBW.

    Raises
    ------
    DomainError
        If ``p_w`` is not strictly positive.
    """
    _require_positive(p_w, "power")
    return 10.0 * math.log10(p_w)


def dbw_to_watts(p_dbw: float) -> float:
    return 10.0 ** (p_dbw / 10.0)


def dbw_to_dbm(p_dbw: float) -> float:
    return p_dbw + DBM_OFFSET


def dbm_to_dbw(p_dbm: float) -> float:
    return p_dbm - DBM_OFFSET


class PowerReference(str, Enum):
    DBW = "dBW"
    DBM = "dBm"
    WATTS = "W"


@dataclass(frozen=True)
class PowerLevel:
    """A power value tagged with the reference it is expressed in."""

    value: float
    reference: PowerReference = PowerReference.DBW

    def __post_init__(self) -> None:
        object.__setattr__(self, "reference", PowerReference(self.reference))
        if self.reference is PowerReference.WATTS:
            _require_positive(self.value, "power")

    @classmethod
    def from_watts(cls, p_w: float) -> PowerLevel:
        return cls(p_w, PowerReference.WATTS)

    @property
    def dbw(self) -> float:
        if self.reference is PowerReference.DBW:
            return self.value
        if self.reference is PowerReference.DBM:
            return dbm_to_dbw(self.value)
        return watts_to_dbw(self.value)

    @property
    def dbm(self) -> float:
        if self.reference is PowerReference.DBM:
            return self.value
        return dbw_to_dbm(self.dbw)

    @property
    def watts(self) -> float:
        if self.reference is PowerReference.WATTS:
            return self.value
        return dbw_to_watts(self.dbw)

    def to(self, reference: PowerReference | str) -> PowerLevel:
        """Re-express this power in another reference."""
        reference = PowerReference(reference)
        if reference is self.reference:
            return self
        if reference is PowerReference.DBW:
            return PowerLevel(self.dbw, reference)
        if reference is PowerReference.DBM:
            return PowerLevel(self.dbm, reference)
        return PowerLevel(self.watts, reference)

    def __str__(self) -> str:
        return f"{self.value:.2f} {self.reference.value}"


def convert_power(p: PowerLevel, reference: PowerReference | str) -> PowerLevel:
    return p.to(reference)


def wavelength_from_frequency(frequency_hz: float) -> float:
    """Free-space wavelength in metres for a carrier frequency in Hz."""
    _require_positive(frequency_hz, "frequency")
    return SPEED_OF_LIGHT / frequency_hz


def power_sum_db(a_db: float, b_db: float | None = None) -> float:
    """Add two powers given in dB (same reference) in the linear domain.

    ``b_db=None`` stands for an absent addend and returns ``a_db`` unchanged.
    The larger term is factored out so that widely separated inputs do not
    underflow.
    """
    if b_db is None:
        return a_db
    hi, lo = (a_db, b_db) if a_db >= b_db else (b_db, a_db)
    return hi + 10.0 * math.log10(1.0 + 10.0 ** ((lo - hi) / 10.0))
