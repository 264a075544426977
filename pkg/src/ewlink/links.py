"""Link-budget chains: telecom, radar echo, radar-warning receiver and jammer.

Every chain returns a :class:`LinkBudget`, an ordered list of additive dB
terms whose left-to-right sum is the received power in dBW.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .db_units import dbw_to_watts, ratio_to_db, watts_to_dbw, wavelength_from_frequency
from .errors import DomainError
from .propagation import (
    FOUR_PI,
    AntennaSpec,
    PathGeometry,
    TargetSpec,
    effective_area,
    free_space_loss,
    spreading_loss,
    target_gain,
)

FORMULATIONS = ("stepwise", "target_gain_chain", "collapsed")

TERM_KINDS = ("power", "gain", "loss", "bandwidth_ratio")

DEFAULT_PULSED_THRESHOLD_DBM = -40.0
DEFAULT_CW_THRESHOLD_DBM = -50.0


@dataclass(frozen=True)
class RadarSystem:
    power_w: float
    antenna_tx: AntennaSpec
    antenna_rx: AntennaSpec
    frequency_hz: float
    bandwidth_hz: float
    noise_figure_db: float = 0.0
    mod_db: float = 0.0
    temperature_k: float = 290.0
    detection_threshold_snr_db: float = 0.0

    def __post_init__(self) -> None:
        for name in ("power_w", "frequency_hz", "bandwidth_hz", "temperature_k"):
            if not getattr(self, name) > 0:
                raise DomainError(f"radar {name} must be positive, got {getattr(self, name)!r}")
        for name in ("noise_figure_db", "mod_db"):
            if not getattr(self, name) >= 0:
                raise DomainError(f"radar {name} must be >= 0, got {getattr(self, name)!r}")

    @property
    def p_tx_dbw(self) -> float:
        return watts_to_dbw(self.power_w)

    @property
    def wavelength_m(self) -> float:
        return wavelength_from_frequency(self.frequency_hz)


@dataclass(frozen=True)
class JammerSystem:
    """Noise jammer. By default it rides on the target (self-protection)."""

    power_w: float
    antenna: AntennaSpec
    bandwidth_hz: float
    include_tx_gain: bool = True
    colocated_with_target: bool = True
    standoff_range_km: float | None = None

    def __post_init__(self) -> None:
        if not self.power_w > 0:
            raise DomainError(f"jammer power_w must be positive, got {self.power_w!r}")
        if not self.bandwidth_hz > 0:
            raise DomainError(f"jammer bandwidth_hz must be positive, got {self.bandwidth_hz!r}")
        if self.colocated_with_target:
            if self.standoff_range_km is not None:
                raise DomainError("standoff_range_km only applies to a jammer not colocated with the target")
        elif self.standoff_range_km is None or not self.standoff_range_km > 0:
            raise DomainError("a standoff jammer needs a positive standoff_range_km")

    @property
    def p_tx_dbw(self) -> float:
        return watts_to_dbw(self.power_w)

    def range_to_radar_m(self, target_range_m: float) -> float:
        if self.colocated_with_target:
            return target_range_m
        return self.standoff_range_km * 1e3


@dataclass(frozen=True)
class RwrSystem:
    """Radar-warning receiver: antenna plus optional noise terms for an SNR."""

    antenna: AntennaSpec = field(default_factory=lambda: AntennaSpec(gain_db=0.0))
    pulsed_threshold_dbm: float = DEFAULT_PULSED_THRESHOLD_DBM
    cw_threshold_dbm: float = DEFAULT_CW_THRESHOLD_DBM
    bandwidth_hz: float | None = None
    noise_figure_db: float = 0.0
    mod_db: float = 0.0
    temperature_k: float = 290.0

    def __post_init__(self) -> None:
        if self.bandwidth_hz is not None and not self.bandwidth_hz > 0:
            raise DomainError(f"RWR bandwidth_hz must be positive, got {self.bandwidth_hz!r}")

    def threshold_dbm(self, signal_kind: str) -> float:
        if signal_kind == "pulsed":
            return self.pulsed_threshold_dbm
        if signal_kind == "cw":
            return self.cw_threshold_dbm
        raise DomainError(f"signal kind must be 'pulsed' or 'cw', got {signal_kind!r}")


@dataclass(frozen=True)
class BudgetTerm:
    label: str
    value_db: float
    kind: str
    # unclamped value, kept for audit when a term was limited
    raw_db: float | None = None


@dataclass(frozen=True)
class LinkBudget:
    name: str
    terms: tuple[BudgetTerm, ...]

    @property
    def total(self) -> float:
        """Received power in dBW: the terms summed in chain order."""
        total = 0.0
        for term in self.terms:
            total += term.value_db
        return total

    @property
    def total_watts(self) -> float:
        return dbw_to_watts(self.total)

    def __len__(self) -> int:
        return len(self.terms)


def budget_breakdown(budget: LinkBudget) -> list[tuple[str, float, float]]:
    """``(label, term_db, running_total)`` rows in chain order.

    The final running total is ``budget.total`` bit for bit.
    """
    rows = []
    running = 0.0
    for term in budget.terms:
        running += term.value_db
        rows.append((term.label, term.value_db, running))
    return rows


def _loss(range_m: float, wavelength_m: float) -> BudgetTerm:
    return BudgetTerm("free-space loss", -free_space_loss(range_m, wavelength_m=wavelength_m), "loss")


def telecom_link(p_tx_dbw: float, g_tx_db: float, g_rx_db: float, geometry: PathGeometry) -> LinkBudget:
    """One-way link: P_TX + G_TX - L + G_RX."""
    return LinkBudget(
        "telecom",
        (
            BudgetTerm("TX power", p_tx_dbw, "power"),
            BudgetTerm("TX gain", g_tx_db, "gain"),
            _loss(geometry.range_m, geometry.wavelength_m),
            BudgetTerm("RX gain", g_rx_db, "gain"),
        ),
    )


def telecom_power_linear(p_tx_w: float, g_tx_db: float, g_rx_db: float, geometry: PathGeometry) -> float:
    """Received power in watts from the product form P G_TX (1/L) G_RX."""
    loss = (FOUR_PI * geometry.range_m) ** 2 / geometry.wavelength_m**2
    return p_tx_w * 10 ** (g_tx_db / 10) * (1.0 / loss) * 10 ** (g_rx_db / 10)


def friis_power(p_tx_w: float, g_tx_db: float, g_rx_db: float, geometry: PathGeometry) -> float:
    """Received power in watts from the aperture-product Friis form."""
    lam = geometry.wavelength_m
    a_tx = effective_area(lam, g_tx_db)
    a_rx = effective_area(lam, g_rx_db)
    return p_tx_w * a_tx * a_rx / (lam**2 * geometry.range_m**2)


def radar_link(
    radar: RadarSystem,
    target: TargetSpec,
    range_m: float,
    formulation: str = "target_gain_chain",
) -> LinkBudget:
    """Monostatic radar echo power at the receiver.

    Three algebraically equivalent decompositions are available:

    ``stepwise``
        density at the target, times RCS, spread back, times the receive
        aperture.
    ``target_gain_chain``
        P_TX + G_TX - L + G_TRG - L + G_RX, with the RCS as a dimensionless gain.
    ``collapsed``
        the textbook P G_TX G_RX sigma lambda^2 / ((4 pi)^3 R^4).
    """
    if not range_m > 0:
        raise DomainError(f"range must be positive, got {range_m!r}")
    lam = radar.wavelength_m
    p_tx = radar.p_tx_dbw
    g_tx = radar.antenna_tx.gain
    g_rx = radar.antenna_rx.gain

    if formulation == "target_gain_chain":
        terms = (
            BudgetTerm("TX power", p_tx, "power"),
            BudgetTerm("TX gain", g_tx, "gain"),
            _loss(range_m, lam),
            BudgetTerm("target gain", target_gain(target.rcs_m2, lam), "gain"),
            _loss(range_m, lam),
            BudgetTerm("RX gain", g_rx, "gain"),
        )
    elif formulation == "stepwise":
        spread = spreading_loss(range_m)
        terms = (
            BudgetTerm("TX power", p_tx, "power"),
            BudgetTerm("TX gain", g_tx, "gain"),
            BudgetTerm("spreading loss", -spread, "loss"),
            BudgetTerm("radar cross section", ratio_to_db(target.rcs_m2), "gain"),
            BudgetTerm("spreading loss", -spread, "loss"),
            BudgetTerm("effective area", ratio_to_db(effective_area(lam, g_rx)), "gain"),
        )
    elif formulation == "collapsed":
        terms = (
            BudgetTerm("TX power", p_tx, "power"),
            BudgetTerm("TX gain", g_tx, "gain"),
            BudgetTerm("RX gain", g_rx, "gain"),
            BudgetTerm("radar cross section", ratio_to_db(target.rcs_m2), "gain"),
            BudgetTerm("wavelength squared", 20.0 * math.log10(lam), "gain"),
            BudgetTerm("(4pi)^3 R^4", -ratio_to_db(FOUR_PI**3 * range_m**4), "loss"),
        )
    else:
        raise DomainError(f"unknown radar formulation {formulation!r}; expected one of {FORMULATIONS}")
    return LinkBudget(f"radar/{formulation}", terms)


def rwr_link(radar: RadarSystem, rwr: RwrSystem, range_m: float) -> LinkBudget:
    """One-way radar emission arriving at the platform's warning receiver."""
    return LinkBudget(
        "rwr",
        (
            BudgetTerm("TX power", radar.p_tx_dbw, "power"),
            BudgetTerm("TX gain", radar.antenna_tx.gain, "gain"),
            _loss(range_m, radar.wavelength_m),
            BudgetTerm("RX gain", rwr.antenna.gain, "gain"),
        ),
    )


def bandwidth_ratio_db(radar_bandwidth_hz: float, jammer_bandwidth_hz: float) -> tuple[float, float]:
    """``(applied, raw)`` dB value of B_RDR / B_JAM.

    The applied value is capped at 0 dB: a jammer narrower than the radar
    passband couples at most its full power.
    """
    raw = ratio_to_db(radar_bandwidth_hz / jammer_bandwidth_hz)
    return min(raw, 0.0), raw


def jammer_link(jammer: JammerSystem, radar: RadarSystem, range_m: float) -> LinkBudget:
    """Jamming power J at the radar receiver, ``range_m`` being jammer to radar."""
    applied, raw = bandwidth_ratio_db(radar.bandwidth_hz, jammer.bandwidth_hz)
    terms = [BudgetTerm("TX power", jammer.p_tx_dbw, "power")]
    if jammer.include_tx_gain:
        terms.append(BudgetTerm("TX gain", jammer.antenna.gain, "gain"))
    terms += [
        _loss(range_m, radar.wavelength_m),
        BudgetTerm("bandwidth ratio", applied, "bandwidth_ratio", raw_db=raw if raw != applied else None),
        BudgetTerm("RX gain", radar.antenna_rx.gain, "gain"),
    ]
    return LinkBudget("jammer", tuple(terms))
