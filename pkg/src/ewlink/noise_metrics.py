"""Receiver noise, SNR, RWR detectability, JSR/SJR and burnthrough range."""

from __future__ import annotations

from dataclasses import dataclass

from scipy.optimize import bisect

from .db_units import BOLTZMANN, PowerLevel, power_sum_db, ratio_to_db
from .errors import DomainError, UsageError
from .links import JammerSystem, RadarSystem, RwrSystem, jammer_link, radar_link
from .propagation import TargetSpec

JSR_MODES = ("approximate", "exact")

BURNTHROUGH_BRACKET_M = (1.0, 1e7)
BURNTHROUGH_REF_RANGE_M = 10e3


@dataclass(frozen=True)
class NoiseModel:
    bandwidth_hz: float
    noise_figure_db: float = 0.0
    mod_db: float = 0.0
    temperature_k: float = 290.0

    def __post_init__(self) -> None:
        if not self.bandwidth_hz > 0:
            raise DomainError(f"noise bandwidth must be positive, got {self.bandwidth_hz!r}")
        if not self.temperature_k > 0:
            raise DomainError(f"noise temperature must be positive, got {self.temperature_k!r}")
        if not self.noise_figure_db >= 0:
            raise DomainError(f"noise figure must be >= 0 dB, got {self.noise_figure_db!r}")
        if not self.mod_db >= 0:
            raise DomainError(f"MOD must be >= 0 dB, got {self.mod_db!r}")

    @classmethod
    def for_radar(cls, radar: RadarSystem) -> NoiseModel:
        return cls(radar.bandwidth_hz, radar.noise_figure_db, radar.mod_db, radar.temperature_k)

    @classmethod
    def for_rwr(cls, rwr: RwrSystem) -> NoiseModel:
        if rwr.bandwidth_hz is None:
            raise UsageError("RWR has no bandwidth_hz; its noise floor is undefined")
        return cls(rwr.bandwidth_hz, rwr.noise_figure_db, rwr.mod_db, rwr.temperature_k)


@dataclass(frozen=True)
class NoiseStack:
    johnson: float
    receiver: float
    total: float


def noise_stack(model: NoiseModel) -> NoiseStack:
    """Thermal floor, plus noise figure, plus channel MOD term, all in dBW.

    The thermal floor is summed as 10log(k_B) + 10log(T_0) + 10log(B).
    """
    johnson = ratio_to_db(BOLTZMANN) + ratio_to_db(model.temperature_k) + ratio_to_db(model.bandwidth_hz)
    receiver = johnson + model.noise_figure_db
    return NoiseStack(johnson, receiver, receiver + model.mod_db)


def snr(p_rx_dbw: float, n_total_dbw: float) -> float:
    return p_rx_dbw - n_total_dbw


@dataclass(frozen=True)
class RwrDetection:
    detectable: bool
    margin_db: float
    threshold_dbm: float


def rwr_detectable(p_rwr: PowerLevel, signal_kind: str, rwr: RwrSystem) -> RwrDetection:
    """Compare received emitter power against the RWR sensitivity for the signal kind."""
    threshold = rwr.threshold_dbm(signal_kind)
    margin = p_rwr.dbm - threshold
    return RwrDetection(margin >= 0.0, margin, threshold)


def rwr_snr(p_rwr_dbw: float, rwr_noise: NoiseModel) -> float:
    return p_rwr_dbw - noise_stack(rwr_noise).total


def _interference(j_dbw: float, n_total_dbw: float | None, mode: str) -> float:
    if mode == "approximate":
        return j_dbw
    if mode == "exact":
        if n_total_dbw is None:
            raise UsageError("exact JSR/SJR needs the receiver noise total")
        return power_sum_db(n_total_dbw, j_dbw)
    raise UsageError(f"JSR mode must be one of {JSR_MODES}, got {mode!r}")


def jsr(j_dbw: float, p_rx_dbw: float, n_total_dbw: float | None = None, mode: str = "approximate") -> float:
    """Jammer-to-signal ratio in dB.

    ``approximate`` drops the receiver noise (J - P_RX); ``exact`` adds it
    to J in the power domain first.
    """
    return _interference(j_dbw, n_total_dbw, mode) - p_rx_dbw


def sjr(p_rx_dbw: float, j_dbw: float, n_total_dbw: float | None = None, mode: str = "approximate") -> float:
    return -jsr(j_dbw, p_rx_dbw, n_total_dbw, mode)


@dataclass(frozen=True)
class EngagementMetrics:
    p_rx: float
    n_total: float
    snr: float
    j: float | None = None
    jsr: float | None = None
    sjr: float | None = None


def engagement_metrics(
    p_rx_dbw: float, n_total_dbw: float, j_dbw: float | None = None, mode: str = "approximate"
) -> EngagementMetrics:
    if j_dbw is None:
        return EngagementMetrics(p_rx_dbw, n_total_dbw, snr(p_rx_dbw, n_total_dbw))
    return EngagementMetrics(
        p_rx_dbw,
        n_total_dbw,
        snr(p_rx_dbw, n_total_dbw),
        j_dbw,
        jsr(j_dbw, p_rx_dbw, n_total_dbw, mode),
        sjr(p_rx_dbw, j_dbw, n_total_dbw, mode),
    )


def sjr_at_range(
    radar: RadarSystem,
    jammer: JammerSystem,
    target: TargetSpec,
    range_m: float,
    mode: str = "approximate",
) -> float:
    """SJR at the radar for a target at ``range_m``."""
    p_rx = radar_link(radar, target, range_m).total
    j = jammer_link(jammer, radar, jammer.range_to_radar_m(range_m)).total
    n_total = noise_stack(NoiseModel.for_radar(radar)).total if mode == "exact" else None
    return sjr(p_rx, j, n_total, mode)


def burnthrough_closed_form(
    radar: RadarSystem,
    jammer: JammerSystem,
    target: TargetSpec,
    sjr_threshold_db: float = 0.0,
    ref_range_m: float = BURNTHROUGH_REF_RANGE_M,
) -> float:
    """Range where SJR equals the threshold, from the -20 dB/decade law.

    Only valid for a jammer riding on the target with the approximate SJR:
    the echo falls as R^-4 and the jamming as R^-2.
    """
    if not jammer.colocated_with_target:
        raise UsageError("closed-form burnthrough needs a jammer colocated with the target")
    ref = sjr_at_range(radar, jammer, target, ref_range_m)
    return ref_range_m * 10.0 ** ((ref - sjr_threshold_db) / 20.0)


def burnthrough_bisection(
    radar: RadarSystem,
    jammer: JammerSystem,
    target: TargetSpec,
    sjr_threshold_db: float = 0.0,
    mode: str = "approximate",
    bracket: tuple[float, float] = BURNTHROUGH_BRACKET_M,
    xtol: float = 1e-6,
) -> float | None:
    """Solve sjr(R) = threshold by bisection; ``None`` if no crossing in ``bracket``."""
    lo, hi = bracket

    def excess(r: float) -> float:
        return sjr_at_range(radar, jammer, target, r, mode) - sjr_threshold_db

    f_lo, f_hi = excess(lo), excess(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        return None
    return bisect(excess, lo, hi, xtol=xtol, maxiter=200)


def burnthrough_range(
    radar: RadarSystem,
    jammer: JammerSystem,
    target: TargetSpec,
    sjr_threshold_db: float = 0.0,
    method: str | None = None,
    mode: str = "approximate",
    bracket: tuple[float, float] = BURNTHROUGH_BRACKET_M,
) -> float | None:
    """Range in metres inside which the echo beats the jamming by ``sjr_threshold_db``.

    Returns ``None`` when SJR never crosses the threshold inside ``bracket``
    (no burnthrough). ``method`` defaults to the closed form when it applies
    (colocated jammer, approximate SJR) and to bisection otherwise.
    """
    if method is None:
        method = "closed_form" if jammer.colocated_with_target and mode == "approximate" else "bisection"
    if method == "bisection":
        return burnthrough_bisection(radar, jammer, target, sjr_threshold_db, mode, bracket)
    if method != "closed_form":
        raise UsageError(f"burnthrough method must be 'closed_form' or 'bisection', got {method!r}")
    if mode != "approximate":
        raise UsageError("closed-form burnthrough only holds for the approximate SJR")
    r = burnthrough_closed_form(radar, jammer, target, sjr_threshold_db)
    lo, hi = bracket
    return r if lo <= r <= hi else None
