"""Engagement scenarios and the range-sweep engine."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ConfigError, DomainError
from .links import JammerSystem, RadarSystem, RwrSystem, jammer_link, radar_link
from .noise_metrics import JSR_MODES, NoiseModel, engagement_metrics, noise_stack
from .propagation import AntennaSpec, TargetSpec

TABLE1_RANGES_KM = (10.0, 12.0, 13.6, 15.0, 20.0, 29.0, 30.0, 70.0, 100.0, 250.0)

CSV_HEADER = (
    "range_km",
    "target",
    "rcs_m2",
    "p_rx_dbw",
    "n_total_dbw",
    "j_dbw",
    "snr_db",
    "jsr_db",
    "sjr_db",
    "jammer_gain_included",
)


@dataclass(frozen=True)
class RangeSweep:
    start_km: float
    stop_km: float
    count: int
    spacing: str = "linear"


def expand_ranges(spec: RangeSweep | Sequence[float]) -> list[float]:
    """Turn a generated sweep or an explicit list into ascending ranges in km.

    Explicit lists are sorted; duplicates are rejected. Generated sweeps need
    ``count >= 2`` and ``start_km < stop_km``.
    """
    if isinstance(spec, RangeSweep):
        if spec.count < 2:
            raise ConfigError(f"sweep count must be >= 2, got {spec.count}")
        if not (spec.start_km > 0 and spec.stop_km > 0):
            raise ConfigError("sweep start_km and stop_km must be positive")
        if not spec.start_km < spec.stop_km:
            raise ConfigError("sweep start_km must be below stop_km")
        n = spec.count - 1
        if spec.spacing == "linear":
            step = (spec.stop_km - spec.start_km) / n
            out = [spec.start_km + i * step for i in range(n)]
        elif spec.spacing == "log":
            ratio = spec.stop_km / spec.start_km
            out = [spec.start_km * ratio ** (i / n) for i in range(n)]
        else:
            raise ConfigError(f"sweep spacing must be 'linear' or 'log', got {spec.spacing!r}")
        return out + [spec.stop_km]

    ranges = [float(r) for r in spec]
    if not ranges:
        raise ConfigError("range list is empty")
    if any(not r > 0 or not math.isfinite(r) for r in ranges):
        raise ConfigError("ranges must be positive and finite")
    ranges.sort()
    for a, b in zip(ranges, ranges[1:]):
        if a == b:
            raise ConfigError(f"duplicate range {a} km")
    return ranges


@dataclass(frozen=True)
class Scenario:
    radar: RadarSystem
    targets: tuple[TargetSpec, ...]
    ranges: RangeSweep | tuple[float, ...]
    jammer: JammerSystem | None = None
    rwr: RwrSystem | None = None
    jsr_mode: str = "approximate"

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        if not self.targets:
            raise ConfigError("scenario needs at least one target")
        names = [t.name for t in self.targets]
        if len(set(names)) != len(names):
            raise ConfigError(f"target names must be unique, got {names}")
        if self.jsr_mode not in JSR_MODES:
            raise ConfigError(f"jsr_mode must be one of {JSR_MODES}, got {self.jsr_mode!r}")
        expanded = expand_ranges(self.ranges)
        if not isinstance(self.ranges, RangeSweep):
            object.__setattr__(self, "ranges", tuple(expanded))

    @property
    def ranges_km(self) -> list[float]:
        return expand_ranges(self.ranges)

    def target(self, name: str) -> TargetSpec:
        for t in self.targets:
            if t.name == name:
                return t
        raise ConfigError(f"no target named {name!r}; have {[t.name for t in self.targets]}")


@dataclass(frozen=True)
class TargetCell:
    name: str
    rcs_m2: float
    p_rx: float
    snr: float
    jsr: float | None = None
    sjr: float | None = None


@dataclass(frozen=True)
class SweepRow:
    range_km: float
    n_total: float
    j: float | None
    cells: tuple[TargetCell, ...]
    jsr_mode: str = "approximate"
    jammer_gain_included: bool | None = None


def run_sweep(scenario: Scenario) -> list[SweepRow]:
    """Evaluate SNR (and JSR/SJR if a jammer is present) at every range and target."""
    radar = scenario.radar
    jammer = scenario.jammer
    n_total = noise_stack(NoiseModel.for_radar(radar)).total
    rows = []
    for range_km in scenario.ranges_km:
        range_m = range_km * 1e3
        j = None
        if jammer is not None:
            try:
                j = jammer_link(jammer, radar, jammer.range_to_radar_m(range_m)).total
            except DomainError as exc:
                raise DomainError(f"jammer at {range_km} km: {exc}") from exc
        cells = []
        for target in scenario.targets:
            try:
                p_rx = radar_link(radar, target, range_m).total
            except DomainError as exc:
                raise DomainError(f"target {target.name!r} at {range_km} km: {exc}") from exc
            m = engagement_metrics(p_rx, n_total, j, scenario.jsr_mode)
            cells.append(TargetCell(target.name, target.rcs_m2, m.p_rx, m.snr, m.jsr, m.sjr))
        rows.append(
            SweepRow(
                range_km,
                n_total,
                j,
                tuple(cells),
                scenario.jsr_mode,
                None if jammer is None else jammer.include_tx_gain,
            )
        )
    return rows


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.2f}"


def export_csv(rows: Sequence[SweepRow]) -> str:
    """One CSV line per (range, target), numbers to two decimals."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        gain_flag = "" if row.jammer_gain_included is None else str(row.jammer_gain_included).lower()
        for cell in row.cells:
            writer.writerow(
                (
                    _fmt(row.range_km),
                    cell.name,
                    f"{cell.rcs_m2:g}",
                    _fmt(cell.p_rx),
                    _fmt(row.n_total),
                    _fmt(row.j),
                    _fmt(cell.snr),
                    _fmt(cell.jsr),
                    _fmt(cell.sjr),
                    gain_flag,
                )
            )
    return buf.getvalue()


def table1_radar() -> RadarSystem:
    """Early-warning L-band radar: 24.6 kW, 1.3 GHz, 0.18 x 20 deg fan beam."""
    beam = AntennaSpec(az_beamwidth_deg=0.18, el_beamwidth_deg=20.0, efficiency=1.0)
    return RadarSystem(
        power_w=24_600.0,
        antenna_tx=beam,
        antenna_rx=beam,
        frequency_hz=1.3e9,
        bandwidth_hz=100e6,
        noise_figure_db=5.0,
        mod_db=10.0,
    )


def table1_jammer(include_tx_gain: bool = False) -> JammerSystem:
    return JammerSystem(
        power_w=6_800.0,
        antenna=AntennaSpec(gain_db=22.63),
        bandwidth_hz=1e9,
        include_tx_gain=include_tx_gain,
    )


def table1_targets() -> tuple[TargetSpec, ...]:
    return (
        TargetSpec("Mig-21", 3.0),
        TargetSpec("B-2", 0.1),
        TargetSpec("F-35", 0.005),
    )


def table1_scenario(include_tx_gain: bool = False) -> Scenario:
    """The bundled self-protection jamming engagement.

    The default leaves the jammer antenna gain out of J, which is the only
    way the reference table comes out; ``include_tx_gain=True`` gives the
    twin that keeps the jammer gain in the chain.
    """
    return Scenario(
        radar=table1_radar(),
        targets=table1_targets(),
        ranges=TABLE1_RANGES_KM,
        jammer=table1_jammer(include_tx_gain),
    )
