"""Scenario files: a line-oriented ``key = value`` format with ``[section]`` headers.

Every key carries its unit in its name (``power_w``, ``frequency_hz``,
``rcs_m2``, ...). Keys may be written inside a section or fully dotted at
top level (``radar.power_w = 24600``). Each ``[target]`` section adds one
target; the dotted equivalent is ``targets[0].name``.

Example::

    [radar]
    power_w = 24600
    frequency_hz = 1.3e9
    beamwidth_az_deg = 0.18
    beamwidth_el_deg = 20
    bandwidth_hz = 100e6
    noise_figure_db = 5
    mod_db = 10

    [target]
    name = Mig-21
    rcs_m2 = 3

    [sweep]
    ranges_km = 10, 30, 100
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ConfigError, DomainError
from .links import JammerSystem, RadarSystem, RwrSystem
from .propagation import AntennaSpec, TargetSpec
from .scenario import RangeSweep, Scenario

_ANTENNA = ("gain_db", "beamwidth_az_deg", "beamwidth_el_deg", "efficiency")
_RX_ANTENNA = tuple("rx_" + k for k in _ANTENNA)

SECTION_KEYS = {
    "radar": {
        "power_w", "frequency_hz", "bandwidth_hz", "noise_figure_db", "mod_db",
        "temperature_k", "detection_threshold_snr_db", *_ANTENNA, *_RX_ANTENNA,
    },
    "jammer": {
        "power_w", "bandwidth_hz", "include_tx_gain", "colocated_with_target",
        "standoff_range_km", *_ANTENNA,
    },
    "rwr": {
        "pulsed_threshold_dbm", "cw_threshold_dbm", "bandwidth_hz", "noise_figure_db",
        "mod_db", "temperature_k", *_ANTENNA,
    },
    "targets": {"name", "rcs_m2"},
    "sweep": {"ranges_km", "start_km", "stop_km", "count", "spacing", "jsr_mode"},
}

_POSITIVE = {
    "power_w", "frequency_hz", "bandwidth_hz", "temperature_k", "standoff_range_km",
    "rcs_m2", "start_km", "stop_km", "beamwidth_az_deg", "beamwidth_el_deg", "efficiency",
    "rx_beamwidth_az_deg", "rx_beamwidth_el_deg", "rx_efficiency",
}
_NON_NEGATIVE = {"noise_figure_db", "mod_db"}
_BOOL = {"include_tx_gain", "colocated_with_target"}
_TEXT = {"name", "spacing", "jsr_mode"}

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}

_SECTION_RE = re.compile(r"^\[\s*([A-Za-z_]+)\s*\]$")
_DOTTED_RE = re.compile(r"^(radar|jammer|rwr|sweep|targets\[(\d+)\])\.([A-Za-z_][A-Za-z0-9_]*)$")


@dataclass
class _Entry:
    line: int
    value: object


def _convert(key: str, raw: str, line: int, dotted: str) -> object:
    if key in _TEXT:
        if not raw:
            raise ConfigError("empty value", line=line, key=dotted)
        return raw
    if key in _BOOL:
        low = raw.lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ConfigError(f"expected true/false, got {raw!r}", line=line, key=dotted)
    if key == "count":
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"expected an integer, got {raw!r}", line=line, key=dotted) from None
    if key == "ranges_km":
        parts = [p.strip() for p in raw.split(",") if p.strip()]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ConfigError(f"expected comma-separated numbers, got {raw!r}", line=line, key=dotted) from None
        if not values:
            raise ConfigError("range list is empty", line=line, key=dotted)
        if any(not v > 0 for v in values):
            raise ConfigError("ranges must be positive", line=line, key=dotted)
        return values
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"expected a number, got {raw!r}", line=line, key=dotted) from None
    if not math.isfinite(value):
        raise ConfigError(f"value must be finite, got {raw!r}", line=line, key=dotted)
    if key in _POSITIVE and not value > 0:
        raise ConfigError(f"must be positive, got {raw}", line=line, key=dotted)
    if key in _NON_NEGATIVE and not value >= 0:
        raise ConfigError(f"must be >= 0, got {raw}", line=line, key=dotted)
    return value


def _read_entries(text: str) -> tuple[dict[str, dict[str, _Entry]], list[dict[str, _Entry]], dict[str, int]]:
    sections: dict[str, dict[str, _Entry]] = {s: {} for s in ("radar", "jammer", "rwr", "sweep")}
    targets: list[dict[str, _Entry]] = []
    header_lines: dict[str, int] = {}
    current: str | None = None
    current_target: int | None = None

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION_RE.match(line)
        if m:
            name = m.group(1)
            if name in ("target", "targets"):
                targets.append({})
                current, current_target = "targets", len(targets) - 1
                header_lines[f"targets[{current_target}]"] = lineno
            elif name in sections:
                if name in header_lines:
                    raise ConfigError(f"section [{name}] appears twice", line=lineno)
                current, current_target = name, None
                header_lines[name] = lineno
            else:
                raise ConfigError(f"unknown section [{name}]", line=lineno)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw_line.strip()!r}", line=lineno)
        key, raw = (p.strip() for p in line.split("=", 1))

        dm = _DOTTED_RE.match(key)
        if dm:
            section, index, key = dm.group(1), dm.group(2), dm.group(3)
            if index is not None:
                section, idx = "targets", int(index)
                while len(targets) <= idx:
                    targets.append({})
                header_lines.setdefault(f"targets[{idx}]", lineno)
            else:
                header_lines.setdefault(section, lineno)
        elif current is None:
            raise ConfigError("key outside any section", line=lineno, key=key)
        else:
            section, idx = current, current_target

        dotted = f"targets[{idx}].{key}" if section == "targets" else f"{section}.{key}"
        if key not in SECTION_KEYS[section]:
            raise ConfigError("unknown key", line=lineno, key=dotted)
        table = targets[idx] if section == "targets" else sections[section]
        if key in table:
            raise ConfigError(f"duplicate key (first set on line {table[key].line})", line=lineno, key=dotted)
        table[key] = _Entry(lineno, _convert(key, raw, lineno, dotted))

    return sections, targets, header_lines


def _antenna(entries: dict[str, _Entry], section: str, prefix: str = "", required: bool = True) -> AntennaSpec | None:
    gain = entries.get(prefix + "gain_db")
    beam = {k: entries.get(prefix + k) for k in ("beamwidth_az_deg", "beamwidth_el_deg", "efficiency")}
    beam_given = {k: e for k, e in beam.items() if e is not None}
    if gain is not None and beam_given:
        names = ", ".join(f"{section}.{prefix}{k}" for k in beam_given)
        raise ConfigError(
            f"conflicting antenna spec: {section}.{prefix}gain_db and {names} are mutually exclusive",
            line=gain.line,
            key=f"{section}.{prefix}gain_db",
        )
    if gain is not None:
        return AntennaSpec(gain_db=gain.value)
    if not beam_given:
        if required:
            raise ConfigError(
                f"missing antenna: give {section}.{prefix}gain_db or "
                f"{section}.{prefix}beamwidth_az_deg + {section}.{prefix}beamwidth_el_deg",
                key=f"{section}.{prefix}gain_db",
            )
        return None
    for k in ("beamwidth_az_deg", "beamwidth_el_deg"):
        if beam[k] is None:
            other = next(iter(beam_given.values()))
            raise ConfigError("incomplete beamwidth antenna spec", line=other.line, key=f"{section}.{prefix}{k}")
    eff = beam["efficiency"]
    try:
        return AntennaSpec(
            az_beamwidth_deg=beam["beamwidth_az_deg"].value,
            el_beamwidth_deg=beam["beamwidth_el_deg"].value,
            efficiency=None if eff is None else eff.value,
        )
    except DomainError as exc:
        raise ConfigError(str(exc), line=beam["beamwidth_az_deg"].line, key=f"{section}.{prefix}beamwidth_az_deg") from exc


def _required(entries: dict[str, _Entry], section: str, key: str, line: int | None) -> object:
    if key not in entries:
        raise ConfigError("missing required key", line=line, key=f"{section}.{key}")
    return entries[key].value


def _opt(entries: dict[str, _Entry], key: str, default: object) -> object:
    return entries[key].value if key in entries else default


def parse_config(text: str) -> Scenario:
    """Parse scenario text into a validated :class:`Scenario`.

    Raises
    ------
    ConfigError
        Unknown or duplicate keys, missing required keys, conflicting
        antenna specs and non-positive physical values. The message names
        the line and dotted key.
    """
    try:
        return _build(*_read_entries(text))
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc


def _build(sections, target_entries, headers) -> Scenario:

    radar_e = sections["radar"]
    if not radar_e:
        raise ConfigError("missing [radar] section")
    line = headers.get("radar")
    antenna_tx = _antenna(radar_e, "radar")
    antenna_rx = _antenna(radar_e, "radar", prefix="rx_", required=False) or antenna_tx
    radar = RadarSystem(
        power_w=_required(radar_e, "radar", "power_w", line),
        antenna_tx=antenna_tx,
        antenna_rx=antenna_rx,
        frequency_hz=_required(radar_e, "radar", "frequency_hz", line),
        bandwidth_hz=_required(radar_e, "radar", "bandwidth_hz", line),
        noise_figure_db=_opt(radar_e, "noise_figure_db", 0.0),
        mod_db=_opt(radar_e, "mod_db", 0.0),
        temperature_k=_opt(radar_e, "temperature_k", 290.0),
        detection_threshold_snr_db=_opt(radar_e, "detection_threshold_snr_db", 0.0),
    )

    jammer = None
    jam_e = sections["jammer"]
    if jam_e:
        line = headers.get("jammer")
        colocated = _opt(jam_e, "colocated_with_target", True)
        standoff = _opt(jam_e, "standoff_range_km", None)
        if colocated and standoff is not None:
            raise ConfigError(
                "standoff range needs jammer.colocated_with_target = false",
                line=jam_e["standoff_range_km"].line,
                key="jammer.standoff_range_km",
            )
        if not colocated and standoff is None:
            raise ConfigError("missing required key for a standoff jammer", line=line, key="jammer.standoff_range_km")
        jammer = JammerSystem(
            power_w=_required(jam_e, "jammer", "power_w", line),
            antenna=_antenna(jam_e, "jammer"),
            bandwidth_hz=_required(jam_e, "jammer", "bandwidth_hz", line),
            include_tx_gain=_opt(jam_e, "include_tx_gain", True),
            colocated_with_target=colocated,
            standoff_range_km=standoff,
        )

    rwr = None
    rwr_e = sections["rwr"]
    if rwr_e:
        rwr = RwrSystem(
            antenna=_antenna(rwr_e, "rwr", required=False) or AntennaSpec(gain_db=0.0),
            pulsed_threshold_dbm=_opt(rwr_e, "pulsed_threshold_dbm", -40.0),
            cw_threshold_dbm=_opt(rwr_e, "cw_threshold_dbm", -50.0),
            bandwidth_hz=_opt(rwr_e, "bandwidth_hz", None),
            noise_figure_db=_opt(rwr_e, "noise_figure_db", 0.0),
            mod_db=_opt(rwr_e, "mod_db", 0.0),
            temperature_k=_opt(rwr_e, "temperature_k", 290.0),
        )

    if not target_entries:
        raise ConfigError("no targets defined; add at least one [target] section")
    targets = []
    for i, entries in enumerate(target_entries):
        line = headers.get(f"targets[{i}]")
        name = _required(entries, f"targets[{i}]", "name", line)
        rcs = _required(entries, f"targets[{i}]", "rcs_m2", line)
        targets.append(TargetSpec(name, rcs))
    names = [t.name for t in targets]
    for i, n in enumerate(names):
        if n in names[:i]:
            raise ConfigError(f"duplicate target name {n!r}", line=target_entries[i]["name"].line, key=f"targets[{i}].name")

    sweep_e = sections["sweep"]
    line = headers.get("sweep")
    if "ranges_km" in sweep_e:
        generated = [k for k in ("start_km", "stop_km", "count", "spacing") if k in sweep_e]
        if generated:
            raise ConfigError(
                f"sweep.ranges_km conflicts with sweep.{generated[0]}",
                line=sweep_e[generated[0]].line,
                key=f"sweep.{generated[0]}",
            )
        ranges_e = sweep_e["ranges_km"]
        if len(set(ranges_e.value)) != len(ranges_e.value):
            raise ConfigError("duplicate range", line=ranges_e.line, key="sweep.ranges_km")
        ranges: RangeSweep | tuple[float, ...] = tuple(sorted(ranges_e.value))
    elif "start_km" in sweep_e or "stop_km" in sweep_e or "count" in sweep_e:
        ranges = RangeSweep(
            start_km=_required(sweep_e, "sweep", "start_km", line),
            stop_km=_required(sweep_e, "sweep", "stop_km", line),
            count=_required(sweep_e, "sweep", "count", line),
            spacing=_opt(sweep_e, "spacing", "linear"),
        )
    else:
        raise ConfigError("missing sweep ranges: give sweep.ranges_km or sweep.start_km/stop_km/count", line=line, key="sweep.ranges_km")

    try:
        return Scenario(
            radar=radar,
            targets=tuple(targets),
            ranges=ranges,
            jammer=jammer,
            rwr=rwr,
            jsr_mode=_opt(sweep_e, "jsr_mode", "approximate"),
        )
    except ConfigError as exc:
        if exc.line is None and line is not None:
            raise ConfigError(str(exc), line=line) from exc
        raise


def load_config(path: str | Path) -> Scenario:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def shipped_config(name: str) -> Path:
    """Path of a config file bundled with the package, e.g. ``table1_compat``."""
    fname = name if name.endswith(".cfg") else f"{name}.cfg"
    return Path(str(resources.files("ewlink") / "configs" / fname))


def _num(x: float) -> str:
    return repr(float(x))


def _antenna_lines(antenna: AntennaSpec, prefix: str = "") -> list[str]:
    if antenna.gain_db is not None:
        return [f"{prefix}gain_db = {_num(antenna.gain_db)}"]
    out = [
        f"{prefix}beamwidth_az_deg = {_num(antenna.az_beamwidth_deg)}",
        f"{prefix}beamwidth_el_deg = {_num(antenna.el_beamwidth_deg)}",
    ]
    if antenna.efficiency is not None:
        out.append(f"{prefix}efficiency = {_num(antenna.efficiency)}")
    return out


def format_config(scenario: Scenario) -> str:
    """Serialize a scenario so that ``parse_config`` gives it back unchanged."""
    r = scenario.radar
    out = ["[radar]", f"power_w = {_num(r.power_w)}", f"frequency_hz = {_num(r.frequency_hz)}"]
    out += _antenna_lines(r.antenna_tx)
    if r.antenna_rx != r.antenna_tx:
        out += _antenna_lines(r.antenna_rx, "rx_")
    out += [
        f"bandwidth_hz = {_num(r.bandwidth_hz)}",
        f"noise_figure_db = {_num(r.noise_figure_db)}",
        f"mod_db = {_num(r.mod_db)}",
        f"temperature_k = {_num(r.temperature_k)}",
        f"detection_threshold_snr_db = {_num(r.detection_threshold_snr_db)}",
    ]
    if scenario.jammer is not None:
        j = scenario.jammer
        out += ["", "[jammer]", f"power_w = {_num(j.power_w)}"]
        out += _antenna_lines(j.antenna)
        out += [
            f"bandwidth_hz = {_num(j.bandwidth_hz)}",
            f"include_tx_gain = {str(j.include_tx_gain).lower()}",
            f"colocated_with_target = {str(j.colocated_with_target).lower()}",
        ]
        if j.standoff_range_km is not None:
            out.append(f"standoff_range_km = {_num(j.standoff_range_km)}")
    if scenario.rwr is not None:
        w = scenario.rwr
        out += ["", "[rwr]"] + _antenna_lines(w.antenna)
        out += [
            f"pulsed_threshold_dbm = {_num(w.pulsed_threshold_dbm)}",
            f"cw_threshold_dbm = {_num(w.cw_threshold_dbm)}",
        ]
        if w.bandwidth_hz is not None:
            out.append(f"bandwidth_hz = {_num(w.bandwidth_hz)}")
        out += [
            f"noise_figure_db = {_num(w.noise_figure_db)}",
            f"mod_db = {_num(w.mod_db)}",
            f"temperature_k = {_num(w.temperature_k)}",
        ]
    for t in scenario.targets:
        out += ["", "[target]", f"name = {t.name}", f"rcs_m2 = {_num(t.rcs_m2)}"]
    out += ["", "[sweep]"]
    if isinstance(scenario.ranges, RangeSweep):
        s = scenario.ranges
        out += [
            f"start_km = {_num(s.start_km)}",
            f"stop_km = {_num(s.stop_km)}",
            f"count = {s.count}",
            f"spacing = {s.spacing}",
        ]
    else:
        out.append("ranges_km = " + ", ".join(_num(x) for x in scenario.ranges))
    out.append(f"jsr_mode = {scenario.jsr_mode}")
    return "\n".join(out) + "\n"
