import csv
import io
import math

import pytest

from conftest import T1_FREQ_HZ, T1_GAIN_LIN, T1_NOISE_DBW, T1_POWER_W, db, radar_power_linear_w
from ewlink.errors import ConfigError, DomainError
from ewlink.noise_metrics import NoiseModel, noise_stack
from ewlink.scenario import (
    CSV_HEADER,
    TABLE1_RANGES_KM,
    RangeSweep,
    Scenario,
    expand_ranges,
    export_csv,
    run_sweep,
    table1_radar,
    table1_scenario,
)
from ewlink.propagation import TargetSpec


def test_expand_ranges():
    assert expand_ranges(RangeSweep(10, 100, 2, "log")) == [10, 100]
    assert expand_ranges(RangeSweep(10, 1000, 3, "log")) == pytest.approx([10, 100, 1000], rel=1e-12)
    assert expand_ranges(RangeSweep(10, 20, 3, "linear")) == [10, 15, 20]
    assert expand_ranges(list(TABLE1_RANGES_KM)) == list(TABLE1_RANGES_KM)
    assert expand_ranges([30, 10, 20]) == [10, 20, 30]


def test_expand_ranges_geometric_and_arithmetic():
    lin = expand_ranges(RangeSweep(1, 50, 12, "linear"))
    steps = [b - a for a, b in zip(lin, lin[1:])]
    assert max(steps) - min(steps) < 1e-12
    geo = expand_ranges(RangeSweep(1, 500, 9, "log"))
    ratios = [b / a for a, b in zip(geo, geo[1:])]
    assert max(ratios) - min(ratios) < 1e-12


@pytest.mark.parametrize(
    "spec",
    [
        [],
        [10, 10],
        [0, 5],
        [-1],
        RangeSweep(10, 100, 1, "log"),
        RangeSweep(100, 10, 3, "log"),
        RangeSweep(0, 10, 3),
        RangeSweep(1, 10, 3, "cubic"),
    ],
)
def test_expand_ranges_errors(spec):
    with pytest.raises(ConfigError):
        expand_ranges(spec)


def test_scenario_validation():
    radar = table1_radar()
    with pytest.raises(ConfigError):
        Scenario(radar, (), (10.0,))
    with pytest.raises(ConfigError):
        Scenario(radar, (TargetSpec("a", 1), TargetSpec("a", 2)), (10.0,))
    with pytest.raises(ConfigError):
        Scenario(radar, (TargetSpec("a", 1),), (10.0,), jsr_mode="loose")
    assert Scenario(radar, [TargetSpec("a", 1)], [30, 10]).ranges == (10.0, 30.0)


def test_table1_scenario(table1):
    assert table1.radar.antenna_tx.gain == pytest.approx(40.59, abs=0.01)
    assert noise_stack(NoiseModel.for_radar(table1.radar)).total == pytest.approx(-108.98, abs=0.02)
    assert table1.ranges_km == list(TABLE1_RANGES_KM)
    assert [t.rcs_m2 for t in table1.targets] == [3.0, 0.1, 0.005]
    assert table1.jammer.include_tx_gain is False
    assert table1_scenario(include_tx_gain=True).jammer.include_tx_gain is True


def test_sweep_anchor_values(table1):
    rows = run_sweep(table1)
    assert len(rows) == 10
    first = rows[0]
    assert first.range_km == 10.0
    fighter = first.cells[0]
    oracle = db(radar_power_linear_w(T1_POWER_W, T1_GAIN_LIN, T1_GAIN_LIN, 3.0, T1_FREQ_HZ, 10e3)) - T1_NOISE_DBW
    assert fighter.snr == pytest.approx(oracle, abs=1e-9)
    assert fighter.snr == pytest.approx(33.12, abs=0.1)
    assert fighter.sjr == pytest.approx(-30.05, abs=0.1)


def test_sweep_30km_stealth(table1):
    row = next(r for r in run_sweep(table1) if r.range_km == 30.0)
    b2 = row.cells[1]
    # scaled from the 10 km fighter anchor: R^-4 law and sigma ratio
    anchor = run_sweep(table1)[0].cells[0].snr
    expected = anchor - 40 * math.log10(3) - 10 * math.log10(3 / 0.1)
    assert b2.snr == pytest.approx(expected, abs=1e-9)
    assert b2.snr == pytest.approx(-0.74, abs=0.1)


def test_sweep_without_jammer():
    sc = Scenario(table1_radar(), (TargetSpec("x", 1.0),), (10.0, 20.0))
    rows = run_sweep(sc)
    assert all(r.j is None and r.jammer_gain_included is None for r in rows)
    assert all(c.sjr is None and c.jsr is None for r in rows for c in r.cells)


def test_sweep_invariants(table1):
    rows = run_sweep(table1)
    for row in rows:
        d = [c.snr - c.sjr for c in row.cells]
        assert max(d) - min(d) < 1e-9
        s = row.cells
        assert s[0].snr - s[1].snr == pytest.approx(10 * math.log10(3 / 0.1), abs=1e-9)
        assert s[0].sjr - s[2].sjr == pytest.approx(10 * math.log10(3 / 0.005), abs=1e-9)
    for a, b in zip(rows, rows[1:]):
        for ca, cb in zip(a.cells, b.cells):
            assert cb.snr < ca.snr and cb.sjr < ca.sjr
            decades = math.log10(b.range_km / a.range_km)
            assert ca.snr - cb.snr == pytest.approx(40 * decades, abs=1e-9)
            assert ca.sjr - cb.sjr == pytest.approx(20 * decades, abs=1e-9)


def test_sweep_deterministic(table1):
    assert run_sweep(table1) == run_sweep(table1_scenario())


def test_sweep_reports_offending_target(monkeypatch, table1):
    import ewlink.scenario as mod

    def boom(radar, target, range_m, formulation="target_gain_chain"):
        raise DomainError("synthetic")

    monkeypatch.setattr(mod, "radar_link", boom)
    with pytest.raises(DomainError, match="Mig-21.*10.0 km"):
        run_sweep(table1)


def test_export_csv(table1):
    text = export_csv(run_sweep(table1))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 31
    records = list(csv.DictReader(io.StringIO(text)))
    assert [r["target"] for r in records[:3]] == ["Mig-21", "B-2", "F-35"]
    assert [float(r["range_km"]) for r in records[::3]] == list(TABLE1_RANGES_KM)
    for r in records:
        assert r["jammer_gain_included"] == "false"
        recomputed = float(r["p_rx_dbw"]) - float(r["n_total_dbw"])
        assert abs(recomputed - float(r["snr_db"])) <= 0.01 + 1e-9
        assert len(r["snr_db"].split(".")[1]) == 2


def test_export_csv_no_jammer():
    sc = Scenario(table1_radar(), (TargetSpec("x", 1.0),), (10.0,))
    (rec,) = csv.DictReader(io.StringIO(export_csv(run_sweep(sc))))
    assert rec["j_dbw"] == rec["jsr_db"] == rec["sjr_db"] == rec["jammer_gain_included"] == ""
