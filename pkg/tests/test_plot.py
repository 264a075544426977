import re

import pytest

from ewlink.errors import UsageError
from ewlink.plot import PlotSpec, collect_series, render_plot, svg_chart
from ewlink.propagation import TargetSpec
from ewlink.scenario import Scenario, run_sweep, table1_radar


def _polylines(svg, metric):
    return re.findall(rf'<polyline class="series {metric}"[^>]*points="([^"]+)"', svg)


def test_table1_plot_series(table1):
    rows = run_sweep(table1)
    svg = svg_chart(rows, PlotSpec(threshold_db=0.0))
    assert len(_polylines(svg, "snr")) == 3
    assert len(_polylines(svg, "sjr")) == 3
    assert svg.count('class="threshold"') == 1
    assert "threshold 0 dB" in svg
    assert "Mig-21 SNR (σ=3 m²)" in svg and "F-35 SJR (σ=0.005 m²)" in svg


def test_snr_polylines_decrease(table1):
    svg = svg_chart(run_sweep(table1), PlotSpec())
    for pts in _polylines(svg, "snr") + _polylines(svg, "sjr"):
        coords = [tuple(map(float, p.split(","))) for p in pts.split()]
        xs = [c[0] for c in coords]
        ys = [c[1] for c in coords]
        assert xs == sorted(xs)
        # SVG y grows downward
        assert all(b > a for a, b in zip(ys, ys[1:]))


def test_single_target_no_jammer():
    sc = Scenario(table1_radar(), (TargetSpec("x", 1.0),), (10.0, 20.0, 40.0))
    xs, series = collect_series(run_sweep(sc))
    assert len(series) == 1
    assert len(_polylines(svg_chart(run_sweep(sc), PlotSpec(log_x=False)), "snr")) == 1


def test_every_series_shares_x(table1):
    rows = run_sweep(table1)
    xs, series = collect_series(rows)
    assert all(len(s.ys) == len(xs) for s in series)


def test_render_is_deterministic(tmp_path, table1):
    rows = run_sweep(table1)
    a = render_plot(rows, PlotSpec(tmp_path / "a.svg"))
    b = render_plot(run_sweep(table1), PlotSpec(tmp_path / "b.svg"))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("<?xml")


def test_empty_rows():
    with pytest.raises(UsageError):
        svg_chart([], PlotSpec())
    with pytest.raises(UsageError):
        render_plot([1], PlotSpec())
