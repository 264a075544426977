"""Command-line front end.

Exit status: 0 on success, 1 on configuration or usage errors, 2 on domain
errors (non-physical values reached a computation). Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TextIO

from .config import load_config, shipped_config
from .db_units import PowerLevel, dbw_to_dbm, watts_to_dbw
from .errors import ConfigError, DomainError, UsageError
from .links import FORMULATIONS, LinkBudget, RwrSystem, budget_breakdown, jammer_link, radar_link, rwr_link, telecom_link
from .noise_metrics import JSR_MODES, NoiseModel, burnthrough_range, jsr, noise_stack, rwr_detectable, rwr_snr, sjr, snr
from .plot import PlotSpec, render_plot
from .propagation import PathGeometry
from .scenario import Scenario, export_csv, run_sweep

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is our domain-error code
        raise UsageError(f"{self.prog}: {message}")


def _resolve_config(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    bundled = shipped_config(name)
    if bundled.exists():
        return bundled
    raise ConfigError(f"config file not found: {name}")


def _scenario(args: argparse.Namespace) -> Scenario:
    return load_config(_resolve_config(args.config))


def _print_budget(budget: LinkBudget, out: TextIO, title: str) -> None:
    print(title, file=out)
    print(f"  {'term':<22}{'dB':>10}{'running dBW':>14}", file=out)
    for label, value, running in budget_breakdown(budget):
        print(f"  {label:<22}{value:>+10.2f}{running:>+14.2f}", file=out)
    total = budget.total
    print(f"  {'total':<22}{'':>10}{total:>+14.2f}  ({dbw_to_dbm(total):+.2f} dBm)", file=out)


def cmd_link(args: argparse.Namespace, out: TextIO) -> None:
    if (args.power_w is None) == (args.power_dbw is None):
        raise UsageError("give exactly one of --power-w or --power-dbw")
    p_tx = watts_to_dbw(args.power_w) if args.power_w is not None else args.power_dbw
    geometry = PathGeometry.from_frequency(args.range_km * 1e3, args.frequency_hz)
    budget = telecom_link(p_tx, args.tx_gain_db, args.rx_gain_db, geometry)
    _print_budget(budget, out, f"telecom link at {args.range_km:g} km, {args.frequency_hz:g} Hz")
    print(f"received power: {budget.total:+.2f} dBW", file=out)


def cmd_radar(args: argparse.Namespace, out: TextIO) -> None:
    sc = _scenario(args)
    target = sc.target(args.target)
    budget = radar_link(sc.radar, target, args.range_km * 1e3, args.formulation)
    n_total = noise_stack(NoiseModel.for_radar(sc.radar)).total
    _print_budget(budget, out, f"radar echo ({args.formulation}): {target.name}, σ={target.rcs_m2:g} m², {args.range_km:g} km")
    print(f"received power: {budget.total:+.2f} dBW", file=out)
    print(f"noise total: {n_total:+.2f} dBW", file=out)
    print(f"SNR: {snr(budget.total, n_total):+.2f} dB", file=out)


def cmd_rwr(args: argparse.Namespace, out: TextIO) -> None:
    sc = _scenario(args)
    rwr = sc.rwr or RwrSystem()
    budget = rwr_link(sc.radar, rwr, args.range_km * 1e3)
    _print_budget(budget, out, f"radar emission at RWR, {args.range_km:g} km")
    det = rwr_detectable(PowerLevel(budget.total), args.signal, rwr)
    verdict = "detectable" if det.detectable else "not detectable"
    print(f"received power: {budget.total:+.2f} dBW ({dbw_to_dbm(budget.total):+.2f} dBm)", file=out)
    print(f"sensitivity ({args.signal}): {det.threshold_dbm:+.2f} dBm -> {verdict}, margin {det.margin_db:+.2f} dB", file=out)
    if rwr.bandwidth_hz is not None:
        print(f"RWR SNR (secondary metric): {rwr_snr(budget.total, NoiseModel.for_rwr(rwr)):+.2f} dB", file=out)


def cmd_jam(args: argparse.Namespace, out: TextIO) -> None:
    sc = _scenario(args)
    if sc.jammer is None:
        raise ConfigError("scenario has no [jammer] section")
    range_m = args.range_km * 1e3
    jam_range_m = sc.jammer.range_to_radar_m(range_m)
    budget = jammer_link(sc.jammer, sc.radar, jam_range_m)
    gain_note = "included" if sc.jammer.include_tx_gain else "excluded"
    _print_budget(budget, out, f"jammer at radar, {jam_range_m / 1e3:g} km (jammer TX gain {gain_note})")
    for term in budget.terms:
        if term.raw_db is not None:
            print(f"  note: {term.label} capped at {term.value_db:+.2f} dB (unclamped {term.raw_db:+.2f} dB)", file=out)
    print(f"J: {budget.total:+.2f} dBW", file=out)
    if args.target:
        target = sc.target(args.target)
        p_rx = radar_link(sc.radar, target, range_m).total
        n_total = noise_stack(NoiseModel.for_radar(sc.radar)).total
        mode = args.jsr_mode or sc.jsr_mode
        print(f"target {target.name} echo: {p_rx:+.2f} dBW", file=out)
        print(f"JSR ({mode}): {jsr(budget.total, p_rx, n_total, mode):+.2f} dB", file=out)
        print(f"SJR ({mode}): {sjr(p_rx, budget.total, n_total, mode):+.2f} dB", file=out)


def cmd_sweep(args: argparse.Namespace, out: TextIO) -> None:
    sc = _scenario(args)
    rows = run_sweep(sc)
    text = export_csv(rows)
    if args.out:
        Path(args.out).write_bytes(text.encode("utf-8"))
    else:
        out.write(text)
    if args.plot:
        spec = PlotSpec(args.plot, log_x=not args.linear_x, threshold_db=sc.radar.detection_threshold_snr_db)
        render_plot(rows, spec)


def cmd_burnthrough(args: argparse.Namespace, out: TextIO) -> None:
    sc = _scenario(args)
    if sc.jammer is None:
        raise ConfigError("scenario has no [jammer] section")
    target = sc.target(args.target)
    r = burnthrough_range(sc.radar, sc.jammer, target, args.threshold_db, method=args.method, mode=args.jsr_mode)
    if r is None:
        print(f"{target.name}: no burnthrough within 1 m .. 10000 km at SJR threshold {args.threshold_db:+.2f} dB", file=out)
    else:
        print(
            f"{target.name}: burnthrough range {r:.1f} m ({r / 1e3:.4f} km) at SJR threshold {args.threshold_db:+.2f} dB",
            file=out,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ewlink", description="Radar, RWR and noise-jammer link budgets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("link", help="one-way telecom link budget")
    p.add_argument("--power-w", type=float)
    p.add_argument("--power-dbw", type=float)
    p.add_argument("--tx-gain-db", type=float, default=0.0)
    p.add_argument("--rx-gain-db", type=float, default=0.0)
    p.add_argument("--frequency-hz", type=float, required=True)
    p.add_argument("--range-km", type=float, required=True)
    p.set_defaults(func=cmd_link)

    def with_config(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", required=True, help="scenario file, or a bundled name such as table1_compat")

    p = sub.add_parser("radar", help="radar echo budget and SNR for one target")
    with_config(p)
    p.add_argument("--range-km", type=float, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--formulation", choices=FORMULATIONS, default="target_gain_chain")
    p.set_defaults(func=cmd_radar)

    p = sub.add_parser("rwr", help="radar emission at the platform's warning receiver")
    with_config(p)
    p.add_argument("--range-km", type=float, required=True)
    p.add_argument("--signal", choices=("pulsed", "cw"), default="pulsed")
    p.set_defaults(func=cmd_rwr)

    p = sub.add_parser("jam", help="jamming power at the radar, optionally JSR/SJR for a target")
    with_config(p)
    p.add_argument("--range-km", type=float, required=True, help="target range")
    p.add_argument("--target")
    p.add_argument("--jsr-mode", choices=JSR_MODES)
    p.set_defaults(func=cmd_jam)

    p = sub.add_parser("sweep", help="range sweep to CSV, optionally an SVG plot")
    with_config(p)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--plot", help="SVG output path")
    p.add_argument("--linear-x", action="store_true", help="linear range axis instead of log")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("burnthrough", help="range where SJR reaches a threshold")
    with_config(p)
    p.add_argument("--target", required=True)
    p.add_argument("--threshold-db", type=float, default=0.0)
    p.add_argument("--method", choices=("closed_form", "bisection"))
    p.add_argument("--jsr-mode", choices=JSR_MODES, default="approximate")
    p.set_defaults(func=cmd_burnthrough)
    return parser


def dispatch(argv: list[str], out: TextIO, err: TextIO) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except (ConfigError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CONFIG
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
