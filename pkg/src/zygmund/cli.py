"""Command-line front end for the experiment harness.

Subcommands: classify, rate-check, witness, table-vnad, best-approx.  Every
command reads a flat key-value config (see `zygmund.config`), writes CSV
files into the output directory, and exits 0 only when all verdicts pass and
no validation error occurred.  Outputs are deterministic: identical config
and seed give byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ExperimentConfig, parse_config
from .decay import (
    Power,
    check_almost_decreasing,
    check_doubling,
    classify_regime,
    reciprocal_convexity,
)
from .errors import CoefficientMismatchError, ConfigError, ZygmundError
from .rates import best_vs_method_experiment, loglog_slope, ratio_experiment
from .trig import TrigPoly
from .witness import WitnessConfig, build_witness, dual_test_poly, lower_bound, pairing_integral

__all__ = ["main"]


def trig_poly_csv(p: TrigPoly) -> str:
    """Serialize a polynomial: a header row carrying a0, then rows k,a_k,b_k."""
    lines = [f"a0,{p.a0!r}", "k,a_k,b_k"]
    for k in range(1, p.degree + 1):
        lines.append(f"{k},{float(p.a[k - 1])!r},{float(p.b[k - 1])!r}")
    return "\n".join(lines) + "\n"


def read_trig_poly_csv(text: str) -> TrigPoly:
    """Inverse of trig_poly_csv (round-trip exact)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    a0 = float(lines[0].split(",")[1])
    a, b = [], []
    for row in lines[2:]:
        _, ak, bk = row.split(",")
        a.append(float(ak))
        b.append(float(bk))
    return TrigPoly(a0, a, b)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _write_plot_data(out_dir: Path, name: str, ns, values) -> None:
    """Two-column (n, value) whitespace-separated file for plotting tools."""
    lines = [f"{n} {v!r}" for n, v in zip(ns, values)]
    _write(out_dir / f"{name}.dat", "\n".join(lines) + "\n")


def _grid_label(ns) -> str:
    return f"n in [{ns[0]}..{ns[-1]}]"


def cmd_classify(cfg: ExperimentConfig) -> int:
    method = cfg.method
    regime = classify_regime(cfg.psi, method)
    theta = check_almost_decreasing(cfg.psi, method.q_prime)
    doubling = check_doubling(cfg.psi, 1.0e6)
    convexity = reciprocal_convexity(cfg.psi, 64)

    eps = f" (epsilon={regime.epsilon!r})" if regime.epsilon is not None else ""
    theta_verdict = {True: "true", False: "false", None: "indeterminate"}[theta.member]
    cert = ""
    if theta.member:
        cert = f" alpha={theta.alpha!r} K={theta.bound:.6g}"
    print(f"psi        : {cfg.psi_family} {cfg.psi}")
    print(f"method     : s={method.s!r} q={method.q!r} beta={method.beta!r} q'={method.q_prime!r}")
    print(f"regime     : {regime.regime.value}{eps}")
    print(f"theta(q'={method.q_prime:g}) : {theta_verdict}{cert}")
    print(f"doubling   : bounded={str(doubling.bounded).lower()} K={doubling.bound:.6g}")
    print(f"1/psi      : {convexity.value}")
    return 0


def cmd_rate_check(cfg: ExperimentConfig) -> int:
    ns = cfg.require_n_grid()
    report = ratio_experiment(cfg.psi, cfg.method, ns, band_limit=cfg.band_limit)
    _write(cfg.output_dir / "rate_report.csv", report.to_csv())
    _write_plot_data(cfg.output_dir, "deviation", report.n_grid, report.deviations)
    _write_plot_data(cfg.output_dir, "lower_bound", report.n_grid, report.lower_bounds)
    _write_plot_data(cfg.output_dir, "upper_rate", report.n_grid, report.upper_rates)
    spread = report.ratio_band[1] / report.ratio_band[0]
    regime = classify_regime(cfg.psi, cfg.method).regime.value
    if report.verdict:
        print(f"BANDED within {spread:.4g} over {_grid_label(ns)} (regime={regime}, limit={cfg.band_limit:g})")
        return 0
    print(f"NOT BANDED: spread {spread:.4g} exceeds limit {cfg.band_limit:g} over {_grid_label(ns)} (regime={regime})")
    return 1


def cmd_witness(cfg: ExperimentConfig, n: int) -> int:
    wcfg = WitnessConfig(psi=cfg.psi, method=cfg.method, n=n)
    result = build_witness(wcfg)
    try:
        closed, quadrature = pairing_integral(wcfg)
    except CoefficientMismatchError as exc:
        print(f"pairing mismatch: {exc}", file=sys.stderr)
        return 1
    lower = lower_bound(wcfg, result)

    header = "n,alpha0,I_closed,I_quadrature,lower_bound,deviation"
    row = (
        f"{n},{result.alpha0!r},{closed!r},{quadrature!r},"
        f"{result.lower_bound!r},{result.deviation!r}"
    )
    _write(cfg.output_dir / "witness.csv", header + "\n" + row + "\n")
    _write(cfg.output_dir / "witness_phi.csv", trig_poly_csv(result.phi))
    _write(cfg.output_dir / "witness_f.csv", trig_poly_csv(result.f))
    _write(cfg.output_dir / "witness_dual.csv", trig_poly_csv(dual_test_poly(wcfg)))
    print(header)
    print(row)
    print(f"sum-form lower bound: {lower!r}")
    return 0


def cmd_table_vnad(cfg: ExperimentConfig) -> int:
    ns = cfg.require_n_grid()
    r_values = cfg.require_r_list()
    method = cfg.method
    boundary = method.s + 1.0 - 1.0 / method.q

    rows = []
    all_ok = True
    for r in r_values:
        if not (r > 1.0 - 1.0 / method.q):
            rows.append((r, "rejected", "", "", "", "requires r>1-1/q"))
            all_ok = False
            continue
        if r < boundary - 1.0e-12:
            case, slope_theory = "case1", -(r - 1.0 + 1.0 / method.q)
        elif r > boundary + 1.0e-12:
            case, slope_theory = "case3", -method.s
        else:
            case, slope_theory = "case2", -method.s
        report = ratio_experiment(Power(r), method, ns, band_limit=cfg.band_limit)
        spread = report.ratio_band[1] / report.ratio_band[0]
        slope = loglog_slope(report.n_grid, report.deviations)
        ok = report.verdict
        if case == "case1":
            ok = ok and abs(slope - slope_theory) < 0.1
        all_ok = all_ok and ok
        rows.append((r, case, f"{spread:.4g}", f"{slope:.4f}", f"{slope_theory:.4f}", "ok" if ok else "failed"))

    print(f"{'r':>6}  {'case':>8}  {'band':>8}  {'slope':>8}  {'theory':>8}  verdict")
    csv_lines = ["r,case,band,slope,slope_theory,verdict"]
    for r, case, spread, slope, theory, verdict in rows:
        print(f"{r:>6g}  {case:>8}  {spread:>8}  {slope:>8}  {theory:>8}  {verdict}")
        csv_lines.append(f"{r!r},{case},{spread},{slope},{theory},{verdict}")
    _write(cfg.output_dir / "vnad_table.csv", "\n".join(csv_lines) + "\n")
    return 0 if all_ok else 1


def cmd_best_approx(cfg: ExperimentConfig) -> int:
    ns = cfg.require_n_grid()
    report = best_vs_method_experiment(
        cfg.psi, cfg.method, ns, band_limit=max(cfg.band_limit, 5.0)
    )
    lines = ["n,best_value,zygmund_deviation,rate,best_ratio,zygmund_ratio"]
    for n, best, dev, rate in zip(report.n_grid, report.lower_bounds, report.deviations, report.upper_rates):
        lines.append(f"{n},{best!r},{dev!r},{rate!r},{best / rate!r},{dev / rate!r}")
    _write(cfg.output_dir / "best_vs_method.csv", "\n".join(lines) + "\n")
    _write_plot_data(cfg.output_dir, "best_value", report.n_grid, report.lower_bounds)
    _write_plot_data(cfg.output_dir, "zygmund_deviation", report.n_grid, report.deviations)
    spread = report.ratio_band[1] / report.ratio_band[0]
    if report.verdict:
        print(f"BANDED within {spread:.4g} over {_grid_label(ns)}; best approximation dominated throughout")
        return 0
    print(f"NOT BANDED or domination failed: spread {spread:.4g} over {_grid_label(ns)}")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zygmund",
        description="Summation-method rate experiments on periodic convolution classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("classify", "print regime and structural-class verdicts"),
        ("rate-check", "run the bounded-ratio experiment, emit rate_report.csv"),
        ("witness", "build the extremal witness at one order, emit CSV dumps"),
        ("table-vnad", "three-case rate table over a list of decay exponents"),
        ("best-approx", "compare best approximation with the Zygmund deviation"),
    ]:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--config", required=True, help="path to the experiment config file")
        sp.add_argument("--out", default=None, help="output directory (overrides output_dir)")
        sp.add_argument("--seed", type=int, default=None, help="RNG seed (overrides seed)")
        sp.add_argument(
            "--band-limit", type=float, default=None, help="ratio band limit (overrides band_limit)"
        )
        if name == "witness":
            sp.add_argument("--n", type=int, required=True, help="polynomial order of the witness")
    return parser


def _apply_overrides(cfg: ExperimentConfig, args: argparse.Namespace) -> ExperimentConfig:
    updates = {}
    if args.out is not None:
        updates["output_dir"] = Path(args.out)
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.band_limit is not None:
        if not (args.band_limit > 1.0):
            raise ConfigError("band_limit", "must exceed 1")
        updates["band_limit"] = args.band_limit
    if not updates:
        return cfg
    from dataclasses import replace

    return replace(cfg, **updates)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _apply_overrides(parse_config(args.config), args)
        if args.command == "classify":
            return cmd_classify(cfg)
        if args.command == "rate-check":
            return cmd_rate_check(cfg)
        if args.command == "witness":
            return cmd_witness(cfg, args.n)
        if args.command == "table-vnad":
            return cmd_table_vnad(cfg)
        if args.command == "best-approx":
            return cmd_best_approx(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZygmundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    raise SystemExit(main())
