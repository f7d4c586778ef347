"""Command-line front end.

Subcommands map one-to-one onto the optimization engines; every run
prints a human-readable summary to stdout and writes a structured
result file (CSV by default).  Exit codes: 0 on success, 2 when the
target is infeasible, 1 on any error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .config import ConfigError, RunConfig, load_config, show_config
from .driver import (
    SweepAxis,
    breakdown_records,
    compare_rsa,
    result_record,
    run_problem,
    sweep,
)
from .results import emit_results

_EXT = {"csv": "csv", "jsonl": "jsonl"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coldstack",
        description="Full-stack power modeling and constrained power "
                    "minimization for cryogenic quantum computers.")
    parser.add_argument("--config", help="path to a configuration file")
    parser.add_argument("--show-config", action="store_true",
                        help="print the resolved configuration and exit")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--out", help="structured result file path "
                                     "(default: <command>.<format>)")
        p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        p.add_argument("--target", type=float,
                       help="override the target metric from the config")

    common(sub.add_parser("optimize-1qb", help="minimize single-gate power"))
    common(sub.add_parser("optimize-nisq", help="minimize circuit power"))
    common(sub.add_parser("optimize-ft", help="minimize fault-tolerant power"))
    p = sub.add_parser("sweep", help="optimize over a parameter grid")
    common(p)
    p.add_argument("--sweep", action="append", required=True, metavar="AXIS",
                   help="axis spec key=start:stop:points[:log]; repeatable")
    p = sub.add_parser("compare-rsa", help="quantum vs classical factoring table")
    common(p)
    p.add_argument("--n", default="512:4096:8:log", metavar="RANGE",
                   help="key sizes as start:stop:points[:log]")
    p = sub.add_parser("breakdown", help="per-stage power decomposition "
                                         "of the optimum")
    common(p)
    return parser


def _load(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    if getattr(args, "target", None) is not None:
        cfg = cfg.replace(target_metric=args.target)
    return cfg


def _kind_for(command: str, cfg: RunConfig) -> RunConfig:
    if command == "optimize-1qb":
        return cfg.replace(workload_kind="gate")
    if command == "optimize-nisq":
        return cfg.replace(workload_kind="nisq")
    if command == "optimize-ft" and cfg.workload_kind not in ("rsa", "rectangular"):
        return cfg.replace(workload_kind="rsa")
    return cfg


def _summarize(cfg: RunConfig, result) -> None:
    if not result.feasible:
        print("INFEASIBLE:", result.diagnostic)
        return
    c = result.control
    print(f"minimum power: {result.power_w:.4e} W")
    print(f"achieved metric: {result.metric_achieved:.9f} "
          f"(target {cfg.target_metric:.9f})")
    parts = []
    if c.t_qb is not None:
        parts.append(f"T_qb = {c.t_qb:.4g} K")
    if c.t_gen is not None:
        parts.append(f"T_gen = {c.t_gen:.4g} K")
    if c.a_total is not None:
        parts.append(f"attenuation = {10*math.log10(c.a_total):.2f} dB "
                     f"({c.a_total:.4g})")
    if c.k is not None:
        parts.append(f"concatenation level = {c.k}")
    if c.m is not None:
        parts.append(f"compression = {c.m}")
    print("operating point:", ", ".join(parts))
    print(f"physical qubits: {result.physical_qubits}")
    print(f"per-qubit power: {result.per_qubit_power_w:.4e} W")
    if result.magnification is not None:
        print(f"power magnification A*T_ext/T_qb: {result.magnification:.4e}")


def _parse_n_range(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) not in (3, 4):
        raise ValueError(f"bad range {spec!r}; want start:stop:points[:log]")
    start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    if len(parts) == 4:
        if parts[3] != "log":
            raise ValueError(f"bad range {spec!r}; trailing flag must be 'log'")
        values = np.logspace(math.log10(start), math.log10(stop), points)
    else:
        values = np.linspace(start, stop, points)
    return sorted({int(round(v)) for v in values})


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.show_config:
        print(show_config(cfg), end="")
        return 0
    if args.command is None:
        parser.print_help()
        return 1
    out = args.out or f"{args.command}.{_EXT[args.format]}"
    try:
        return _dispatch(args, cfg, out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args, cfg: RunConfig, out: str) -> int:
    if args.command in ("optimize-1qb", "optimize-nisq", "optimize-ft"):
        cfg = _kind_for(args.command, cfg)
        result = run_problem(cfg)
        _summarize(cfg, result)
        emit_results([result_record(cfg, result)], out, args.format)
        print(f"results written to {out}")
        return 0 if result.feasible else 2
    if args.command == "sweep":
        axes = [SweepAxis.parse(spec) for spec in args.sweep]
        rows = sweep(cfg, axes)
        emit_results(rows, out, args.format)
        feasible = sum(1 for r in rows if r["feasible"])
        print(f"swept {len(rows)} points ({feasible} feasible); "
              f"results written to {out}")
        return 0 if feasible else 2
    if args.command == "compare-rsa":
        n_values = _parse_n_range(args.n)
        rows = compare_rsa(cfg, n_values)
        emit_results(rows, out, args.format)
        adv = [r["rsa_n"] for r in rows if r["quantum_more_efficient"]]
        if adv:
            print(f"quantum energy advantage from n = {min(adv)} within the "
                  f"scanned range")
        else:
            print("no quantum energy advantage in the scanned range")
        print(f"results written to {out}")
        return 0 if any(r["feasible"] for r in rows) else 2
    if args.command == "breakdown":
        if cfg.workload_kind not in ("rsa", "rectangular"):
            cfg = cfg.replace(workload_kind="rsa")
        result = run_problem(cfg)
        _summarize(cfg, result)
        rows = breakdown_records(cfg, result)
        emit_results(rows, out, args.format)
        print(f"breakdown written to {out}")
        return 0 if result.feasible else 2
    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
