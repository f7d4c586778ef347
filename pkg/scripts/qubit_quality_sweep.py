#!/usr/bin/env python3
"""Sweep the minimized full-stack power against qubit quality for the
three control-electronics scenarios.

Produces one CSV row per (scenario, qubit lifetime) with the optimal
operating point, suitable for log-log plotting of power versus
lifetime.
"""

import argparse

from coldstack.config import RunConfig
from coldstack.driver import SweepAxis, sweep
from coldstack.results import emit_results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="qubit_quality_sweep.csv")
    parser.add_argument("--points", type=int, default=15)
    parser.add_argument("--lifetime-min-s", type=float, default=3e-3)
    parser.add_argument("--lifetime-max-s", type=float, default=1.0)
    parser.add_argument("--rsa-n", type=int, default=2048)
    parser.add_argument("--small-scale", action="store_true",
                        help="use the laboratory cryostat efficiency model")
    args = parser.parse_args()

    rows = []
    for scenario in ("A", "B", "C"):
        cfg = RunConfig().replace(
            scenario=scenario,
            rsa_n=args.rsa_n,
            efficiency_model="small_scale" if args.small_scale else "carnot",
        )
        axis = SweepAxis("gamma_inverse_s", args.lifetime_min_s,
                         args.lifetime_max_s, args.points, log=True)
        rows.extend(sweep(cfg, [axis]))
    emit_results(rows, args.out)
    feasible = [r for r in rows if r["feasible"]]
    print(f"{len(feasible)}/{len(rows)} feasible points written to {args.out}")


if __name__ == "__main__":
    main()
