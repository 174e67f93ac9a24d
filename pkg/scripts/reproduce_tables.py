"""Theory, virtual experiment and reference measurements side by side.

    python scripts/reproduce_tables.py [--seed N] [--out DIR]
"""

import argparse

from cohsteer.cli import cmd_simulate
from cohsteer.coherence import MEASURES
from cohsteer.expsim import ExperimentConfig
from cohsteer.reference import MEASURED_TABLES


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=ExperimentConfig.seed)
    ap.add_argument("--out")
    args = ap.parse_args()

    ds = cmd_simulate(ExperimentConfig(seed=args.seed), args.out, quiet=True)
    for m in MEASURES:
        print(f"\n{m.value.upper()}  (bound {m.bound:.4f})")
        print(f"{'theta':>5} | {'S12/2 th':>8} {'sim':>15} {'reference':>15} | {'S0 th':>7} {'sim':>15} {'reference':>15}")
        for th, ref in MEASURED_TABLES[m.value].items():
            r = ds.row(th, m.value)
            (s0, e0), (s12, e12), _ = ref
            print(f"{th:5.0f} | {r.s12half_theory:8.4f} {r.s12half_sim:8.4f}±{r.s12half_err:.4f} "
                  f"{s12:8.4f}±{e12:.4f} | {r.s0_theory:7.4f} {r.s0_sim:8.4f}±{r.s0_err:.4f} {s0:8.4f}±{e0:.4f}")
    print(f"\nmean state fidelity {ds.metadata['mean_fidelity']:.4f}")


if __name__ == "__main__":
    main()
