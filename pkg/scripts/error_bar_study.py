"""How the bootstrap error bars of the L1C criteria depend on state noise.

Near theta = 45 deg the conditional states are almost pure, so their Pauli
statistics are nearly deterministic and the Poisson spread of S_12/2 is tiny.
Larger spreads need strong white noise, which in turn drags S_12/2 far from
its near-pure value.

    python scripts/error_bar_study.py [--theta 45]
"""

import argparse

from cohsteer.expsim import ExperimentConfig, run_virtual_experiment

VISIBILITIES = (1.0, 0.995, 0.98, 0.95, 0.9, 0.8, 0.7, 0.5, 0.0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--theta", type=float, default=45.0)
    ap.add_argument("--counts", type=int, default=5000)
    args = ap.parse_args()

    print(f"theta {args.theta:g} deg, {args.counts} counts per setting")
    print(f"{'v':>6} {'S0':>8} {'err':>7} {'S12/2':>8} {'err':>7} {'S012/3':>8} {'err':>7}")
    for v in VISIBILITIES:
        cfg = ExperimentConfig(thetas=(args.theta,), visibility=v, dephasing=0.0,
                               counts_per_setting=args.counts)
        r = run_virtual_experiment(cfg).row(args.theta, "l1c")
        print(f"{v:6.3f} {r.s0_sim:8.4f} {r.s0_err:7.4f} {r.s12half_sim:8.4f} {r.s12half_err:7.4f} "
              f"{r.s012third_sim:8.4f} {r.s012third_err:7.4f}")


if __name__ == "__main__":
    main()
