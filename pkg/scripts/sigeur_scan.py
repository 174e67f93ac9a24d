"""Entropic steering test across the Bell-like family and several Tsallis orders.

    python scripts/sigeur_scan.py [--step 5]
"""

import argparse

import numpy as np

from cohsteer.states import bell_like
from cohsteer.steering import sigeur_bound, sigeur_lhs

ORDERS = (0.5, 1.5, 2.0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--step", type=float, default=5.0)
    args = ap.parse_args()

    print("theta " + " ".join(f"{f'n={n:g}':>14}" for n in ORDERS))
    print("bound " + " ".join(f"{sigeur_bound(n):14.4f}" for n in ORDERS))
    for th in np.arange(0.0, 90.0 + 1e-9, args.step):
        rho = bell_like(th, degrees=True)
        cells = []
        for n in ORDERS:
            v = sigeur_lhs(rho, n)
            cells.append(f"{v:12.4f}{' *' if v < sigeur_bound(n) else '  '}")
        print(f"{th:5.1f} " + " ".join(cells))
    print("* steering detected")


if __name__ == "__main__":
    main()
