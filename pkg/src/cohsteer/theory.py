"""Noise-free criterion values for the Bell-like family, exact and in closed form."""

from __future__ import annotations

import numpy as np

from .coherence import MEASURES, Measure
from .dataset import CriterionRow, SigeurRow, SweepDataset
from .states import bell_like
from .steering import (
    criterion_values_from_sums,
    ensembles,
    sigeur_bound,
    sigeur_lhs,
    weighted_coherence_sums,
)

# Angles (degrees) of the reference measurement series.
REFERENCE_THETAS = (0.0, 10.0, 20.0, 30.0, 40.0, 45.0, 50.0, 60.0, 70.0, 80.0, 90.0)


def binary_entropy(p: float) -> float:
    p = float(np.clip(p, 0.0, 1.0))
    return float(-sum(q * np.log2(q) for q in (p, 1.0 - p) if q > 0.0))


def closed_form(theta_deg: float, measure) -> tuple[float, float, float]:
    """(S_0, S_12/2, S_012/3) for cos(t)|HH> + sin(t)|VV>, derived by hand from the six branches."""
    t = np.deg2rad(theta_deg)
    c2, s2 = np.cos(2 * t), np.sin(2 * t)
    measure = Measure.parse(measure)
    if measure is Measure.L1C:
        s0, s12 = 2 * abs(c2), 2 + abs(s2)
    elif measure is Measure.REC:
        s0, s12 = 2 * binary_entropy((1 + s2) / 2), 2 + binary_entropy(np.cos(t) ** 2)
    else:
        s0, s12 = 2 * c2 ** 2, 2 + s2 ** 2
    return float(s0), float(s12), float((s0 + 2 * s12) / 3)


def closed_form_sigeur(theta_deg: float) -> float:
    """n = 2 entropic steering value, cos^2(2 theta)."""
    return float(np.cos(2 * np.deg2rad(theta_deg)) ** 2)


def theory_rows(theta_deg: float, measures=MEASURES) -> list[CriterionRow]:
    sums = weighted_coherence_sums(ensembles(bell_like(theta_deg, degrees=True)))
    rows = []
    for m in measures:
        m = Measure.parse(m)
        v = criterion_values_from_sums(sums[m])
        rows.append(CriterionRow(theta_deg, m.value, v.s0, v.s12_half, v.s012_third, m.bound))
    return rows


def theory_sigeur_row(theta_deg: float, n: float = 2.0) -> SigeurRow:
    return SigeurRow(theta_deg, n, sigeur_lhs(bell_like(theta_deg, degrees=True), n), sigeur_bound(n))


def theory_dataset(thetas=REFERENCE_THETAS, measures=MEASURES, n: float = 2.0) -> SweepDataset:
    ds = SweepDataset(metadata={"kind": "theory", "thetas": list(thetas),
                                "measures": [Measure.parse(m).value for m in measures]})
    for th in thetas:
        ds.rows.extend(theory_rows(th, measures))
        ds.sigeur_rows.append(theory_sigeur_row(th, n))
    return ds
