"""Poisson coincidence counting and parametric bootstrap error bars."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from ..coherence import AXES
from ..matcore import tensor


@dataclass(frozen=True)
class CountRecord:
    """Counts for one measurement setting, one entry per outcome projector."""

    label: tuple
    counts: np.ndarray
    mean_flux: float


def born_probabilities(rho, projectors: Sequence[np.ndarray]) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    p = np.array([np.trace(P @ rho).real for P in projectors])
    return np.clip(p, 0.0, None)


def simulate_counts(rho, settings: Mapping[tuple, Sequence[np.ndarray]], mean_flux: float,
                    rng=None, exact: bool = False) -> list[CountRecord]:
    """Draw Poisson(N p) counts for every outcome projector of every setting.

    ``rng`` is a seed or ``Generator``.  With ``exact=True`` the expected
    counts ``N p`` are returned unchanged (noise-free limit) and ``rng`` is
    not touched.
    """
    if mean_flux <= 0:
        raise ValueError("mean_flux must be positive")
    gen = None if exact else np.random.default_rng(rng)
    records = []
    for label, projs in settings.items():
        lam = mean_flux * born_probabilities(rho, projs)
        counts = lam if exact else gen.poisson(lam)
        records.append(CountRecord(label, counts, mean_flux))
    labels = [r.label for r in records]
    if len(set(labels)) != len(labels):
        raise ValueError("setting labels must be unique")
    return records


def pair_settings(projectors: Mapping[tuple, np.ndarray], diagonal_only: bool = False) -> dict:
    """Settings ``(axis_A, axis_B)`` -> four projectors ``P_a (x) P_b`` in (a, b) row-major order.

    ``projectors`` maps ``(axis, outcome)`` to a qubit projector.
    """
    settings = {}
    for ax_a in AXES:
        for ax_b in AXES:
            if diagonal_only and ax_a is not ax_b:
                continue
            settings[(ax_a.value, ax_b.value)] = [
                tensor(projectors[(ax_a, a)], projectors[(ax_b, b)]) for a in (0, 1) for b in (0, 1)
            ]
    return settings


def counts_grid(records: Sequence[CountRecord]) -> np.ndarray:
    """Arrange pair-setting records into an array ``[i, j, a, b]`` (axes in x, y, z order)."""
    order = {ax.value: k for k, ax in enumerate(AXES)}
    grid = np.zeros((3, 3, 2, 2))
    for rec in records:
        i, j = (order[x] for x in rec.label)
        grid[i, j] = np.asarray(rec.counts, dtype=float).reshape(2, 2)
    return grid


def counts_diagonal(records: Sequence[CountRecord]) -> np.ndarray:
    """Arrange same-axis pair records into ``[i, a, b]``."""
    order = {ax.value: k for k, ax in enumerate(AXES)}
    out = np.zeros((3, 2, 2))
    for rec in records:
        i, j = (order[x] for x in rec.label)
        if i != j:
            raise ValueError(f"record {rec.label} is not a same-axis setting")
        out[i] = np.asarray(rec.counts, dtype=float).reshape(2, 2)
    return out


def bootstrap_errors(counts, pipeline: Callable, resamples: int, seed=None):
    """Parametric bootstrap: redraw every count as Poisson(observed) and rerun ``pipeline``.

    ``pipeline`` maps a counts array to a scalar or an array of scalars.
    Returns ``(mean, stddev)`` over the resamples (sample stddev, ddof=1).
    """
    if resamples < 2:
        raise ValueError("need at least two bootstrap resamples")
    rng = np.random.default_rng(seed)
    counts = np.asarray(counts, dtype=float)
    values = np.array([pipeline(rng.poisson(counts)) for _ in range(resamples)], dtype=float)
    return values.mean(axis=0), values.std(axis=0, ddof=1)
