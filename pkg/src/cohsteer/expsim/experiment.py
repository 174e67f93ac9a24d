"""Virtual run of the Bell-like steering experiment.

For every angle theta:

1. prepare cos(theta)|HH> + sin(theta)|VV> and apply white noise plus
   Bob-side z-dephasing;
2. for each of Alice's six projectors, count Bob's photon in the three
   Pauli bases (36 coincidence settings) and reconstruct Bob's conditional
   state by single-qubit tomography; Alice's outcome probabilities come
   from the same coincidence totals;
3. evaluate the coherence criteria on the reconstructed ensemble and
   attach parametric-bootstrap error bars;
4. separately count sigma_i (x) sigma_i for the entropic steering test and
   run a full two-qubit tomography of the prepared state for its fidelity.

Each angle draws from its own stream, ``SeedSequence([seed, index])``, so a
sweep gives identical numbers whether points run sequentially or in a
process pool.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..coherence import AXES, MEASURES
from ..dataset import SweepDataset
from ..states import bell_like, fidelity, maximally_mixed, noisy_bell_like
from ..steering import (
    ZERO_PROBABILITY,
    Branch,
    ConditionalEnsemble,
    criterion_values_from_sums,
    sigeur_from_joint,
    weighted_coherence_sums,
)
from ..theory import REFERENCE_THETAS, theory_rows, theory_sigeur_row
from .counting import bootstrap_errors, counts_diagonal, counts_grid, pair_settings, simulate_counts
from .optics import JonesConvention, measurement_projectors, select_tomography_convention
from .tomography import InsufficientCountsError, tomo_1q, tomo_2q


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    thetas: tuple = REFERENCE_THETAS
    counts_per_setting: int = 5000
    visibility: float = 0.995
    dephasing: float = 0.005
    bootstrap_resamples: int = 200
    seed: int = 20200101
    exact_counts: bool = False
    sigeur_n: float = 2.0
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        if not self.thetas:
            raise ConfigError("thetas must not be empty")
        if int(self.counts_per_setting) != self.counts_per_setting or self.counts_per_setting <= 0:
            raise ConfigError("counts_per_setting must be a positive integer")
        if not 0.0 <= self.visibility <= 1.0:
            raise ConfigError("visibility must lie in [0, 1]")
        if not 0.0 <= self.dephasing <= 1.0:
            raise ConfigError("dephasing must lie in [0, 1]")
        if int(self.bootstrap_resamples) != self.bootstrap_resamples or self.bootstrap_resamples < 2:
            raise ConfigError("bootstrap_resamples must be an integer >= 2")
        if int(self.seed) != self.seed:
            raise ConfigError("seed must be an integer")
        if not 0.0 < self.sigeur_n <= 2.0 or self.sigeur_n == 1.0:
            raise ConfigError("sigeur_n must lie in (0, 2] and differ from 1")
        if int(self.workers) != self.workers or self.workers < 1:
            raise ConfigError("workers must be a positive integer")

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["thetas"] = list(self.thetas)
        return d


# -- pipelines: counts -> numbers ---------------------------------------------

def ensembles_from_counts(grid) -> tuple[ConditionalEnsemble, ...]:
    """Conditional ensembles from coincidence counts ``[i, j, a, b]``.

    ``i``: Alice's axis, ``j``: Bob's tomography axis, ``a``/``b``: outcomes.
    An outcome of Alice with (numerically) no events becomes a zero-weight branch.
    """
    grid = np.asarray(grid, dtype=float)
    out = []
    for i, ax in enumerate(AXES):
        alice = grid[i].sum(axis=(0, 2))
        total = alice.sum()
        if total <= 0:
            raise InsufficientCountsError(f"no coincidences recorded for Alice's {ax.value} setting")
        branches = []
        for a in (0, 1):
            if alice[a] <= ZERO_PROBABILITY * total:
                branches.append(Branch(a, 0.0, maximally_mixed(2)))
            else:
                branches.append(Branch(a, float(alice[a] / total), tomo_1q(grid[i, :, a, :])))
        out.append(ConditionalEnsemble(ax, tuple(branches)))
    return tuple(out)


def criteria_from_counts(grid) -> np.ndarray:
    """Array ``[measure, (S_0, S_12/2, S_012/3)]`` with measures in l1c, rec, sic order."""
    sums = weighted_coherence_sums(ensembles_from_counts(grid))
    out = np.empty((len(MEASURES), 3))
    for k, m in enumerate(MEASURES):
        v = criterion_values_from_sums(sums[m])
        out[k] = (v.s0, v.s12_half, v.s012_third)
    return out


def joint_from_counts(diag) -> np.ndarray:
    diag = np.asarray(diag, dtype=float)
    totals = diag.sum(axis=(1, 2), keepdims=True)
    if np.any(totals <= 0):
        raise InsufficientCountsError("an entropic-test setting has zero total counts")
    return diag / totals


def sigeur_from_counts(diag, n: float = 2.0) -> float:
    return sigeur_from_joint(joint_from_counts(diag), n)


# -- one angle -----------------------------------------------------------------

@dataclass
class PointResult:
    index: int
    theta_deg: float
    criteria: np.ndarray
    criteria_err: np.ndarray
    sigeur: float
    sigeur_err: float
    fidelity: float
    conditional_tomographies: int
    counts: dict = field(default_factory=dict, repr=False)


def point_seed(seed: int, index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed), int(index)])


def _streams(config: ExperimentConfig, index: int) -> dict:
    names = ("counts", "boot", "sigeur", "sigeur_boot", "state")
    return dict(zip(names, point_seed(config.seed, index).spawn(len(names))))


def prepared_state(theta_deg: float, config: ExperimentConfig) -> np.ndarray:
    return noisy_bell_like(theta_deg, config.visibility, config.dephasing, degrees=True)


def sigeur_point(index: int, theta_deg: float, config: ExperimentConfig,
                 convention: JonesConvention) -> tuple[float, float, np.ndarray]:
    """Entropic-test value, its bootstrap error and the raw ``[i, a, b]`` counts."""
    st = _streams(config, index)
    rho = prepared_state(theta_deg, config)
    settings = pair_settings(measurement_projectors(convention), diagonal_only=True)
    diag = counts_diagonal(
        simulate_counts(rho, settings, config.counts_per_setting, st["sigeur"], config.exact_counts)
    )
    n = config.sigeur_n
    _, err = bootstrap_errors(diag, lambda c: sigeur_from_counts(c, n),
                              config.bootstrap_resamples, st["sigeur_boot"])
    return sigeur_from_counts(diag, n), float(err), diag


def state_tomography_point(index: int, theta_deg: float, config: ExperimentConfig,
                           convention: JonesConvention) -> tuple[float, np.ndarray]:
    """Fidelity of the reconstructed prepared state to the ideal Bell-like state."""
    st = _streams(config, index)
    rho = prepared_state(theta_deg, config)
    full = counts_grid(simulate_counts(rho, pair_settings(measurement_projectors(convention)),
                                       config.counts_per_setting, st["state"], config.exact_counts))
    return fidelity(tomo_2q(full), bell_like(theta_deg, degrees=True)), full


def run_point(index: int, theta_deg: float, config: ExperimentConfig,
              convention: JonesConvention) -> PointResult:
    st = _streams(config, index)
    rho = prepared_state(theta_deg, config)
    projectors = measurement_projectors(convention)

    cond = counts_grid(simulate_counts(rho, pair_settings(projectors), config.counts_per_setting,
                                       st["counts"], config.exact_counts))
    criteria = criteria_from_counts(cond)
    _, criteria_err = bootstrap_errors(cond, criteria_from_counts, config.bootstrap_resamples, st["boot"])

    sig, sig_err, diag = sigeur_point(index, theta_deg, config, convention)
    fid, full = state_tomography_point(index, theta_deg, config, convention)

    return PointResult(
        index=index,
        theta_deg=theta_deg,
        criteria=criteria,
        criteria_err=criteria_err,
        sigeur=sig,
        sigeur_err=sig_err,
        fidelity=fid,
        conditional_tomographies=2 * len(AXES),
        counts={"conditional": cond, "sigeur": diag, "state": full},
    )


def _run_point_args(args):
    return run_point(*args)


def run_points(config: ExperimentConfig, convention: JonesConvention | None = None) -> list[PointResult]:
    convention = convention or select_tomography_convention()
    jobs = [(k, th, config, convention) for k, th in enumerate(config.thetas)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_run_point_args, jobs))
    return [run_point(*job) for job in jobs]


def run_virtual_experiment(config: ExperimentConfig,
                           convention: JonesConvention | None = None) -> SweepDataset:
    convention = convention or select_tomography_convention()
    points = run_points(config, convention)
    ds = SweepDataset(metadata={
        "kind": "simulation",
        "config": config.as_dict(),
        "jones_convention": convention.as_dict(),
        "conditional_tomographies": sum(p.conditional_tomographies for p in points),
        "mean_fidelity": float(np.mean([p.fidelity for p in points])),
    })
    for p in points:
        for k, row in enumerate(theory_rows(p.theta_deg, MEASURES)):
            sim, err = p.criteria[k], p.criteria_err[k]
            row.s0_sim, row.s12half_sim, row.s012third_sim = (float(x) for x in sim)
            row.s0_err, row.s12half_err, row.s012third_err = (float(x) for x in err)
            ds.rows.append(row)
        srow = theory_sigeur_row(p.theta_deg, config.sigeur_n)
        srow.sim, srow.sim_err = p.sigeur, p.sigeur_err
        ds.sigeur_rows.append(srow)
        ds.points.append({"theta_deg": p.theta_deg, "fidelity": p.fidelity,
                          "conditional_tomographies": p.conditional_tomographies})
    return ds

