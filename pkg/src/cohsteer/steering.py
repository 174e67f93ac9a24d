"""Coherence steering criteria and the entropic (Tsallis-type) steering inequality.

Alice measures each Pauli observable sigma_i; for each outcome a Bob holds a
conditional state.  The probability-weighted coherence sums

    S_ell = sum_{i, a} p(a|i) C_{i + ell}(rho_{B|a,i}),   ell in {0, 1, 2}

(axis index shifted cyclically over x, y, z) give the one-setting value S_0,
the two-setting value (S_1 + S_2)/2 and the three-setting value
(S_0 + S_1 + S_2)/3.  A value strictly above the measure's bound certifies
steering; the three-setting value can never exceed it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coherence import AXES, MEASURES, Measure, PauliAxis, coherence_profile
from .matcore import I2, as_matrix, partial_trace, tensor
from .states import maximally_mixed

ZERO_PROBABILITY = 1e-12
REC_MARGIN = 0.005


def pauli_projector(axis, outcome: int) -> np.ndarray:
    """M_a = (I + (-1)^a sigma_axis) / 2."""
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    return 0.5 * (I2 + (-1) ** outcome * PauliAxis.parse(axis).pauli)


_ALICE_PROJECTORS = {
    (ax, a): tensor(pauli_projector(ax, a), I2) for ax in PauliAxis for a in (0, 1)
}


def _alice_projector(axis: PauliAxis, outcome: int) -> np.ndarray:
    return _ALICE_PROJECTORS[(axis, outcome)]


@dataclass(frozen=True)
class Branch:
    outcome: int
    probability: float
    state: np.ndarray


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Bob's conditional states for one measurement axis of Alice."""

    axis: PauliAxis
    branches: tuple[Branch, ...]

    def average(self) -> np.ndarray:
        return sum(b.probability * b.state for b in self.branches)


def conditional_ensemble(rho_ab, axis) -> ConditionalEnsemble:
    rho = as_matrix(rho_ab)
    if rho.shape[0] != 4:
        raise ValueError("conditional_ensemble needs a two-qubit state")
    axis = PauliAxis.parse(axis)
    branches = []
    for a in (0, 1):
        m = _alice_projector(axis, a)
        post = m @ rho @ m
        p = float(np.trace(post).real)
        if p < ZERO_PROBABILITY:
            branches.append(Branch(a, 0.0, maximally_mixed(2)))
            continue
        state = partial_trace(post, keep="B") / p
        branches.append(Branch(a, p, 0.5 * (state + state.conj().T)))
    return ConditionalEnsemble(axis, tuple(branches))


def ensembles(rho_ab) -> tuple[ConditionalEnsemble, ...]:
    return tuple(conditional_ensemble(rho_ab, ax) for ax in AXES)


@dataclass(frozen=True)
class CriterionValues:
    s0: float
    s12_half: float
    s012_third: float


def weighted_coherence_sums(ens) -> dict[Measure, np.ndarray]:
    """``{measure: array([S_0, S_1, S_2])}`` for a triple of ensembles (x, y, z order)."""
    sums = {m: np.zeros(3) for m in MEASURES}
    for e in ens:
        i = e.axis.index
        for br in e.branches:
            if br.probability <= 0.0:
                continue
            prof = coherence_profile(br.state)
            for m in MEASURES:
                for ell in range(3):
                    sums[m][ell] += br.probability * prof[m][(i + ell) % 3]
    return sums


def criterion_values_from_sums(s: np.ndarray) -> CriterionValues:
    return CriterionValues(
        s0=float(s[0]),
        s12_half=float((s[1] + s[2]) / 2.0),
        s012_third=float((s[0] + s[1] + s[2]) / 3.0),
    )


def criterion_values(rho_ab, measure) -> CriterionValues:
    sums = weighted_coherence_sums(ensembles(rho_ab))
    return criterion_values_from_sums(sums[Measure.parse(measure)])


def s_ell(rho_ab, ell: int, measure) -> float:
    if ell not in (0, 1, 2):
        raise ValueError(f"ell must be 0, 1 or 2, got {ell}")
    return float(weighted_coherence_sums(ensembles(rho_ab))[Measure.parse(measure)][ell])


def one_setting_value(rho_ab, measure) -> float:
    return criterion_values(rho_ab, measure).s0


def two_setting_value(rho_ab, measure) -> float:
    return criterion_values(rho_ab, measure).s12_half


def three_setting_value(rho_ab, measure) -> float:
    return criterion_values(rho_ab, measure).s012_third


def epsilon_bound(measure) -> float:
    return Measure.parse(measure).bound


# -- entropic steering inequality ---------------------------------------------

def ln_n(x, n: float):
    """Tsallis logarithm (x^(1-n) - 1) / (1 - n); natural log at n = 1."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("ln_n needs x > 0")
    if n == 1:
        out = np.log(x)
    else:
        out = (x ** (1.0 - n) - 1.0) / (1.0 - n)
    return float(out) if out.ndim == 0 else out


def sigeur_bound(n: float, m: int = 3, d: int = 2) -> float:
    """Lower bound m ln_n[m d / (d + m - 1)] for m mutually unbiased bases in dimension d."""
    return float(m * ln_n(m * d / (d + m - 1), n))


def joint_probabilities(rho_ab) -> np.ndarray:
    """Array ``p[i, a, b]`` of outcomes for sigma_i (x) sigma_i, i over x, y, z."""
    rho = as_matrix(rho_ab)
    out = np.empty((3, 2, 2))
    for i, ax in enumerate(AXES):
        for a in (0, 1):
            for b in (0, 1):
                proj = tensor(pauli_projector(ax, a), pauli_projector(ax, b))
                out[i, a, b] = np.trace(proj @ rho).real
    return np.clip(out, 0.0, None)


def sigeur_from_joint(p, n: float = 2.0) -> float:
    """(n-1)^-1 sum_i {1 - sum_ab (p_ab^(i))^n / (p_a^(i))^(n-1)}, with 0^n/0^(n-1) = 0.

    ``p`` has shape (3, 2, 2), indexed ``[axis, a, b]``; each axis slice should sum to 1.
    """
    if n == 1:
        raise ValueError("n = 1 is the Shannon limit and is not supported")
    p = np.asarray(p, dtype=float)
    pa = p.sum(axis=2, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, p ** n / np.where(pa > 0, pa, 1.0) ** (n - 1.0), 0.0)
    return float(np.sum(1.0 - terms.sum(axis=(1, 2))) / (n - 1.0))


def sigeur_lhs(rho_ab, n: float = 2.0) -> float:
    return sigeur_from_joint(joint_probabilities(rho_ab), n)


# -- aggregate report -----------------------------------------------------------

@dataclass(frozen=True)
class MeasureReport:
    measure: Measure
    s0: float
    s12_half: float
    s012_third: float
    bound: float
    violates_two_setting: bool
    violates_one_setting: bool
    marginal: bool = False


@dataclass(frozen=True)
class SteeringReport:
    measures: dict[Measure, MeasureReport]
    sigeur_lhs: float
    sigeur_bound: float
    sigeur_violated: bool
    sigeur_n: float = 2.0

    def __getitem__(self, measure) -> MeasureReport:
        return self.measures[Measure.parse(measure)]


def judge(measure, values: CriterionValues) -> MeasureReport:
    """Strict-inequality verdicts; REC values within 0.005 of its bound are flagged marginal."""
    measure = Measure.parse(measure)
    bound = measure.bound
    marginal = measure is Measure.REC and (
        abs(values.s12_half - bound) <= REC_MARGIN or abs(values.s0 - bound) <= REC_MARGIN
    )
    return MeasureReport(
        measure=measure,
        s0=values.s0,
        s12_half=values.s12_half,
        s012_third=values.s012_third,
        bound=bound,
        violates_two_setting=values.s12_half > bound,
        violates_one_setting=values.s0 > bound,
        marginal=marginal,
    )


def steering_report(rho_ab, n: float = 2.0) -> SteeringReport:
    sums = weighted_coherence_sums(ensembles(rho_ab))
    measures = {m: judge(m, criterion_values_from_sums(sums[m])) for m in MEASURES}
    lhs = sigeur_lhs(rho_ab, n)
    bound = sigeur_bound(n)
    return SteeringReport(measures, lhs, bound, lhs < bound, sigeur_n=n)
