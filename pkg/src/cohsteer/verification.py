"""Self-checks shared by ``cohsteer verify`` and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coherence import MEASURES
from .expsim.optics import (
    JonesConvention,
    check_pmo_table,
    check_tomography_table,
    select_tomography_convention,
)
from .states import bell_like, random_two_qubit_state
from .steering import criterion_values_from_sums, ensembles, sigeur_lhs, weighted_coherence_sums
from .theory import REFERENCE_THETAS, closed_form, closed_form_sigeur

BOUND_SLACK = 1e-9
ORACLE_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def check_wave_plates(convention: JonesConvention | None = None) -> list[CheckResult]:
    convention = convention or select_tomography_convention()
    pmo = check_pmo_table()
    tomo = check_tomography_table(convention)
    bad_pmo = [c.label for c in pmo if not c.ok]
    bad_tomo = [c.label for c in tomo if not c.ok]
    return [
        CheckResult("measurement-module wave plates", not bad_pmo,
                    f"{len(pmo) - len(bad_pmo)}/{len(pmo)} settings match"),
        CheckResult("tomography-module wave plates", not bad_tomo,
                    f"{len(tomo) - len(bad_tomo)}/{len(tomo)} settings match under {convention.as_dict()}"),
    ]


def check_closed_forms(thetas=REFERENCE_THETAS) -> CheckResult:
    worst = 0.0
    for th in thetas:
        sums = weighted_coherence_sums(ensembles(bell_like(th, degrees=True)))
        for m in MEASURES:
            v = criterion_values_from_sums(sums[m])
            expected = closed_form(th, m)
            worst = max(worst, *(abs(a - b) for a, b in zip((v.s0, v.s12_half, v.s012_third), expected)))
        worst = max(worst, abs(sigeur_lhs(bell_like(th, degrees=True)) - closed_form_sigeur(th)))
    return CheckResult("closed-form oracle", worst <= ORACLE_TOL, f"max deviation {worst:.2e}")


def sample_states(samples: int, seed: int = 0):
    """1-degree Bell-like grid followed by ``samples`` random states cycling through ranks 1..4."""
    for th in range(0, 91):
        yield bell_like(float(th), degrees=True)
    root = np.random.SeedSequence(seed)
    for k, child in enumerate(root.spawn(samples)):
        yield random_two_qubit_state(np.random.default_rng(child), rank=1 + k % 4)


def scan_bounds(samples: int, seed: int = 0) -> dict:
    """Count three-setting bound violations and complementarity breaches over a state sample."""
    stats = {m: {"bound_violations": 0, "complementarity_breaches": 0, "max_three_setting": -np.inf,
                 "two_setting_violations": 0} for m in MEASURES}
    count = 0
    for rho in sample_states(samples, seed):
        count += 1
        sums = weighted_coherence_sums(ensembles(rho))
        for m in MEASURES:
            v = criterion_values_from_sums(sums[m])
            st = stats[m]
            st["max_three_setting"] = max(st["max_three_setting"], v.s012_third)
            if v.s012_third > m.bound + BOUND_SLACK:
                st["bound_violations"] += 1
            if v.s12_half > m.bound:
                st["two_setting_violations"] += 1
                if v.s0 > m.bound:
                    st["complementarity_breaches"] += 1
    return {"states": count, "per_measure": {m.value: s for m, s in stats.items()}}


def check_bounds(samples: int, seed: int = 0) -> list[CheckResult]:
    scan = scan_bounds(samples, seed)
    per = scan["per_measure"]
    bound_bad = sum(s["bound_violations"] for s in per.values())
    comp_bad = sum(s["complementarity_breaches"] for s in per.values())
    maxima = ", ".join(f"{k}={s['max_three_setting']:.4f}" for k, s in per.items())
    return [
        CheckResult("three-setting bound", bound_bad == 0,
                    f"{bound_bad} violations over {scan['states']} states (max {maxima})"),
        CheckResult("complementarity", comp_bad == 0,
                    f"{comp_bad} states violate both one- and two-setting criteria"),
    ]


def run_all(samples: int = 1000, seed: int = 0, convention: JonesConvention | None = None) -> list[CheckResult]:
    results = check_wave_plates(convention)
    results.append(check_closed_forms())
    results.extend(check_bounds(samples, seed))
    return results
