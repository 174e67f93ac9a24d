"""Sweep results: per-(theta, measure) criterion rows and per-theta SIGEUR rows.

CSV output uses four decimals and a fixed column order; JSON keeps full
precision.  Missing simulated values are written as empty CSV cells.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

TABLE_COLUMNS = (
    "theta_deg",
    "measure",
    "s0_theory",
    "s12half_theory",
    "s012third_theory",
    "s0_sim",
    "s0_err",
    "s12half_sim",
    "s12half_err",
    "s012third_sim",
    "s012third_err",
    "bound",
    "violates_two_setting",
    "violates_one_setting",
)

SIGEUR_COLUMNS = ("theta_deg", "n", "theory", "sim", "sim_err", "bound", "violated")

NAN = float("nan")


@dataclass
class CriterionRow:
    theta_deg: float
    measure: str
    s0_theory: float
    s12half_theory: float
    s012third_theory: float
    bound: float
    s0_sim: float = NAN
    s0_err: float = NAN
    s12half_sim: float = NAN
    s12half_err: float = NAN
    s012third_sim: float = NAN
    s012third_err: float = NAN

    @property
    def has_sim(self) -> bool:
        return not math.isnan(self.s12half_sim)

    @property
    def violates_two_setting(self) -> bool:
        value = self.s12half_sim if self.has_sim else self.s12half_theory
        return value > self.bound

    @property
    def violates_one_setting(self) -> bool:
        value = self.s0_sim if self.has_sim else self.s0_theory
        return value > self.bound

    def as_dict(self) -> dict:
        d = asdict(self)
        d["violates_two_setting"] = self.violates_two_setting
        d["violates_one_setting"] = self.violates_one_setting
        return d


@dataclass
class SigeurRow:
    theta_deg: float
    n: float
    theory: float
    bound: float
    sim: float = NAN
    sim_err: float = NAN

    @property
    def violated(self) -> bool:
        value = self.theory if math.isnan(self.sim) else self.sim
        return value < self.bound

    def as_dict(self) -> dict:
        d = asdict(self)
        d["violated"] = self.violated
        return d


@dataclass
class SweepDataset:
    rows: list[CriterionRow] = field(default_factory=list)
    sigeur_rows: list[SigeurRow] = field(default_factory=list)
    points: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def row(self, theta_deg: float, measure: str) -> CriterionRow:
        for r in self.rows:
            if r.measure == measure and math.isclose(r.theta_deg, theta_deg):
                return r
        raise KeyError((theta_deg, measure))

    def sigeur_row(self, theta_deg: float) -> SigeurRow:
        for r in self.sigeur_rows:
            if math.isclose(r.theta_deg, theta_deg):
                return r
        raise KeyError(theta_deg)

    def tables_csv(self) -> str:
        return _to_csv(TABLE_COLUMNS, (r.as_dict() for r in self.rows))

    def sigeur_csv(self) -> str:
        return _to_csv(SIGEUR_COLUMNS, (r.as_dict() for r in self.sigeur_rows))

    def to_json(self) -> dict:
        return {
            "metadata": self.metadata,
            "rows": [_json_safe(r.as_dict()) for r in self.rows],
            "sigeur": [_json_safe(r.as_dict()) for r in self.sigeur_rows],
            "points": [_json_safe(p) for p in self.points],
        }

    def write(self, out_dir) -> list[Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        paths = [out / "tables.csv", out / "sigeur.csv", out / "report.json"]
        paths[0].write_text(self.tables_csv(), newline="")
        paths[1].write_text(self.sigeur_csv(), newline="")
        paths[2].write_text(json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n")
        return paths


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        text = f"{value:.4f}"
        return "0.0000" if text == "-0.0000" else text
    return str(value)


def _to_csv(columns, dicts) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for d in dicts:
        w.writerow([format_cell(d[c]) for c in columns])
    return buf.getvalue()


def _json_safe(d: dict) -> dict:
    return {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in d.items()}
