"""Command-line front end.

    cohsteer theory   --thetas 0,10,...,90 --measures l1c,rec,sic [--out DIR]
    cohsteer simulate --config run.json [--seed N] [--out DIR]
    cohsteer sigeur   --thetas 10,80 [--n 2] [--seed N] [--out DIR]
    cohsteer verify   [--samples N] [--flip-convention]
    cohsteer report   --out DIR

Exit codes: 0 success, 1 verification failure, 2 invalid input or config.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path


from .coherence import MEASURES, Measure
from .dataset import format_cell
from .expsim.experiment import ConfigError, ExperimentConfig, run_point, run_virtual_experiment
from .expsim.optics import select_tomography_convention
from .steering import sigeur_bound
from .theory import REFERENCE_THETAS, theory_dataset, theory_rows, theory_sigeur_row
from .verification import run_all

log = logging.getLogger("cohsteer")

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2
PLOT_GRID = tuple(float(t) for t in range(0, 91))


def parse_thetas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ConfigError(f"bad --thetas value {text!r}") from exc
    if not values:
        raise ConfigError("--thetas must list at least one angle")
    return values


def parse_measures(text: str) -> tuple[Measure, ...]:
    try:
        return tuple(Measure.parse(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ConfigError(f"bad --measures value {text!r}") from exc


def load_config(path, seed: int | None = None) -> ExperimentConfig:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    if seed is not None:
        data["seed"] = seed
    return ExperimentConfig.from_dict(data)


def write_plotdata(out_dir, n: float = 2.0) -> list[Path]:
    """1-degree theory curves, one CSV per measure plus the entropic test."""
    pdir = Path(out_dir) / "plotdata"
    pdir.mkdir(parents=True, exist_ok=True)
    rows = {m: [] for m in MEASURES}
    sig = []
    for th in PLOT_GRID:
        for r in theory_rows(th, MEASURES):
            rows[Measure(r.measure)].append((th, r.s0_theory, r.s12half_theory, r.s012third_theory, r.bound))
        s = theory_sigeur_row(th, n)
        sig.append((th, s.theory, s.bound))
    paths = []
    for m, data in rows.items():
        p = pdir / f"{m.value}.csv"
        _write_csv(p, ("theta_deg", "s0", "s12half", "s012third", "bound"), data)
        paths.append(p)
    p = pdir / "sigeur.csv"
    _write_csv(p, ("theta_deg", "sigeur", "bound"), sig)
    paths.append(p)
    return paths


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([format_cell(float(x)) for x in r])


def _print_table(ds) -> None:
    print(f"{'theta':>6} {'measure':>7} {'S0':>8} {'S12/2':>8} {'S012/3':>8} {'bound':>7}  two  one")
    for r in ds.rows:
        s0 = r.s0_sim if r.has_sim else r.s0_theory
        s12 = r.s12half_sim if r.has_sim else r.s12half_theory
        s012 = r.s012third_sim if r.has_sim else r.s012third_theory
        print(f"{r.theta_deg:6.1f} {r.measure:>7} {s0:8.4f} {s12:8.4f} {s012:8.4f} {r.bound:7.4f}"
              f"  {'Y' if r.violates_two_setting else '.':>3}  {'Y' if r.violates_one_setting else '.':>3}")


# -- subcommands -----------------------------------------------------------------

def cmd_theory(thetas=REFERENCE_THETAS, measures=MEASURES, out=None, quiet=False):
    ds = theory_dataset(thetas, measures)
    if out:
        ds.write(out)
        write_plotdata(out)
    if not quiet:
        _print_table(ds)
    return ds


def cmd_simulate(config: ExperimentConfig, out=None, quiet=False):
    ds = run_virtual_experiment(config)
    if out:
        ds.write(out)
        write_plotdata(out, config.sigeur_n)
    if not quiet:
        _print_table(ds)
        print(f"mean state fidelity {ds.metadata['mean_fidelity']:.4f}; "
              f"{ds.metadata['conditional_tomographies']} conditional-state tomographies")
    return ds


def cmd_sigeur(thetas=(10.0, 80.0), n: float = 2.0, config: ExperimentConfig | None = None,
               out=None, quiet=False):
    """Theory and simulated left-hand side of the entropic steering inequality."""
    config = config or ExperimentConfig(thetas=thetas, sigeur_n=n)
    convention = select_tomography_convention()
    bound = sigeur_bound(n)
    rows = []
    for k, th in enumerate(thetas):
        p = run_point(k, th, config, convention)
        rows.append((th, n, theory_sigeur_row(th, n).theory, p.sigeur, p.sigeur_err, bound))
    header = ("theta_deg", "n", "theory", "sim", "sim_err", "bound", "violated")
    table = [r + (r[3] < bound,) for r in rows]
    if out:
        Path(out).mkdir(parents=True, exist_ok=True)
        with open(Path(out) / "sigeur.csv", "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for r in table:
                w.writerow([format_cell(x if isinstance(x, bool) else float(x)) for x in r])
    if not quiet:
        print(f"{'theta':>6} {'theory':>8} {'sim':>8} {'err':>7} {'bound':>6}  violated")
        for th, _, theo, sim, err, b, v in table:
            print(f"{th:6.1f} {theo:8.4f} {sim:8.4f} {err:7.4f} {b:6.3f}  {'yes' if v else 'no'}")
    return table


def cmd_verify(samples: int = 1000, seed: int = 0, flip_convention: bool = False, quiet=False):
    convention = select_tomography_convention()
    if flip_convention:
        convention = convention.flipped()
    results = run_all(samples=samples, seed=seed, convention=convention)
    if not quiet:
        for r in results:
            print(r.line())
    return results


def cmd_report(out) -> dict:
    """Merge the files of earlier runs in ``out`` into ``summary.json``."""
    out = Path(out)
    summary: dict = {}
    tables = out / "tables.csv"
    if tables.exists():
        with open(tables, newline="") as fh:
            rows = list(csv.DictReader(fh))
        per = {}
        for r in rows:
            d = per.setdefault(r["measure"], {"rows": 0, "two_setting_violations": [],
                                             "one_setting_violations": [], "complementarity_ok": True})
            d["rows"] += 1
            th = float(r["theta_deg"])
            two, one = r["violates_two_setting"] == "true", r["violates_one_setting"] == "true"
            if two:
                d["two_setting_violations"].append(th)
            if one:
                d["one_setting_violations"].append(th)
            if two and one:
                d["complementarity_ok"] = False
        summary["criteria"] = per
    sig = out / "sigeur.csv"
    if sig.exists():
        with open(sig, newline="") as fh:
            summary["sigeur"] = [
                {"theta_deg": float(r["theta_deg"]), "violated": r["violated"] == "true",
                 "value": float(r["sim"] or r["theory"])}
                for r in csv.DictReader(fh)
            ]
    rep = out / "report.json"
    if rep.exists():
        meta = json.loads(rep.read_text()).get("metadata", {})
        summary["run"] = {k: meta[k] for k in ("kind", "config", "jones_convention", "mean_fidelity",
                                              "conditional_tomographies") if k in meta}
    if not summary:
        raise ConfigError(f"no run outputs found in {out}")
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return summary


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cohsteer", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    default_thetas = ",".join(f"{t:g}" for t in REFERENCE_THETAS)

    t = sub.add_parser("theory", help="noise-free criterion values")
    t.add_argument("--thetas", default=default_thetas, help="angles in degrees, comma separated")
    t.add_argument("--measures", default="l1c,rec,sic")
    t.add_argument("--out", help="directory for tables.csv, sigeur.csv, report.json, plotdata/")

    s = sub.add_parser("simulate", help="virtual experiment from a JSON config")
    s.add_argument("--config", help="JSON file with ExperimentConfig fields")
    s.add_argument("--thetas", help="override the config's angles")
    s.add_argument("--seed", type=int)
    s.add_argument("--out")

    g = sub.add_parser("sigeur", help="entropic steering test")
    g.add_argument("--thetas", default="10,80")
    g.add_argument("--n", type=float, default=2.0)
    g.add_argument("--config")
    g.add_argument("--seed", type=int)
    g.add_argument("--out")

    v = sub.add_parser("verify", help="wave-plate tables, closed forms, bound sample")
    v.add_argument("--samples", type=int, default=1000, help="random states in the bound scan")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--flip-convention", action="store_true",
                   help="use the opposite QWP handedness; the tomography table check must then fail")

    r = sub.add_parser("report", help="summarise earlier outputs in --out")
    r.add_argument("--out", required=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "theory":
            cmd_theory(parse_thetas(args.thetas), parse_measures(args.measures), args.out)
        elif args.command == "simulate":
            config = load_config(args.config, args.seed) if args.config else ExperimentConfig(
                **({"seed": args.seed} if args.seed is not None else {}))
            if args.thetas:
                config = ExperimentConfig.from_dict({**config.as_dict(), "thetas": parse_thetas(args.thetas)})
            cmd_simulate(config, args.out)
        elif args.command == "sigeur":
            thetas = parse_thetas(args.thetas)
            base = load_config(args.config, args.seed).as_dict() if args.config else {}
            if args.seed is not None:
                base["seed"] = args.seed
            config = ExperimentConfig.from_dict({**base, "thetas": thetas, "sigeur_n": args.n})
            cmd_sigeur(thetas, args.n, config, args.out)
        elif args.command == "verify":
            if args.samples < 0:
                raise ConfigError("--samples must be non-negative")
            results = cmd_verify(args.samples, args.seed, args.flip_convention)
            return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED
        elif args.command == "report":
            summary = cmd_report(args.out)
            print(json.dumps(summary, indent=2, sort_keys=True))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
