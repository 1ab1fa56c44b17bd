"""Command-line entry point.

Subcommands: simulate (write replicate datasets + manifest), fit (one chain
plus a selection report), bench (replicated method comparison), summarize
(posterior table from a stored chain), diagnose (mixing diagnostics from a
stored chain).

Configuration is a flat text file of ``dotted.key = value`` lines (``#``
comments allowed); command-line flags override file values.  Exit codes:
0 success, 1 usage or configuration error, 2 malformed data file,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from pathlib import Path

import numpy as np
from scipy.linalg import LinAlgError as ScipyLinAlgError

from .bench import CellSpec, format_rows, run_cell, write_bench_csv, write_bench_json
from .dataset import (
    DataFormatError,
    Dataset,
    read_dataset_csv,
    standardize,
    write_dataset_csv,
)
from .el import MaxIterExceeded, NotInConvexHull, check_dimension
from .metrics import autocorrelation
from .priors import PriorSpec
from .rng import derive_seed
from .samplers import Chain, SamplerConfig, load_chain, run_chain, save_chain
from .selection import apply_threshold, cv_cutoff, summarize
from .simgen import MeanDesign, RegressionDesign, gen_mean_data, gen_regression_data

__all__ = ["RunConfig", "UsageError", "parse_config", "render_config", "main"]


class UsageError(Exception):
    """Bad flags or configuration values."""


class TooShortError(DataFormatError):
    """Stored chain has too few samples to diagnose."""


@dataclass
class RunConfig:
    """Every run option, flattened; see _KEYS for the dotted spellings."""

    mode: str = "mean"
    design_n: int = 100
    design_p: int = 10
    design_rho: float = 0.3
    design_scenario: str = "A"
    prior_kind: str = "laplace"
    prior_gamma_mode: str = "em"
    prior_gamma: float | None = None
    prior_r: float = 1.0
    prior_delta: float = 1.0
    prior_scad_a: float = 3.7
    sampler_algorithm: str = "approx"
    sampler_n_iter: int = 10000
    sampler_burn_in: int | None = None
    sampler_thin: int = 1
    sampler_step_size: float | None = None
    sampler_seed: int = 0
    selection_cutoff: float = 0.2
    selection_cv: bool = False
    selection_cv_folds: int = 5
    selection_cv_n_iter: int = 2000
    replicates: int = 20
    master_seed: int = 0
    output_dir: str = "out"
    standardize: bool = True  # regression fits only; mean mode never rescales
    jobs: int = 0  # 0 = all available cores

    def resolved_jobs(self) -> int:
        return self.jobs if self.jobs > 0 else (os.cpu_count() or 1)

    def prior_spec(self) -> PriorSpec:
        return PriorSpec(
            kind=self.prior_kind,
            gamma_mode=self.prior_gamma_mode,
            gamma=self.prior_gamma,
            r=self.prior_r,
            delta=self.prior_delta,
            scad_a=self.prior_scad_a,
        )

    def sampler_config(self) -> SamplerConfig:
        return SamplerConfig(
            algorithm=self.sampler_algorithm,
            n_iter=self.sampler_n_iter,
            burn_in=self.sampler_burn_in,
            thin=self.sampler_thin,
            step_size=self.sampler_step_size,
            seed=self.sampler_seed,
        )

    def cell_spec(self) -> CellSpec:
        return CellSpec(
            mode=self.mode,
            n=self.design_n,
            p=self.design_p,
            rho=self.design_rho,
            scenario=self.design_scenario,
            replicates=self.replicates,
            cutoff=None if self.selection_cv else self.selection_cutoff,
            cv_folds=self.selection_cv_folds,
            cv_n_iter=self.selection_cv_n_iter,
            master_seed=self.master_seed,
        )


def _parse_bool(s: str) -> bool:
    low = s.strip().lower()
    if low in ("true", "1", "yes", "on"):
        return True
    if low in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _opt(parse):
    def inner(s: str):
        return None if s.strip().lower() == "none" else parse(s)

    return inner


def _render(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


# dotted key -> (RunConfig attribute, parser)
_KEYS: dict[str, tuple[str, object]] = {
    "mode": ("mode", str),
    "design.n": ("design_n", int),
    "design.p": ("design_p", int),
    "design.rho": ("design_rho", float),
    "design.scenario": ("design_scenario", str),
    "prior.kind": ("prior_kind", str),
    "prior.gamma_mode": ("prior_gamma_mode", str),
    "prior.gamma": ("prior_gamma", _opt(float)),
    "prior.r": ("prior_r", float),
    "prior.delta": ("prior_delta", float),
    "prior.scad_a": ("prior_scad_a", float),
    "sampler.algorithm": ("sampler_algorithm", str),
    "sampler.n_iter": ("sampler_n_iter", int),
    "sampler.burn_in": ("sampler_burn_in", _opt(int)),
    "sampler.thin": ("sampler_thin", int),
    "sampler.step_size": ("sampler_step_size", _opt(float)),
    "sampler.seed": ("sampler_seed", int),
    "selection.cutoff": ("selection_cutoff", float),
    "selection.cv": ("selection_cv", _parse_bool),
    "selection.cv_folds": ("selection_cv_folds", int),
    "selection.cv_n_iter": ("selection_cv_n_iter", int),
    "replicates": ("replicates", int),
    "master_seed": ("master_seed", int),
    "output_dir": ("output_dir", str),
    "standardize": ("standardize", _parse_bool),
    "jobs": ("jobs", int),
}

_ATTR_TO_KEY = {attr: key for key, (attr, _) in _KEYS.items()}


def parse_config(path: str | Path) -> RunConfig:
    """Read a flat ``key = value`` file into a RunConfig."""
    path = Path(path)
    if not path.exists():
        raise UsageError(f"config file not found: {path}")
    cfg = RunConfig()
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        attr, parse = _KEYS[key]
        try:
            setattr(cfg, attr, parse(val))
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return cfg


def render_config(cfg: RunConfig) -> str:
    """Inverse of parse_config (stable key order, one line per option)."""
    lines = []
    for f in fields(RunConfig):
        lines.append(f"{_ATTR_TO_KEY[f.name]} = {_render(getattr(cfg, f.name))}")
    return "\n".join(lines) + "\n"


def _load_config(args: argparse.Namespace) -> RunConfig:
    cfg = parse_config(args.config) if args.config else RunConfig()
    if getattr(args, "jobs", None) is not None:
        cfg.jobs = args.jobs
    if getattr(args, "out", None) is not None:
        cfg.output_dir = args.out
    if getattr(args, "full", False):
        cfg.replicates = 100
    return cfg


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_json(payload, path: Path) -> None:
    with path.open("w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _generate(cfg: RunConfig, seed: int) -> tuple[Dataset, np.ndarray]:
    if cfg.mode == "mean":
        design = MeanDesign(n=cfg.design_n, p=cfg.design_p, rho=cfg.design_rho, seed=seed)
        return gen_mean_data(design), design.mean_vector()
    design = RegressionDesign(
        scenario=cfg.design_scenario, n=cfg.design_n, p=cfg.design_p, seed=seed
    )
    return gen_regression_data(design), design.beta0


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    if args.seed is not None:
        cfg.master_seed = args.seed
    check_dimension(cfg.design_n, cfg.design_p)
    out = _out_dir(cfg)
    seeds = [derive_seed(cfg.master_seed, i, 0) for i in range(cfg.replicates)]
    names = []
    for i, s in enumerate(seeds):
        data, _ = _generate(cfg, s)
        name = f"rep_{i + 1:04d}.csv"
        write_dataset_csv(data, out / name)
        names.append(name)
    design = {"n": cfg.design_n, "p": cfg.design_p}
    if cfg.mode == "mean":
        design["rho"] = cfg.design_rho
    else:
        design["scenario"] = cfg.design_scenario
    manifest = {
        "kind": "simulation",
        "mode": cfg.mode,
        "design": design,
        "replicates": cfg.replicates,
        "master_seed": cfg.master_seed,
        "replicate_seeds": seeds,
        "files": names,
        "created_utc": datetime.now(timezone.utc).isoformat(),
    }
    _write_json(manifest, out / "manifest.json")
    print(f"wrote {cfg.replicates} dataset(s) and manifest.json to {out}")
    return 0


def cmd_fit(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    if args.seed is not None:
        cfg.sampler_seed = args.seed
    if args.data:
        data = read_dataset_csv(args.data)
        if cfg.mode == "regression" and data.y is None:
            raise DataFormatError(f"{args.data}: regression fit needs a 'y' column")
    else:
        data, _ = _generate(cfg, derive_seed(cfg.master_seed, 0, 0))
    if cfg.standardize and cfg.mode == "regression":
        data = standardize(data)
    out = _out_dir(cfg)
    prior = cfg.prior_spec()
    sampler_cfg = cfg.sampler_config()
    if cfg.selection_cv:
        cutoff = cv_cutoff(
            data,
            prior,
            sampler_cfg,
            folds=cfg.selection_cv_folds,
            cv_n_iter=cfg.selection_cv_n_iter,
            seed=cfg.master_seed,
            jobs=cfg.resolved_jobs(),
        )
        source = "cv"
    else:
        cutoff = cfg.selection_cutoff
        source = "fixed"
    chain = run_chain(data, prior, sampler_cfg, mode=cfg.mode)
    save_chain(chain, out / "chain.csv")
    report = apply_threshold(summarize(chain), cutoff)
    payload = report.to_dict()
    payload["interval_length"] = [float(v) for v in report.interval_length]
    payload["cutoff_source"] = source
    payload["acceptance_rate"] = chain.acceptance_rate
    _write_json(payload, out / "report.json")
    print(f"chain: {out / 'chain.csv'} (acceptance {chain.acceptance_rate:.3f})")
    print(f"report: {out / 'report.json'} (cutoff {cutoff:g}, {source})")
    kept = [f"{j + 1}" for j, s in enumerate(report.support) if s]
    print("selected coordinates: " + (", ".join(kept) if kept else "(none)"))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    if args.seed is not None:
        cfg.master_seed = args.seed
    check_dimension(cfg.design_n, cfg.design_p)
    out = _out_dir(cfg)
    rows = run_cell(cfg.cell_spec(), cfg.sampler_config(), jobs=cfg.resolved_jobs())
    write_bench_csv(rows, out / "bench.csv")
    write_bench_json(rows, out / "bench.json")
    print(format_rows(rows))
    print(f"wrote {out / 'bench.csv'} and {out / 'bench.json'}")
    return 0


def _load_chain_arg(args: argparse.Namespace) -> Chain:
    path = Path(args.chain)
    if not path.exists():
        raise UsageError(f"chain file not found: {path}")
    return load_chain(path)


def cmd_summarize(args: argparse.Namespace) -> int:
    chain = _load_chain_arg(args)
    report = summarize(chain)
    print(f"samples: {chain.m}   acceptance: {chain.acceptance_rate:.3f}")
    print(f"{'coord':>5}  {'mean':>12}  {'2.5%':>12}  {'97.5%':>12}  {'ess':>10}")
    for j in range(chain.p):
        e = chain.ess[j]
        ess_txt = f"{e:10.1f}" if np.isfinite(e) else f"{'n/a':>10}"
        print(
            f"{j + 1:>5}  {report.posterior_mean[j]:12.5f}  {report.ci_lower[j]:12.5f}  "
            f"{report.ci_upper[j]:12.5f}  {ess_txt}"
        )
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        payload = report.to_dict()
        payload["interval_length"] = [float(v) for v in report.interval_length]
        payload["ess"] = [None if not np.isfinite(v) else float(v) for v in chain.ess]
        payload["acceptance_rate"] = chain.acceptance_rate
        _write_json(payload, out / "summary.json")
        print(f"wrote {out / 'summary.json'}")
    return 0


def cmd_diagnose(args: argparse.Namespace) -> int:
    chain = _load_chain_arg(args)
    if chain.m < 10:
        raise TooShortError(
            f"chain too short for diagnostics: {chain.m} stored samples (need 10)"
        )
    out = Path(args.out) if args.out else Path("out")
    out.mkdir(parents=True, exist_ok=True)
    max_lag = min(50, chain.m - 1)
    acf = np.column_stack(
        [autocorrelation(chain.thetas[:, j], max_lag) for j in range(chain.p)]
    )
    with (out / "acf.csv").open("w") as fh:
        fh.write("lag," + ",".join(f"theta_{j + 1}" for j in range(chain.p)) + "\n")
        for lag in range(max_lag + 1):
            fh.write(str(lag) + "," + ",".join(f"{v:.6f}" for v in acf[lag]) + "\n")
    with (out / "trace.csv").open("w") as fh:
        fh.write("iteration," + ",".join(f"theta_{j + 1}" for j in range(chain.p)) + "\n")
        for i in range(chain.m):
            fh.write(
                str(int(chain.iterations[i]))
                + ","
                + ",".join(format(v, ".17g") for v in chain.thetas[i])
                + "\n"
            )
    print(f"samples: {chain.m}   acceptance: {chain.acceptance_rate:.3f}")
    print(f"{'coord':>5}  {'ess':>10}  {'lag1_acf':>10}")
    for j in range(chain.p):
        print(f"{j + 1:>5}  {chain.ess[j]:10.1f}  {chain.lag1_autocorr[j]:10.3f}")
    print(f"wrote {out / 'acf.csv'} and {out / 'trace.csv'}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bel",
        description="Empirical-likelihood Bayesian variable selection",
    )
    sub = parser.add_subparsers(dest="command")

    def common(sp, chain_input: bool = False, fit: bool = False) -> None:
        sp.add_argument("--config", help="flat key = value configuration file")
        sp.add_argument("--jobs", type=int, help="parallel worker processes")
        sp.add_argument("--full", action="store_true", help="run 100 replicates")
        sp.add_argument("--seed", type=int, help="override the relevant seed")
        sp.add_argument("--out", help="output directory")
        if fit:
            sp.add_argument("--data", help="input dataset CSV")
        if chain_input:
            sp.add_argument("--chain", required=True, help="stored chain CSV")

    sp = sub.add_parser("simulate", help="write replicate datasets and a manifest")
    common(sp)
    sp.set_defaults(func=cmd_simulate)
    sp = sub.add_parser("fit", help="run one chain and write a selection report")
    common(sp, fit=True)
    sp.set_defaults(func=cmd_fit)
    sp = sub.add_parser("bench", help="replicated method comparison table")
    common(sp)
    sp.set_defaults(func=cmd_bench)
    sp = sub.add_parser("summarize", help="posterior summary of a stored chain")
    common(sp, chain_input=True)
    sp.set_defaults(func=cmd_summarize)
    sp = sub.add_parser("diagnose", help="mixing diagnostics of a stored chain")
    common(sp, chain_input=True)
    sp.set_defaults(func=cmd_diagnose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return int(args.func(args))
    except DataFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        NotInConvexHull,
        MaxIterExceeded,
        np.linalg.LinAlgError,
        ScipyLinAlgError,
        FloatingPointError,
    ) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
