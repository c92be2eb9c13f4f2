"""Experiment configuration, sweeps, CSV emission, figure reproduction.

Config files and CSVs speak the display scale (``scale`` = 1 or 100; the
canonical experiments use percentage grades on [0, 100]); all internal
math runs on the canonical [0, 1] scale.  Sweeps share per-student
substreams across schemes at each sweep point (common random numbers), so
scheme comparisons are paired and output is byte-deterministic per seed.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace
from pathlib import Path

from gradelab.analysis import perf_mc
from gradelab.dist import QualityPrior, ScoreModel
from gradelab.dynamics import MotivationParams
from gradelab.grading import GradingScheme, parse_scheme

SWEEP_AXES = ("alpha_m", "r", "mu", "sigma", "gamma_noise")

CSV_HEADER = [
    "scheme",
    "T",
    "alpha_m",
    "alpha_d",
    "r",
    "mu",
    "sigma",
    "gamma_noise",
    "n",
    "seed",
    "perf_mean",
    "perf_ci_lo",
    "perf_ci_hi",
]


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class SweepRow:
    scheme: str
    T: int | str  # grade count, or "ns"
    alpha_m: float
    alpha_d: float
    r: int
    mu: float | None
    sigma: float | None
    gamma_noise: float | None
    n: int
    seed: int
    perf_mean: float
    perf_ci_lo: float
    perf_ci_hi: float


@dataclass(frozen=True)
class ExperimentConfig:
    prior: QualityPrior
    model: ScoreModel
    schemes: tuple[GradingScheme, ...]
    alpha_m: tuple[float, ...]
    alpha_d: float
    r: tuple[int, ...]
    n: int
    seed: int
    scale: float
    sweep_axis: str
    sweep_values: tuple[float, ...] = ()

    def __post_init__(self):
        if not self.schemes or not self.alpha_m or not self.r:
            raise ValueError("schemes, alpha_m and r lists must be non-empty")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.scale not in (1, 100):
            raise ValueError("scale must be 1 or 100")
        if self.sweep_axis not in SWEEP_AXES:
            raise ValueError(f"sweep axis must be one of {SWEEP_AXES}")
        if self.sweep_axis == "alpha_m" and len(self.r) != 1:
            raise ValueError("alpha_m sweep needs a single r value")
        if self.sweep_axis == "r" and len(self.alpha_m) != 1:
            raise ValueError("r sweep needs a single alpha_m value")
        if self.sweep_axis in ("mu", "sigma", "gamma_noise"):
            if not self.sweep_values:
                raise ValueError(f"{self.sweep_axis} sweep needs sweep values")
            if len(self.alpha_m) != 1 or len(self.r) != 1:
                raise ValueError("parameter sweeps need single alpha_m and r values")
            if self.sweep_axis in ("mu", "sigma") and self.prior.kind != "truncated_normal":
                raise ValueError(f"{self.sweep_axis} sweep needs a truncated normal prior")
            if self.sweep_axis == "gamma_noise" and self.model.kind != "truncated_normal_noise":
                raise ValueError("gamma_noise sweep needs truncated normal score noise")


def _parse_prior(d: dict, scale: float) -> QualityPrior:
    kind = d.get("kind")
    if kind == "uniform":
        return QualityPrior(kind="uniform")
    if kind == "truncated_normal":
        return QualityPrior(kind="truncated_normal", mu=d["mu"] / scale, sigma=d["sigma"] / scale)
    raise ValueError(f"unknown prior kind {kind!r}")


def _parse_model(d: dict, scale: float) -> ScoreModel:
    kind = d.get("kind")
    if kind == "truncated_normal_noise":
        return ScoreModel(kind=kind, gamma_noise=d["gamma_noise"] / scale)
    if kind == "symmetric_kernel":
        return ScoreModel(
            kind=kind,
            shape=d.get("shape", "triangular"),
            width=d["width"] / scale,
            renormalize=bool(d.get("renormalize", True)),
        )
    if kind == "zero_noise":
        return ScoreModel(kind="symmetric_kernel", shape="rectangular", width=0.0)
    raise ValueError(f"unknown score model kind {kind!r}")


def config_from_dict(d: dict) -> ExperimentConfig:
    """Build a config from its JSON form, reporting the offending path on error."""

    def get(key, path=None):
        if key not in d:
            raise ValueError(f"config.{path or key}: missing")
        return d[key]

    scale = float(d.get("scale", 1))
    if scale not in (1.0, 100.0):
        raise ValueError("config.scale: must be 1 or 100")
    try:
        prior = _parse_prior(get("prior"), scale)
    except (ValueError, KeyError, TypeError) as exc:
        raise ValueError(f"config.prior: {exc}") from exc
    try:
        model = _parse_model(get("model"), scale)
    except (ValueError, KeyError, TypeError) as exc:
        raise ValueError(f"config.model: {exc}") from exc
    try:
        schemes = tuple(parse_scheme(s) for s in get("schemes"))
    except (ValueError, TypeError) as exc:
        raise ValueError(f"config.schemes: {exc}") from exc
    sweep = d.get("sweep", {}) or {}
    try:
        return ExperimentConfig(
            prior=prior,
            model=model,
            schemes=schemes,
            alpha_m=tuple(float(a) for a in get("alpha_m")),
            alpha_d=float(get("alpha_d")),
            r=tuple(int(r) for r in get("r")),
            n=int(get("n")),
            seed=int(get("seed")),
            scale=scale,
            sweep_axis=sweep.get("axis", "alpha_m"),
            sweep_values=tuple(v / scale for v in sweep.get("values", ())),
        )
    except (ValueError, TypeError) as exc:
        raise ValueError(f"config: {exc}") from exc


def load_config(path) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


def _sweep_points(config: ExperimentConfig):
    """Yield (sweep value at display scale, prior, model, params, r) per point."""
    axis = config.sweep_axis
    params = MotivationParams(config.alpha_m[0], config.alpha_d)
    if axis == "alpha_m":
        for a in config.alpha_m:
            yield a, config.prior, config.model, MotivationParams(a, config.alpha_d), config.r[0]
    elif axis == "r":
        for r in config.r:
            yield r, config.prior, config.model, params, r
    elif axis == "mu":
        for mu in config.sweep_values:
            yield mu, replace(config.prior, mu=mu), config.model, params, config.r[0]
    elif axis == "sigma":
        for sigma in config.sweep_values:
            yield sigma, replace(config.prior, sigma=sigma), config.model, params, config.r[0]
    else:  # gamma_noise
        for g in config.sweep_values:
            yield g, config.prior, replace(config.model, gamma_noise=g), params, config.r[0]


def run_sweep(config: ExperimentConfig) -> list[SweepRow]:
    """One row per (sweep value x scheme), in config order.

    All schemes at a sweep point run on the same seed, hence the same
    per-student substreams: paired comparisons by construction.
    """
    rows = []
    scale = config.scale
    for _, prior, model, params, r in _sweep_points(config):
        for scheme in config.schemes:
            est = perf_mc(prior, model, scheme, params, config.n, r, config.seed)
            rows.append(
                SweepRow(
                    scheme=scheme.label,
                    T=scheme.T if scheme.is_letter else "ns",
                    alpha_m=_round12(params.alpha_m),
                    alpha_d=_round12(params.alpha_d),
                    r=r,
                    mu=_round12(prior.mu * scale) if prior.kind == "truncated_normal" else None,
                    sigma=_round12(prior.sigma * scale) if prior.kind == "truncated_normal" else None,
                    gamma_noise=_round12(model.gamma_noise * scale)
                    if model.kind == "truncated_normal_noise"
                    else None,
                    n=config.n,
                    seed=config.seed,
                    perf_mean=_round12(est.mean * scale),
                    perf_ci_lo=_round12(est.ci95_lo * scale),
                    perf_ci_hi=_round12(est.ci95_hi * scale),
                )
            )
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, str)):
        return str(value)
    return f"{value:.12g}"


def emit_csv(rows, path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([_cell(getattr(row, name)) for name in CSV_HEADER])
    return path


def parse_csv(path) -> list[SweepRow]:
    def opt_float(text):
        return None if text == "" else float(text)

    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            raise ValueError(f"unexpected CSV header in {path}")
        for rec in reader:
            rows.append(
                SweepRow(
                    scheme=rec["scheme"],
                    T=rec["T"] if rec["T"] == "ns" else int(rec["T"]),
                    alpha_m=float(rec["alpha_m"]),
                    alpha_d=float(rec["alpha_d"]),
                    r=int(rec["r"]),
                    mu=opt_float(rec["mu"]),
                    sigma=opt_float(rec["sigma"]),
                    gamma_noise=opt_float(rec["gamma_noise"]),
                    n=int(rec["n"]),
                    seed=int(rec["seed"]),
                    perf_mean=float(rec["perf_mean"]),
                    perf_ci_lo=float(rec["perf_ci_lo"]),
                    perf_ci_hi=float(rec["perf_ci_hi"]),
                )
            )
    return rows


# ---------------------------------------------------------------------------
# Canonical figure configurations
# ---------------------------------------------------------------------------

_SCHEMES = ["ns", "ulg:4", "ulg:8", "ulg:12", "ulg:16", "ulg:20"]
_ALPHA_M_GRID = [round(0.1 * i, 1) for i in range(11)]
_R_GRID = list(range(1, 21))
# parameter-sweep grids, chosen for even coverage of each axis
_MU_GRID = [40, 50, 60, 70, 80, 90]
_SIGMA_GRID = [4, 8, 12, 16, 20, 24]
_GAMMA_GRID = [0.5, 1, 1.5, 2, 3, 4, 6]


def _base_config(seed: int) -> dict:
    return {
        "prior": {"kind": "truncated_normal", "mu": 65, "sigma": 12},
        "model": {"kind": "truncated_normal_noise", "gamma_noise": 1.5},
        "schemes": list(_SCHEMES),
        "alpha_d": 0.5,
        "n": 5000,
        "seed": seed,
        "scale": 100,
    }


def figure_configs(figure_id: str, seed: int) -> dict[str, dict]:
    """Canonical config dicts for a figure, keyed by output stem."""
    base = _base_config(seed)
    if figure_id == "fig1a":
        return {"fig1a": {**base, "alpha_m": _ALPHA_M_GRID, "r": [2], "sweep": {"axis": "alpha_m"}}}
    if figure_id == "fig1b":
        return {"fig1b": {**base, "alpha_m": _ALPHA_M_GRID, "r": [4], "sweep": {"axis": "alpha_m"}}}
    if figure_id == "fig1c":
        return {"fig1c": {**base, "alpha_m": [0.2], "r": _R_GRID, "sweep": {"axis": "r"}}}
    if figure_id == "fig1d":
        return {"fig1d": {**base, "alpha_m": [0.8], "r": _R_GRID, "sweep": {"axis": "r"}}}
    axis_values = {"fig2": ("mu", _MU_GRID), "fig3": ("sigma", _SIGMA_GRID), "fig4": ("gamma_noise", _GAMMA_GRID)}
    if figure_id in axis_values:
        axis, values = axis_values[figure_id]
        out = {}
        for am in (0.2, 0.8):
            for r in (2, 4):
                stem = f"{figure_id}_am{int(am * 10):02d}_r{r}"
                out[stem] = {
                    **base,
                    "alpha_m": [am],
                    "r": [r],
                    "sweep": {"axis": axis, "values": values},
                }
        return out
    raise ValueError(f"unknown figure id {figure_id!r}")


def reproduce(figure_id: str, out_dir, seed: int) -> list[Path]:
    """Write the canonical config(s) and CSV(s) for a figure; returns CSV paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for stem, cfg_dict in figure_configs(figure_id, seed).items():
        with open(out_dir / f"{stem}.config.json", "w", encoding="utf-8") as fh:
            json.dump(cfg_dict, fh, indent=2)
            fh.write("\n")
        rows = run_sweep(config_from_dict(cfg_dict))
        paths.append(emit_csv(rows, out_dir / f"{stem}.csv"))
    return paths
