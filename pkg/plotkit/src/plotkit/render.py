"""Render sweep CSVs into multi-panel line figures with CI bands.

The input contract is the sweep CSV emitted by the gradelab harness: one
row per (sweep value, scheme) with a mean and a 95% confidence interval.
Each panel plots one CSV, one line per scheme, with the CI as a shaded
band.  Rendering is read-only over its inputs and returns a summary
(series counts, axis ranges) so reruns can be compared.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

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


@dataclass(frozen=True)
class PanelSpec:
    csv_path: str
    x_field: str
    title: str = ""


@dataclass(frozen=True)
class PlotSpec:
    panels: tuple[PanelSpec, ...]
    rows: int
    cols: int
    out_path: str
    y_field: str = "perf_mean"
    band_fields: tuple[str, str] = ("perf_ci_lo", "perf_ci_hi")
    series_field: str = "scheme"
    fmt: str = "png"

    def __post_init__(self):
        if not self.panels:
            raise ValueError("a plot needs at least one panel")
        if self.rows * self.cols < len(self.panels):
            raise ValueError("panel layout is too small for the panel list")
        if self.fmt not in ("png", "svg"):
            raise ValueError("format must be png or svg")


@dataclass(frozen=True)
class PanelSummary:
    title: str
    n_series: int
    n_points: int
    x_range: tuple[float, float]
    y_range: tuple[float, float]


@dataclass(frozen=True)
class RenderResult:
    out_path: str
    panels: tuple[PanelSummary, ...] = field(default_factory=tuple)


def _load_series(panel: PanelSpec, spec: PlotSpec):
    needed = {panel.x_field, spec.y_field, spec.series_field, *spec.band_fields}
    with open(panel.csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = needed.difference(header)
        if missing:
            raise ValueError(f"{panel.csv_path}: missing columns {sorted(missing)}")
        rows = list(reader)
    if not rows:
        raise ValueError(f"{panel.csv_path}: no data rows")
    series: dict[str, list[tuple[float, float, float, float]]] = {}
    for rec in rows:
        lo, hi = (float(rec[f]) for f in spec.band_fields)
        series.setdefault(rec[spec.series_field], []).append(
            (float(rec[panel.x_field]), float(rec[spec.y_field]), lo, hi)
        )
    for points in series.values():
        points.sort()
    return series


def render(spec: PlotSpec) -> RenderResult:
    """Draw every panel and write the image; returns per-panel summaries.

    All inputs are validated before the output file is touched, so a bad
    CSV never leaves a partial image behind.
    """
    loaded = [_load_series(panel, spec) for panel in spec.panels]

    fig, axes = plt.subplots(
        spec.rows, spec.cols, figsize=(5.0 * spec.cols, 3.6 * spec.rows), squeeze=False
    )
    summaries = []
    try:
        for i, (panel, series) in enumerate(zip(spec.panels, loaded)):
            ax = axes[i // spec.cols][i % spec.cols]
            for name in sorted(series):
                pts = series[name]
                x = [p[0] for p in pts]
                y = [p[1] for p in pts]
                ax.plot(x, y, marker="o", markersize=3, linewidth=1.2, label=name)
                ax.fill_between(x, [p[2] for p in pts], [p[3] for p in pts], alpha=0.2)
            ax.set_xlabel(panel.x_field)
            ax.set_ylabel(spec.y_field)
            if panel.title:
                ax.set_title(panel.title)
            ax.legend(fontsize=7)
            xs = [p[0] for pts in series.values() for p in pts]
            ys = [v for pts in series.values() for p in pts for v in p[1:]]
            summaries.append(
                PanelSummary(
                    title=panel.title,
                    n_series=len(series),
                    n_points=max(len(pts) for pts in series.values()),
                    x_range=(min(xs), max(xs)),
                    y_range=(min(ys), max(ys)),
                )
            )
        for j in range(len(spec.panels), spec.rows * spec.cols):
            axes[j // spec.cols][j % spec.cols].axis("off")
        fig.tight_layout()
        out = Path(spec.out_path)
        fig.savefig(out, format=spec.fmt, dpi=150)
    finally:
        plt.close(fig)
    return RenderResult(out_path=str(out), panels=tuple(summaries))


_FIG1_PANELS = (
    ("fig1a.csv", "alpha_m", "two evaluations"),
    ("fig1b.csv", "alpha_m", "four evaluations"),
    ("fig1c.csv", "r", "low motivation coefficient"),
    ("fig1d.csv", "r", "high motivation coefficient"),
)


def fig1_spec(in_dir, out_path) -> PlotSpec:
    """2x2 layout over the four canonical first-figure CSVs."""
    in_dir = Path(in_dir)
    panels = tuple(
        PanelSpec(csv_path=str(in_dir / name), x_field=x, title=title)
        for name, x, title in _FIG1_PANELS
    )
    fmt = Path(out_path).suffix.lstrip(".").lower() or "png"
    return PlotSpec(panels=panels, rows=2, cols=2, out_path=str(out_path), fmt=fmt)
