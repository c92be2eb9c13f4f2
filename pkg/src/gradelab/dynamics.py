"""The (de)motivation update and multi-round trajectories.

A grade above the current quality pulls quality up by alpha_m times the
gap; a grade below pushes it down by alpha_d times the gap.  Over r
sequential evaluations the quality updates after each of the first r - 1
grades; the final grade is received but the trajectory is measured at q_r
before any further update.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gradelab.dist import QualityPrior, ScoreModel, _check_unit
from gradelab.grading import GradingScheme
from gradelab.streams import student_uniforms


@dataclass(frozen=True)
class MotivationParams:
    alpha_m: float
    alpha_d: float

    def __post_init__(self):
        for name in ("alpha_m", "alpha_d"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


def delta(q, g, params: MotivationParams):
    """Signed quality change from receiving grade g at quality q."""
    q = _check_unit(q, "q")
    g = _check_unit(g, "g")
    d = g - q
    return np.where(d >= 0.0, params.alpha_m * d, params.alpha_d * d)


def update(q, g, params: MotivationParams):
    """Post-grade quality q' = q + delta; stays in [0, 1] for coefficients in [0, 1]."""
    return np.clip(q + delta(q, g, params), 0.0, 1.0)


@dataclass(frozen=True)
class Trajectory:
    qualities: tuple[float, ...]
    scores: tuple[float, ...]
    grades: tuple[float, ...]


def run_trajectory(
    q1: float,
    scheme: GradingScheme,
    model: ScoreModel,
    params: MotivationParams,
    r: int,
    rng,
) -> Trajectory:
    """Simulate one student through r sequential evaluations.

    Scores are drawn sequentially from the stream (one uniform each), so the
    trajectory is deterministic given (q1, stream state).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    q = float(np.asarray(_check_unit(q1, "q1")))
    qualities, scores, grades = [], [], []
    for j in range(r):
        s = float(model.sample(q, rng, size=()))
        g = float(scheme.grade(s))
        qualities.append(q)
        scores.append(s)
        grades.append(g)
        if j < r - 1:
            q = float(update(q, g, params))
    return Trajectory(tuple(qualities), tuple(scores), tuple(grades))


def simulate_cohort(
    prior: QualityPrior,
    model: ScoreModel,
    scheme: GradingScheme,
    params: MotivationParams,
    n: int,
    r: int,
    seed: int,
):
    """Vectorized cohort run on per-student substreams.

    Returns (q1, qr) arrays of shape (n,).  Student i consumes uniforms from
    the substream keyed by (seed, i): one for the initial quality, then one
    per evaluation, so cohorts with different r share their common prefix.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if r < 1:
        raise ValueError("r must be at least 1")
    u = student_uniforms(seed, n, r)
    q = prior.ppf(u[:, 0])
    q1 = q
    for j in range(r - 1):
        s = model.ppf(u[:, j + 1], q)
        q = update(q, scheme.grade(s), params)
    return q1, q
