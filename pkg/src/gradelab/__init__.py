"""Grading-dynamics laboratory.

Compares numerical scoring against letter grading schemes in a model where
disclosed grades motivate or demotivate students across sequential
evaluations.  Provides distributions, grading schemes, trajectory dynamics,
Monte Carlo and quadrature performance evaluation, hypothesis audits, and an
experiment harness that emits CSV sweeps.
"""

from gradelab.dist import (
    QualityPrior,
    ScoreModel,
    rectangular_kernel,
    triangular_kernel,
    truncated_normal_noise,
    truncated_normal_prior,
    uniform_prior,
    zero_noise,
)
from gradelab.dynamics import MotivationParams, Trajectory, delta, run_trajectory, update
from gradelab.grading import GradingScheme, parse_scheme
from gradelab.quadrature import ConvergenceError

__all__ = [
    "ConvergenceError",
    "GradingScheme",
    "MotivationParams",
    "QualityPrior",
    "ScoreModel",
    "Trajectory",
    "delta",
    "parse_scheme",
    "rectangular_kernel",
    "run_trajectory",
    "triangular_kernel",
    "truncated_normal_noise",
    "truncated_normal_prior",
    "uniform_prior",
    "update",
    "zero_noise",
]
