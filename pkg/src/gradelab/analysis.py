"""Performance evaluation and theorem-hypothesis audits.

Performance of a grading scheme is the expected quality change it induces.
It is computed two ways: Monte Carlo over per-student substreams, and
deterministic kink-aware quadrature of

    perf(B) = integral of f_Q(q) f_S(s;q) h(q, B(s)) ds dq

for the two-evaluation case.  The module also measures E|q - B(s)|, the
same-bucket / same-side region probabilities, the worst-case density
asymmetry ratio, and numerical certificates for every hypothesis appearing
in the comparison theorems.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from gradelab.dist import QualityPrior, ScoreModel
from gradelab.dynamics import MotivationParams, delta, simulate_cohort
from gradelab.grading import GradingScheme
from gradelab.quadrature import ConvergenceError, clean_breaks, integrate_1d, nodes_weights

DEFAULT_QUAD_TOL = 1e-8
DEFAULT_GRID = 512
DEFAULT_CHECK_TOL = 1e-9
DEFAULT_DENSITY_FLOOR = 1e-12
RATIO_CAP = 1e6


@dataclass(frozen=True)
class PerformanceEstimate:
    mean: float
    ci95_lo: float
    ci95_hi: float
    n: int
    method: str  # "monte_carlo" | "quadrature"
    quad_error_estimate: float | None = None

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "ci95_lo": self.ci95_lo,
            "ci95_hi": self.ci95_hi,
            "n": self.n,
            "method": self.method,
            "quad_error_estimate": self.quad_error_estimate,
        }


@dataclass(frozen=True)
class RegionProbabilities:
    p_same: float
    p_opp: float
    p_off: float


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    max_violation: float
    location: tuple[float, float] | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "max_violation": self.max_violation,
            "location": list(self.location) if self.location is not None else None,
        }


# ---------------------------------------------------------------------------
# Kink-aware quadrature of joint-expectation functionals
# ---------------------------------------------------------------------------


def _structure_points(model: ScoreModel, scheme: GradingScheme | None) -> np.ndarray:
    """Outer (q-axis) breakpoints: cuts, bucket midpoints, and density features."""
    pts = [0.0, 1.0]
    if scheme is not None and scheme.is_letter:
        pts.extend(scheme.cuts)
        pts.extend(scheme.midpoints())
    base = np.asarray(pts)
    offs = model.feature_offsets()
    if offs.size:
        base = np.concatenate([base, (base[:, None] + offs).ravel(), (base[:, None] - offs).ravel()])
    return clean_breaks(base)


def _inner_break_rows(model: ScoreModel, scheme: GradingScheme | None, q: np.ndarray) -> np.ndarray:
    """Per-q inner (s-axis) breakpoints, one sorted row per outer node."""
    cols = [np.zeros_like(q), np.ones_like(q), q]
    if scheme is not None and scheme.is_letter:
        for c in scheme.cuts[1:-1]:
            cols.append(np.full_like(q, c))
    for off in model.feature_offsets():
        cols.append(np.clip(q - off, 0.0, 1.0))
        cols.append(np.clip(q + off, 0.0, 1.0))
    return np.sort(np.column_stack(cols), axis=1)


def _joint_integrals(
    prior: QualityPrior,
    model: ScoreModel,
    scheme: GradingScheme | None,
    integrands,
    tol: float,
    max_doublings: int = 5,
    order: int = 16,
):
    """Integrate several (q, s) integrands against the joint density at once.

    All integrands share the same panel decomposition (so ratios of the
    returned values cancel discretization bias) and converge jointly: panels
    are doubled until no component moves by tol.  Returns (values, errors).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    outer = _structure_points(model, scheme)
    prev = None
    for level in range(max_doublings + 1):
        qx, qw = nodes_weights(outer, level, order)
        totals = np.zeros(len(integrands))
        n_inner = (
            (3 + (len(scheme.cuts) - 2 if scheme is not None and scheme.is_letter else 0)
             + 2 * model.feature_offsets().size - 1)
            * (2**level) * order
        )
        chunk = max(1, 2_000_000 // max(n_inner, 1))
        for start in range(0, qx.size, chunk):
            q = qx[start : start + chunk]
            sb = _inner_break_rows(model, scheme, q)
            sx, sw = nodes_weights(sb, level, order)
            fs = model.pdf(sx, q[:, None])
            base = prior.pdf(q) * qw[start : start + chunk]
            for i, g in enumerate(integrands):
                inner = np.sum(fs * g(q[:, None], sx) * sw, axis=1)
                totals[i] += float(np.dot(base, inner))
        if prev is not None:
            err = np.abs(totals - prev)
            if np.all(err < tol):
                return totals, err
        prev = totals
    raise ConvergenceError(
        f"joint quadrature did not converge to tol={tol:g} within "
        f"{max_doublings} panel doublings"
    )


def _degenerate_expectation(prior, scheme, g_diag, tol):
    """E[g(q, q)] for the zero-noise model, where s = q almost surely."""
    pts = [0.0, 1.0]
    if scheme is not None and scheme.is_letter:
        pts.extend(scheme.cuts)
        pts.extend(scheme.midpoints())
    breaks = clean_breaks(pts)
    return integrate_1d(lambda q: prior.pdf(q) * g_diag(q), breaks, tol)


def perf_quad(
    prior: QualityPrior,
    model: ScoreModel,
    scheme: GradingScheme,
    params: MotivationParams,
    tol: float = DEFAULT_QUAD_TOL,
) -> PerformanceEstimate:
    """Two-evaluation performance by deterministic quadrature."""

    def g(q, s):
        return delta(q, scheme.grade(s), params)

    if model.is_degenerate:
        val, err = _degenerate_expectation(prior, scheme, lambda q: g(q, q), tol)
    else:
        vals, errs = _joint_integrals(prior, model, scheme, [g], tol)
        val, err = float(vals[0]), float(errs[0])
    return PerformanceEstimate(
        mean=val,
        ci95_lo=val - err,
        ci95_hi=val + err,
        n=0,
        method="quadrature",
        quad_error_estimate=err,
    )


def exp_abs_dev(
    prior: QualityPrior,
    model: ScoreModel,
    scheme: GradingScheme,
    tol: float = DEFAULT_QUAD_TOL,
) -> float:
    """E|q - B(s)| under the joint law, by the same kink-aware quadrature."""

    def g(q, s):
        return np.abs(q - scheme.grade(s))

    if model.is_degenerate:
        val, _ = _degenerate_expectation(prior, scheme, lambda q: g(q, q), tol)
        return val
    vals, _ = _joint_integrals(prior, model, scheme, [g], tol)
    return float(vals[0])


def perf_mc(
    prior: QualityPrior,
    model: ScoreModel,
    scheme: GradingScheme,
    params: MotivationParams,
    n: int,
    r: int,
    seed: int,
) -> PerformanceEstimate:
    """Monte Carlo estimate of E[q_r - q_1] over n students.

    Student i draws from the substream keyed by (seed, i), so the estimate
    is independent of execution order and pairs across schemes (common
    random numbers) when the seed is shared.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    q1, qr = simulate_cohort(prior, model, scheme, params, n, r, seed)
    d = qr - q1
    mean = float(np.mean(d))
    half = 1.96 * float(np.std(d, ddof=1)) / math.sqrt(n)
    return PerformanceEstimate(
        mean=mean, ci95_lo=mean - half, ci95_hi=mean + half, n=n, method="monte_carlo"
    )


# ---------------------------------------------------------------------------
# Region probabilities and the density-asymmetry ratio
# ---------------------------------------------------------------------------


def region_probs(
    prior: QualityPrior,
    model: ScoreModel,
    T: int,
    tol: float = DEFAULT_QUAD_TOL,
) -> RegionProbabilities:
    """Probabilities that (q, s) share a bucket side, a bucket, or neither.

    Same-bucket pairs split into same-side (both at most, or both at least,
    the bucket midpoint) and opposite-side mass under uniform letter grading
    with T buckets.
    """
    if T < 1:
        raise ValueError("T must be at least 1")
    if model.is_degenerate:
        return RegionProbabilities(1.0, 0.0, 0.0)
    scheme = GradingScheme.ulg(T)
    cuts = np.asarray(scheme.cuts)
    mids = scheme.midpoints()
    breaks = _structure_points(model, scheme)

    def masses(q):
        k = np.clip(np.searchsorted(cuts, q, side="right") - 1, 0, T - 1)
        lo, hi, m = cuts[k], cuts[k + 1], mids[k]
        low_side = q <= m
        a = np.where(low_side, lo, m)
        b = np.where(low_side, m, hi)
        same = model.cdf(b, q) - model.cdf(a, q)
        opp = (model.cdf(hi, q) - model.cdf(lo, q)) - same
        return same, opp

    def f_same(q):
        return prior.pdf(q) * masses(q)[0]

    def f_opp(q):
        return prior.pdf(q) * masses(q)[1]

    p_same, _ = integrate_1d(f_same, breaks, tol)
    p_opp, _ = integrate_1d(f_opp, breaks, tol)
    return RegionProbabilities(p_same, p_opp, 1.0 - p_same - p_opp)


def gamma_ratio(
    model: ScoreModel,
    grid_size: int = DEFAULT_GRID,
    density_floor: float = DEFAULT_DENSITY_FLOOR,
) -> float:
    """Worst-case density asymmetry max f_S(a;b) / f_S(b;a) over a grid.

    Pairs whose denominator density falls below ``density_floor`` while the
    numerator does not make the ratio unbounded; that (and any ratio above
    1e6) is reported as ``inf``.  Always at least 1 since (a, b) and (b, a)
    are both scanned.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    x = (np.arange(grid_size) + 0.5) / grid_size
    f = model.pdf(x[None, :], x[:, None])  # f[i, j] = f_S(x_j ; x_i)
    num_ok = f >= density_floor
    den_ok = f.T >= density_floor
    if np.any(num_ok & ~den_ok):
        return math.inf
    both = num_ok & den_ok
    if not np.any(both):
        return 1.0
    ratio = np.max(f[both] / f.T[both])
    return math.inf if ratio > RATIO_CAP else float(max(ratio, 1.0))


# ---------------------------------------------------------------------------
# Hypothesis checks
# ---------------------------------------------------------------------------


def _one_sided_max(values, mask):
    """Max of values over mask with its flat index, or (0, None) if empty."""
    if not np.any(mask):
        return 0.0, None
    masked = np.where(mask, values, -np.inf)
    idx = int(np.argmax(masked))
    return float(masked.ravel()[idx]), idx


def _shape_check(name, matrix, axis_vals, peak_vals, axis, decreasing_away, tol):
    """Certify single-peaked (or single-dipped) shape along one axis.

    ``matrix[i, j]`` is scanned along ``axis``; for each fixed other index,
    values must not increase (decreasing_away=True) or not decrease (False)
    when moving away from the peak/dip location given by ``peak_vals``.
    """
    m = matrix if axis == 1 else matrix.T
    grid = axis_vals
    peaks = peak_vals[:, None]
    d = np.diff(m, axis=1)
    right = grid[None, :-1] >= peaks  # both points at or beyond the peak
    left = grid[None, 1:] <= peaks
    if decreasing_away:
        up_r, idx_r = _one_sided_max(d, right)
        up_l, idx_l = _one_sided_max(-d, left)
    else:
        up_r, idx_r = _one_sided_max(-d, right)
        up_l, idx_l = _one_sided_max(d, left)
    if up_r >= up_l:
        viol, idx = up_r, idx_r
    else:
        viol, idx = up_l, idx_l
    viol = max(viol, 0.0)
    loc = None
    if idx is not None:
        i, j = np.unravel_index(idx, d.shape)
        a, b = float(peak_vals[i]), float(grid[j])
        loc = (a, b) if axis == 1 else (b, a)
    return HypothesisCheck(name, viol <= tol, viol, loc)


def check_joint_symmetry(prior, model, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    x = (np.arange(grid_size) + 0.5) / grid_size
    joint = prior.pdf(x)[:, None] * model.pdf(x[None, :], x[:, None])
    diff = np.abs(joint - joint[::-1, ::-1])
    idx = int(np.argmax(diff))
    i, j = np.unravel_index(idx, diff.shape)
    viol = float(diff[i, j])
    return HypothesisCheck("joint_symmetry", viol <= tol, viol, (float(x[i]), float(x[j])))


def check_ex_ante_single_peaked(model, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    x = (np.arange(grid_size) + 0.5) / grid_size
    f = model.pdf(x[None, :], x[:, None])
    return _shape_check("ex_ante_single_peaked", f, x, x, 1, True, tol)


def check_ex_post_single_peaked(model, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    x = (np.arange(grid_size) + 0.5) / grid_size
    f = model.pdf(x[None, :], x[:, None])  # f[i, j] = f_S(x_j; q=x_i)
    # scan f_S(s; .) along q for each fixed s
    chk = _shape_check("ex_post_single_peaked", f.T, x, x, 1, True, tol)
    if chk.location is not None:
        s_loc, q_loc = chk.location
        chk = HypothesisCheck(chk.name, chk.passed, chk.max_violation, (q_loc, s_loc))
    return chk


def check_probabilistic_single_dipped(model, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    x = (np.arange(grid_size) + 0.5) / grid_size
    cdf = model.cdf(x[None, :], x[:, None])  # cdf[i, j] = F(x_j; q=x_i)
    at_q = np.diag(cdf)
    p = np.abs(cdf - at_q[:, None])  # p[i, j] = Pr[s between q_i and x_j | q_i]
    # for each fixed x (column j), p must dip at q = x_j and grow away from it
    chk = _shape_check("probabilistic_single_dipped", p.T, x, x, 1, False, tol)
    if chk.location is not None:
        x_loc, q_loc = chk.location
        chk = HypothesisCheck(chk.name, chk.passed, chk.max_violation, (x_loc, q_loc))
    return chk


def check_strong_symmetry(model, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    """Fit a distance kernel from the grid and measure the worst residual.

    Strong symmetry means the conditional density depends on (s, q) only
    through |s - q| via a non-increasing kernel; the violation combines the
    worst fit residual with any uptick in the fitted kernel.
    """
    x = (np.arange(grid_size) + 0.5) / grid_size
    f = model.pdf(x[None, :], x[:, None])
    k = np.abs(np.arange(grid_size)[:, None] - np.arange(grid_size)[None, :])
    counts = np.bincount(k.ravel())
    fitted = np.bincount(k.ravel(), weights=f.ravel()) / counts
    resid = np.abs(f - fitted[k])
    idx = int(np.argmax(resid))
    i, j = np.unravel_index(idx, resid.shape)
    uptick = float(max(0.0, np.max(np.diff(fitted), initial=-np.inf)))
    viol = max(float(resid[i, j]), uptick)
    return HypothesisCheck("strongly_symmetric", viol <= tol, viol, (float(x[i]), float(x[j])))


def check_uniform_prior(prior, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    x = (np.arange(grid_size) + 0.5) / grid_size
    dev = np.abs(prior.pdf(x) - 1.0)
    i = int(np.argmax(dev))
    return HypothesisCheck("uniform_prior", float(dev[i]) <= tol, float(dev[i]), (float(x[i]), 0.0))


def check_scheme_symmetry(scheme, grid_size=DEFAULT_GRID, tol=DEFAULT_CHECK_TOL):
    ok, viol = scheme.is_symmetric(grid_size, tol)
    return HypothesisCheck("scheme_symmetry", ok, viol)


def same_bucket_distance_gap(
    prior: QualityPrior,
    model: ScoreModel,
    T: int,
    tol: float = DEFAULT_QUAD_TOL,
):
    """E[|q-s| | same bucket] - E[|q-ULG_T(s)| | same bucket].

    Both conditional expectations are ratios of quadratures over the same
    panel decomposition, so discretization bias cancels.  Returns
    (gap, error_estimate).
    """
    scheme = GradingScheme.ulg(T)
    if model.is_degenerate:
        # s = q: |q-s| = 0 and the gap reduces to -E|q - ULG_T(q)| < 0
        val, err = _degenerate_expectation(
            prior, scheme, lambda q: -np.abs(q - scheme.grade(q)), tol
        )
        return val, err

    def in_bucket(q, s):
        return scheme.bucket_index(q) == scheme.bucket_index(s)

    gs = [
        lambda q, s: np.abs(q - s) * in_bucket(q, s),
        lambda q, s: np.abs(q - scheme.grade(s)) * in_bucket(q, s),
        lambda q, s: 1.0 * in_bucket(q, s),
    ]
    vals, errs = _joint_integrals(prior, model, scheme, gs, tol)
    num_s, num_m, mass = vals
    if mass <= 0.0:
        raise ValueError("same-bucket region carries no probability mass")
    gap = (num_s - num_m) / mass
    err = float((errs[0] + errs[1]) / mass + errs[2] * abs(gap) / mass)
    return float(gap), err


@dataclass(frozen=True)
class AssumptionReport:
    checks: tuple[HypothesisCheck, ...]
    gamma: float
    region: RegionProbabilities
    conclusion_gap: float
    conclusion_err: float
    grid_size: int
    tol: float

    def __getitem__(self, name: str) -> HypothesisCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "gamma_ratio": "unbounded" if math.isinf(self.gamma) else self.gamma,
            "region": {
                "p_same": self.region.p_same,
                "p_opp": self.region.p_opp,
                "p_off": self.region.p_off,
            },
            "conclusion_gap": self.conclusion_gap,
            "conclusion_err": self.conclusion_err,
            "grid_size": self.grid_size,
            "tol": self.tol,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def check_hypotheses(
    prior: QualityPrior,
    model: ScoreModel,
    T: int,
    params: MotivationParams,
    grid_size: int = DEFAULT_GRID,
    tol: float = DEFAULT_CHECK_TOL,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> AssumptionReport:
    """Numerically audit every hypothesis of the comparison theorems.

    The result is a grid certificate, not a proof: each entry reports its
    worst violation and where it occurred, at the stated grid resolution.
    The conclusion check is the signed performance gap
    perf(ULG_T) - perf(NS) with its quadrature uncertainty.
    """
    if grid_size < 16:
        raise ValueError("grid_size must be at least 16")
    if model.is_degenerate:
        raise ValueError("hypothesis checks need a score model with a density")
    scheme = GradingScheme.ulg(T)
    gamma = gamma_ratio(model, grid_size)
    region = region_probs(prior, model, T, quad_tol)

    checks = [
        check_uniform_prior(prior, grid_size, tol),
        check_joint_symmetry(prior, model, grid_size, tol),
        check_ex_ante_single_peaked(model, grid_size, tol),
        check_ex_post_single_peaked(model, grid_size, tol),
        check_probabilistic_single_dipped(model, grid_size, tol),
        check_strong_symmetry(model, grid_size, tol),
        check_scheme_symmetry(scheme, grid_size, tol),
    ]

    gap, gap_err = same_bucket_distance_gap(prior, model, T, quad_tol)
    cond3_viol = max(0.0, gap)
    checks.append(
        HypothesisCheck(
            "same_bucket_distance_condition", gap <= max(tol, gap_err), cond3_viol
        )
    )

    def ratio_check(name, factor):
        if math.isinf(gamma) and name == "mass_ratio_2gamma_plus_2":
            return HypothesisCheck(name, False, math.inf)
        margin = region.p_same - factor * region.p_opp
        return HypothesisCheck(name, margin >= -max(tol, quad_tol), max(0.0, -margin))

    checks.append(ratio_check("mass_ratio_2gamma_plus_2", 2.0 * (gamma + 1.0)))
    checks.append(ratio_check("mass_ratio_3x", 3.0))

    ns_perf = perf_quad(prior, model, GradingScheme.ns(), params, quad_tol)
    ulg_perf = perf_quad(prior, model, scheme, params, quad_tol)
    conclusion_gap = ulg_perf.mean - ns_perf.mean
    conclusion_err = (ns_perf.quad_error_estimate or 0.0) + (ulg_perf.quad_error_estimate or 0.0)

    return AssumptionReport(
        checks=tuple(checks),
        gamma=gamma,
        region=region,
        conclusion_gap=conclusion_gap,
        conclusion_err=conclusion_err,
        grid_size=grid_size,
        tol=tol,
    )


# ---------------------------------------------------------------------------
# Theorem verdicts
# ---------------------------------------------------------------------------

_THEOREM_HYPOTHESES = {
    "t1": ("joint_symmetry", "scheme_symmetry"),
    "c1": ("joint_symmetry", "scheme_symmetry"),
    "t2": ("joint_symmetry", "ex_ante_single_peaked", "same_bucket_distance_condition"),
    "t3": (
        "uniform_prior",
        "joint_symmetry",
        "ex_ante_single_peaked",
        "ex_post_single_peaked",
        "probabilistic_single_dipped",
        "mass_ratio_2gamma_plus_2",
    ),
    "t4": ("uniform_prior", "strongly_symmetric", "mass_ratio_3x"),
}


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    hypotheses: tuple[HypothesisCheck, ...]
    hypotheses_pass: bool
    conclusion_value: float
    conclusion_err: float
    conclusion_pass: bool
    status: str
    report: AssumptionReport = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [c.to_dict() for c in self.hypotheses],
            "hypotheses_pass": self.hypotheses_pass,
            "conclusion_value": self.conclusion_value,
            "conclusion_err": self.conclusion_err,
            "conclusion_pass": self.conclusion_pass,
            "status": self.status,
            "report": self.report.to_dict(),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def theorem_verdict(
    theorem_id: str,
    prior: QualityPrior,
    model: ScoreModel,
    T: int,
    params: MotivationParams,
    tol: float = 1e-6,
    grid_size: int = DEFAULT_GRID,
    check_tol: float = DEFAULT_CHECK_TOL,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> TheoremVerdict:
    """Audit one theorem: hypothesis certificates plus its numeric conclusion.

    The conclusion is always evaluated and recorded (the experiments show it
    can hold beyond the hypotheses), but the verdict only asserts the
    theorem when the hypotheses pass.
    """
    theorem_id = theorem_id.lower()
    if theorem_id not in _THEOREM_HYPOTHESES:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    report = check_hypotheses(prior, model, T, params, grid_size, check_tol, quad_tol)
    hyps = tuple(report[name] for name in _THEOREM_HYPOTHESES[theorem_id])
    hyp_pass = all(c.passed for c in hyps)

    a = params.alpha_m - params.alpha_d
    if theorem_id == "t1":
        lhs = perf_quad(prior, model, GradingScheme.ulg(T), params, quad_tol)
        rhs = 0.5 * a * exp_abs_dev(prior, model, GradingScheme.ulg(T), quad_tol)
        value = lhs.mean - rhs
        err = lhs.quad_error_estimate or 0.0
        ok = abs(value) <= tol
    else:
        value = report.conclusion_gap
        err = report.conclusion_err
        if a == 0.0:
            ok = abs(value) <= tol
        else:
            ok = value * a >= -tol

    if not hyp_pass:
        status = "hypotheses_not_satisfied"
    elif ok:
        status = "verified"
    else:
        status = "conclusion_violated"
    return TheoremVerdict(
        theorem=theorem_id,
        hypotheses=hyps,
        hypotheses_pass=hyp_pass,
        conclusion_value=float(value),
        conclusion_err=float(err),
        conclusion_pass=ok,
        status=status,
        report=report,
    )
