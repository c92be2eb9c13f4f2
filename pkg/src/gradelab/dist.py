"""Quality priors and conditional score models.

Everything lives on the canonical [0, 1] scale.  Two families are provided:

* truncated normal laws (used for both the quality prior and the score
  noise), implemented as proper truncated normals so no atoms appear at the
  boundaries; and
* compactly supported symmetric kernels (triangular / rectangular) whose
  density depends only on the distance |s - q|, optionally renormalized so
  the conditional law is proper on [0, 1].

Sampling is inverse-CDF throughout: one uniform variate in, one sample out,
which is what makes per-student substreams deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr, ndtri

_SQRT_2PI = float(np.sqrt(2.0 * np.pi))


def _check_unit(x, name: str):
    x = np.asarray(x, dtype=float)
    if x.size and (np.any(x < 0.0) or np.any(x > 1.0) or np.any(np.isnan(x))):
        raise ValueError(f"{name} must lie in [0, 1]")
    return x


@dataclass(frozen=True)
class QualityPrior:
    """Prior over intrinsic quality: uniform on [0,1] or a truncated normal.

    For the truncated normal, ``mu`` and ``sigma`` describe the underlying
    normal before truncation to [0, 1].
    """

    kind: str  # "uniform" | "truncated_normal"
    mu: float = 0.5
    sigma: float = 1.0

    def __post_init__(self):
        if self.kind not in ("uniform", "truncated_normal"):
            raise ValueError(f"unknown prior kind {self.kind!r}")
        if self.kind == "truncated_normal" and not self.sigma > 0.0:
            raise ValueError("sigma must be positive")

    def _tail_and_mass(self):
        lo = ndtr((0.0 - self.mu) / self.sigma)
        hi = ndtr((1.0 - self.mu) / self.sigma)
        return lo, hi - lo

    def pdf(self, q):
        q = _check_unit(q, "q")
        if self.kind == "uniform":
            return np.ones_like(q)
        _, mass = self._tail_and_mass()
        z = (q - self.mu) / self.sigma
        return np.exp(-0.5 * z * z) / (_SQRT_2PI * self.sigma * mass)

    def cdf(self, q):
        q = _check_unit(q, "q")
        if self.kind == "uniform":
            return q + 0.0
        lo, mass = self._tail_and_mass()
        return (ndtr((q - self.mu) / self.sigma) - lo) / mass

    def ppf(self, u):
        u = _check_unit(u, "u")
        if self.kind == "uniform":
            return u + 0.0
        lo, mass = self._tail_and_mass()
        return np.clip(self.mu + self.sigma * ndtri(lo + u * mass), 0.0, 1.0)

    def sample(self, rng, size=None):
        """Inverse-CDF sample; consumes exactly one uniform per draw."""
        return self.ppf(rng.random(size))


def uniform_prior() -> QualityPrior:
    return QualityPrior(kind="uniform")


def truncated_normal_prior(mu: float, sigma: float) -> QualityPrior:
    return QualityPrior(kind="truncated_normal", mu=mu, sigma=sigma)


@dataclass(frozen=True)
class ScoreModel:
    """Conditional score law S(q) on [0, 1].

    kind "truncated_normal_noise": truncated normal with mean ``q`` and
    std ``gamma_noise`` (the experiments' noise parameter).

    kind "symmetric_kernel": density proportional to ``kernel(|s - q|)`` for
    a non-increasing kernel with support half-width ``width``.  With
    ``renormalize`` the density is divided by the in-range kernel mass
    Z(q) so it is proper on [0, 1]; without it the density equals the raw
    kernel, which is exact (and strongly symmetric) for q in
    [width, 1 - width] but sub-stochastic near the boundaries.  The cdf /
    ppf / sampling path always conditions on [0, 1] regardless of the flag.

    ``width == 0`` is the zero-noise degenerate model: the score equals the
    quality and there is no density.
    """

    kind: str  # "truncated_normal_noise" | "symmetric_kernel"
    gamma_noise: float = 0.0
    shape: str = "triangular"  # "triangular" | "rectangular"
    width: float = 0.0
    renormalize: bool = True

    def __post_init__(self):
        if self.kind == "truncated_normal_noise":
            if not self.gamma_noise > 0.0:
                raise ValueError("gamma_noise must be positive")
        elif self.kind == "symmetric_kernel":
            if self.shape not in ("triangular", "rectangular"):
                raise ValueError(f"unknown kernel shape {self.shape!r}")
            if not 0.0 <= self.width <= 1.0:
                raise ValueError("kernel width must lie in [0, 1]")
        else:
            raise ValueError(f"unknown score model kind {self.kind!r}")

    @property
    def is_degenerate(self) -> bool:
        return self.kind == "symmetric_kernel" and self.width == 0.0

    # -- symmetric-kernel primitives (distance d >= 0, signed offset x) -----

    def kernel(self, d):
        """Kernel value at distance d (symmetric-kernel models only)."""
        if self.kind != "symmetric_kernel" or self.is_degenerate:
            raise ValueError("kernel() requires a non-degenerate symmetric kernel")
        d = np.abs(np.asarray(d, dtype=float))
        w = self.width
        if self.shape == "triangular":
            return np.maximum(0.0, 1.0 - d / w) / w
        return np.where(d <= w, 1.0 / (2.0 * w), 0.0)

    def _kernel_cdf(self, x):
        """Mass of the kernel on (-inf, x]; 0 below -width, 1 above +width."""
        w = self.width
        x = np.clip(np.asarray(x, dtype=float), -w, w)
        if self.shape == "triangular":
            lower = 0.5 + (x + x * x / (2.0 * w)) / w
            upper = 0.5 + (x - x * x / (2.0 * w)) / w
            return np.where(x < 0.0, lower, upper)
        return (x + w) / (2.0 * w)

    def _kernel_ppf(self, t):
        """Inverse of _kernel_cdf on [0, 1] -> signed offset in [-w, w]."""
        w = self.width
        t = np.asarray(t, dtype=float)
        if self.shape == "triangular":
            y = np.where(
                t < 0.5,
                -1.0 + np.sqrt(np.maximum(0.0, 2.0 * t)),
                1.0 - np.sqrt(np.maximum(0.0, 2.0 * (1.0 - t))),
            )
            return w * y
        return w * (2.0 * t - 1.0)

    def mass(self, q):
        """In-range kernel mass Z(q) = integral of kernel(|t - q|) over [0, 1]."""
        return self._kernel_cdf(1.0 - q) - self._kernel_cdf(-q)

    # -- conditional law ----------------------------------------------------

    def pdf(self, s, q):
        s = _check_unit(s, "s")
        q = _check_unit(q, "q")
        if self.kind == "truncated_normal_noise":
            g = self.gamma_noise
            z = (s - q) / g
            norm = ndtr((1.0 - q) / g) - ndtr((0.0 - q) / g)
            return np.exp(-0.5 * z * z) / (_SQRT_2PI * g * norm)
        if self.is_degenerate:
            raise ValueError("degenerate (zero-noise) score model has no density")
        val = self.kernel(np.abs(s - q))
        if self.renormalize:
            val = val / self.mass(q)
        return val

    def cdf(self, s, q):
        """Conditional CDF of the proper law on [0, 1] (always renormalized)."""
        s = _check_unit(s, "s")
        q = _check_unit(q, "q")
        if self.kind == "truncated_normal_noise":
            g = self.gamma_noise
            lo = ndtr((0.0 - q) / g)
            norm = ndtr((1.0 - q) / g) - lo
            return (ndtr((s - q) / g) - lo) / norm
        if self.is_degenerate:
            return np.where(s >= q, 1.0, 0.0)
        lo = self._kernel_cdf(-q)
        return (self._kernel_cdf(s - q) - lo) / self.mass(q)

    def ppf(self, u, q):
        u = _check_unit(u, "u")
        q = _check_unit(q, "q")
        if self.kind == "truncated_normal_noise":
            g = self.gamma_noise
            lo = ndtr((0.0 - q) / g)
            norm = ndtr((1.0 - q) / g) - lo
            return np.clip(q + g * ndtri(lo + u * norm), 0.0, 1.0)
        if self.is_degenerate:
            return np.broadcast_arrays(q, u)[0] + 0.0
        lo = self._kernel_cdf(-q)
        x = self._kernel_ppf(lo + u * self.mass(q))
        return np.clip(q + x, 0.0, 1.0)

    def sample(self, q, rng, size=None):
        """Inverse-CDF sample of a score given quality; one uniform per draw."""
        if size is None:
            size = np.shape(q)
        return self.ppf(rng.random(size), q)

    # -- metadata used by the kink-aware quadrature -------------------------

    def feature_offsets(self) -> np.ndarray:
        """Distances from q at which the conditional density has structure.

        Quadrature panels are aligned to these so Gauss-Legendre keeps its
        full order across support edges / concentration scales.
        """
        if self.kind == "truncated_normal_noise":
            return self.gamma_noise * np.array([1.0, 2.0, 4.0, 8.0])
        if self.is_degenerate:
            return np.array([])
        return np.array([self.width])


def truncated_normal_noise(gamma_noise: float) -> ScoreModel:
    return ScoreModel(kind="truncated_normal_noise", gamma_noise=gamma_noise)


def triangular_kernel(width: float, renormalize: bool = True) -> ScoreModel:
    return ScoreModel(
        kind="symmetric_kernel", shape="triangular", width=width, renormalize=renormalize
    )


def rectangular_kernel(width: float, renormalize: bool = True) -> ScoreModel:
    return ScoreModel(
        kind="symmetric_kernel", shape="rectangular", width=width, renormalize=renormalize
    )


def zero_noise() -> ScoreModel:
    """Degenerate score model: the score always equals the quality."""
    return ScoreModel(kind="symmetric_kernel", shape="rectangular", width=0.0)
