"""Grading schemes: score -> grade maps.

Three kinds: numerical scoring ("ns", identity), uniform letter grading
("ulg", T equal buckets) and general cut-vector letter grading ("cuts").
Letter schemes map a score to the midpoint of its bucket; intervals are
half-open [c_{i-1}, c_i), with s = 1 folded into the top bucket.  By
convention ULG and NS map 1 to 1 while a general cut vector maps 1 to the
top-interval midpoint.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np

from gradelab.dist import _check_unit


@dataclass(frozen=True)
class GradingScheme:
    kind: str  # "ns" | "ulg" | "cuts"
    cuts: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind == "ns":
            if self.cuts:
                raise ValueError("numerical scoring takes no cuts")
            return
        if self.kind not in ("ulg", "cuts"):
            raise ValueError(f"unknown grading kind {self.kind!r}")
        c = np.asarray(self.cuts, dtype=float)
        if c.size < 2 or c[0] != 0.0 or c[-1] != 1.0:
            raise ValueError("cuts must start at 0 and end at 1")
        if np.any(np.diff(c) < 0.0):
            raise ValueError("cuts must be non-decreasing")
        if np.any(np.diff(c) == 0.0):
            warnings.warn("degenerate cuts: empty buckets are unreachable", stacklevel=2)

    @staticmethod
    def ns() -> "GradingScheme":
        return GradingScheme(kind="ns")

    @staticmethod
    def ulg(T: int) -> "GradingScheme":
        if not (isinstance(T, int) and T >= 1):
            raise ValueError("T must be a positive integer")
        return GradingScheme(kind="ulg", cuts=tuple(i / T for i in range(T + 1)))

    @staticmethod
    def cut_vector(cuts) -> "GradingScheme":
        return GradingScheme(kind="cuts", cuts=tuple(float(c) for c in cuts))

    @property
    def is_letter(self) -> bool:
        return self.kind != "ns"

    @property
    def T(self) -> int:
        if not self.is_letter:
            raise ValueError("numerical scoring has no grade count")
        return len(self.cuts) - 1

    @property
    def label(self) -> str:
        if self.kind == "ns":
            return "ns"
        if self.kind == "ulg":
            return f"ulg:{self.T}"
        return "cuts:[" + ",".join(f"{c:g}" for c in self.cuts) + "]"

    def midpoints(self) -> np.ndarray:
        c = np.asarray(self.cuts)
        return 0.5 * (c[:-1] + c[1:])

    def bucket_index(self, s):
        """0-based bucket of a score; s = 1 maps to the top bucket."""
        if not self.is_letter:
            raise ValueError("numerical scoring has no buckets")
        s = _check_unit(s, "s")
        c = np.asarray(self.cuts)
        return np.clip(np.searchsorted(c, s, side="right") - 1, 0, self.T - 1)

    def grade(self, s):
        s = _check_unit(s, "s")
        if self.kind == "ns":
            return s + 0.0
        g = self.midpoints()[self.bucket_index(s)]
        if self.kind == "ulg":
            g = np.where(s == 1.0, 1.0, g)
        return g

    def is_symmetric(self, grid_size: int = 512, tol: float = 1e-9):
        """Check B(1-s) = 1 - B(s) on a grid, skipping the cut points.

        Returns (symmetric, max_violation).
        """
        if grid_size < 2:
            raise ValueError("grid_size must be at least 2")
        s = (np.arange(grid_size) + 0.5) / grid_size
        if self.is_letter:
            c = np.asarray(self.cuts)
            near_cut = np.min(np.abs(s[:, None] - c[None, :]), axis=1) < 1e-12
            near_cut |= np.min(np.abs((1.0 - s)[:, None] - c[None, :]), axis=1) < 1e-12
            s = s[~near_cut]
        violation = float(np.max(np.abs(self.grade(1.0 - s) - (1.0 - self.grade(s)))))
        return violation <= tol, violation


def parse_scheme(text: str) -> GradingScheme:
    """Parse "ns", "ulg:T" or "cuts:[0,0.3,0.7,1]"."""
    text = text.strip()
    if text == "ns":
        return GradingScheme.ns()
    if text.startswith("ulg:"):
        return GradingScheme.ulg(int(text[4:]))
    if text.startswith("cuts:"):
        return GradingScheme.cut_vector(json.loads(text[5:]))
    raise ValueError(f"unrecognized grading scheme {text!r}")
