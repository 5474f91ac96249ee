"""Discrete distributions estimated from equal-width histograms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptySeries, InvalidDistribution, OutOfRange
from .returns_stats import as_array

NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProbDist:
    """Cell probabilities p_i; zero cells are kept."""

    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=float, copy=True).reshape(-1)
        if p.size == 0:
            raise InvalidDistribution("distribution needs at least one cell")
        if not np.all(np.isfinite(p)) or np.any(p < 0) or np.any(p > 1):
            raise InvalidDistribution("probabilities must lie in [0, 1]")
        total = math.fsum(p)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise InvalidDistribution(f"probabilities sum to {total!r}, not 1")
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)

    @property
    def support_size(self) -> int:
        return self.probs.size

    def __len__(self):
        return self.probs.size

    def __eq__(self, other):
        if not isinstance(other, ProbDist):
            return NotImplemented
        return np.array_equal(self.probs, other.probs)

    __hash__ = None

    @classmethod
    def normalized(cls, weights) -> "ProbDist":
        w = np.asarray(weights, dtype=float)
        return cls(w / w.sum())

    @classmethod
    def uniform(cls, n: int) -> "ProbDist":
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def point(cls, n: int = 1, at: int = 0) -> "ProbDist":
        p = np.zeros(n)
        p[at] = 1.0
        return cls(p)


def as_probs(d) -> np.ndarray:
    if isinstance(d, ProbDist):
        return d.probs
    return ProbDist(d).probs


@dataclass(frozen=True)
class HistogramSpec:
    """Equal-width binning; ``range=None`` means [min, max] of the data.

    ``bins=None`` selects the square-root rule, ceil(sqrt(N)).
    """

    bins: int | None = None
    range: tuple[float, float] | None = None

    def __post_init__(self):
        if self.bins is not None and (int(self.bins) != self.bins or self.bins < 1):
            raise ValueError(f"bins must be a positive integer, got {self.bins!r}")
        if self.range is not None:
            lo, hi = self.range
            if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
                raise ValueError(f"range must satisfy lo < hi, got {self.range!r}")


def default_bin_count(n: int) -> int:
    return max(1, math.ceil(math.sqrt(n)))


def bin_counts(r, spec: HistogramSpec = HistogramSpec()) -> tuple[np.ndarray, np.ndarray]:
    """Cell counts and edges. Cells are [e_i, e_{i+1}) except the last, which is closed."""
    x = as_array(r)
    if x.size == 0:
        raise EmptySeries("cannot build a histogram of an empty series")
    bins = spec.bins if spec.bins is not None else default_bin_count(x.size)
    if spec.range is None:
        lo, hi = float(x.min()), float(x.max())
        if lo == hi:
            return np.array([x.size]), np.array([lo, hi])
    else:
        lo, hi = spec.range
        bad = np.flatnonzero((x < lo) | (x > hi))
        if bad.size:
            raise OutOfRange(
                f"{bad.size} observation(s) outside [{lo}, {hi}], first at index {bad[0]}"
            )
    counts, edges = np.histogram(x, bins=int(bins), range=(lo, hi))
    return counts, edges


def histogram_prob(r, spec: HistogramSpec = HistogramSpec()) -> ProbDist:
    """Cell frequencies count_i / N over ``spec.bins`` equal-width cells.

    A constant series with a data-driven range has zero width and yields
    the single-cell point distribution.
    """
    counts, _ = bin_counts(r, spec)
    return ProbDist(counts / counts.sum())


def product_dist(a, b) -> ProbDist:
    """Joint distribution of two independent systems, p_ij = p_i q_j (row-major)."""
    return ProbDist(np.outer(as_probs(a), as_probs(b)).reshape(-1))
