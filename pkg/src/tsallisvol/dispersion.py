"""Linear volatility: sample standard deviation and relative standard deviation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SeriesTooShort, ZeroMean
from .returns_stats import as_array

# |mean| below this fraction of sigma makes the ratio meaningless
NEAR_ZERO_MEAN = 1e-12


@dataclass(frozen=True)
class DispersionReport:
    std_dev: float
    rsd: float | None  # None when the mean is (numerically) zero


def std_dev(r) -> float:
    """Standard deviation with the T-1 divisor."""
    x = as_array(r)
    if x.size < 2:
        raise SeriesTooShort(f"need at least 2 returns, got {x.size}")
    if x.max() == x.min():
        return 0.0
    dev = x - x.mean()
    # scale first so tiny deviations do not square into subnormals
    m = float(np.max(np.abs(dev)))
    if m == 0.0:
        return 0.0
    dev = dev / m
    return m * math.sqrt(float(np.dot(dev, dev)) / (x.size - 1))


def relative_std_dev(r) -> float:
    """|sigma / mean| * 100.

    Raises ZeroMean when the mean is zero or negligible next to sigma.
    """
    x = as_array(r)
    sigma = std_dev(x)
    mean = float(x.mean())
    if mean == 0.0 or abs(mean) < NEAR_ZERO_MEAN * sigma:
        raise ZeroMean(f"mean {mean!r} is too close to zero for sigma {sigma!r}")
    return abs(sigma / mean) * 100.0


def dispersion(r) -> DispersionReport:
    try:
        rsd = relative_std_dev(r)
    except ZeroMean:
        rsd = None
    return DispersionReport(std_dev=std_dev(r), rsd=rsd)
