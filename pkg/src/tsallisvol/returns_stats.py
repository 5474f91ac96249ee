"""Log returns and the descriptive-statistics bundle reported per index."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SeriesTooShort, ZeroVariance
from .ingest import PriceSeries


@dataclass(frozen=True, eq=False)
class ReturnSeries:
    label: str
    returns: np.ndarray

    def __post_init__(self):
        arr = np.array(self.returns, dtype=float, copy=True).reshape(-1)
        if not np.all(np.isfinite(arr)):
            raise ValueError("returns must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "returns", arr)

    def __len__(self):
        return self.returns.size


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    median: float
    maximum: float
    minimum: float
    skewness: float
    kurtosis: float
    jarque_bera: float
    jb_p_value: float
    n: int


def as_array(r) -> np.ndarray:
    """Values of a ReturnSeries, or of any 1-d sequence of floats."""
    if isinstance(r, ReturnSeries):
        return r.returns
    return np.asarray(r, dtype=float).reshape(-1)


def log_returns(prices: PriceSeries) -> ReturnSeries:
    """R_t = ln P_t - ln P_{t-1}, in date order."""
    logp = np.log(np.asarray(prices.closes, dtype=float))
    return ReturnSeries(prices.label, np.diff(logp))


def summary_stats(r) -> SummaryStats:
    """Mean, median, extremes, moment shape statistics and Jarque-Bera.

    Central moments use divisor n and kurtosis is reported raw (3 for a
    normal). Under normality JB is chi-square with two degrees of freedom,
    whose survival function is exp(-JB/2).
    """
    x = as_array(r)
    n = x.size
    if n < 4:
        raise SeriesTooShort(f"need at least 4 returns, got {n}")
    mean = float(np.mean(x))
    dev = x - mean
    m2 = float(np.mean(dev**2))
    if m2 <= 0.0 or x.max() == x.min():
        raise ZeroVariance("skewness and kurtosis are undefined for a constant series")
    m3 = float(np.mean(dev**3))
    m4 = float(np.mean(dev**4))
    skew = m3 / m2**1.5
    kurt = m4 / m2**2
    jb = n / 6.0 * (skew**2 + (kurt - 3.0) ** 2 / 4.0)
    return SummaryStats(
        mean=mean,
        median=float(np.median(x)),
        maximum=float(np.max(x)),
        minimum=float(np.min(x)),
        skewness=skew,
        kurtosis=kurt,
        jarque_bera=jb,
        jb_p_value=math.exp(-jb / 2.0),
        n=n,
    )
