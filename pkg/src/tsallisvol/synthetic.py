"""Seeded synthetic index prices for exercising the pipeline without vendor data."""

from __future__ import annotations

from datetime import date, timedelta

import numpy as np

from .ingest import PriceSeries

PAPER_INDEXES = ("CAC 40", "MIB 30", "NIKKEI 225", "PSI 20", "IBEX 35", "FTSE 100", "SP 500")


def business_days(start: date, n: int) -> list[date]:
    out = []
    d = start
    while len(out) < n:
        if d.weekday() < 5:
            out.append(d)
        d += timedelta(days=1)
    return out


def synthetic_returns(n, rng, mu=0.0003, sigma=0.012, df=None) -> np.ndarray:
    """Gaussian returns, or Student-t returns rescaled to standard deviation sigma."""
    if df is None:
        z = rng.standard_normal(n)
    else:
        if df <= 2:
            raise ValueError("Student-t needs df > 2 for a finite variance")
        z = rng.standard_t(df, n) / np.sqrt(df / (df - 2.0))
    return mu + sigma * z


def synthetic_prices(
    label: str,
    n: int = 4240,
    seed=0,
    mu: float = 0.0003,
    sigma: float = 0.012,
    df: float | None = None,
    start: date = date(1990, 1, 8),
    first_price: float = 1000.0,
) -> PriceSeries:
    """Random-walk closing prices: n observations, hence n - 1 returns."""
    rng = np.random.default_rng(seed)
    r = synthetic_returns(n - 1, rng, mu, sigma, df)
    closes = first_price * np.exp(np.concatenate([[0.0], np.cumsum(r)]))
    return PriceSeries(label, tuple(business_days(start, n)), tuple(float(c) for c in closes))


def synthetic_panel(labels=PAPER_INDEXES, seed=0, **kwargs) -> list[PriceSeries]:
    """One independent series per label, seeded from a single root seed."""
    children = np.random.SeedSequence(seed).spawn(len(labels))
    return [synthetic_prices(lab, seed=np.random.default_rng(c), **kwargs) for lab, c in zip(labels, children)]
