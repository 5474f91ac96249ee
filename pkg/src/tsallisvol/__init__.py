"""Stock-index volatility from log returns: standard deviation, RSD,
and Shannon / Tsallis entropies of equal-width return histograms."""

from .dispersion import DispersionReport, dispersion, relative_std_dev, std_dev
from .entropy import (
    DEFAULT_Q_VALUES,
    EntropyReport,
    concavity_check,
    entropy_report,
    equiprobable_entropy,
    finite_variance_q,
    jackson_derivative,
    jackson_entropy,
    pseudo_additivity_check,
    q_exponential,
    q_logarithm,
    shannon_entropy,
    stability_probe,
    tsallis_entropy,
)
from .errors import *  # noqa: F401,F403
from .ingest import CsvOptions, PriceSeries, load_csv, price_series, write_csv
from .probability import HistogramSpec, ProbDist, default_bin_count, histogram_prob, product_dist
from .report import Report, RunConfig, SeriesResult, analyze_series, render, run_report
from .returns_stats import ReturnSeries, SummaryStats, log_returns, summary_stats

__version__ = "0.1.0"
