"""Per-series analysis and the table / csv / json renderings of a report."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from .dispersion import DispersionReport, dispersion
from .entropy import DEFAULT_Q_VALUES, EntropyReport, check_q, entropy_report
from .errors import TsallisVolError
from .ingest import CsvOptions, PriceSeries, load_csv
from .probability import HistogramSpec, bin_counts
from .returns_stats import ReturnSeries, SummaryStats, log_returns, summary_stats

FORMATS = ("table", "csv", "json")

# (field, table row title, decimals in table output)
STAT_ROWS = (
    ("mean", "Mean", 6),
    ("median", "Median", 6),
    ("maximum", "Maximum", 6),
    ("minimum", "Minimum", 6),
    ("skewness", "Skewness", 6),
    ("kurtosis", "Kurtosis", 6),
    ("jarque_bera", "Jarque-Bera", 6),
    ("jb_p_value", "Probability", 6),
)
DISPERSION_ROWS = (
    ("std_dev", "Std. deviation", 6),
    ("rsd", "RSD (%)", 4),
)
ENTROPY_DECIMALS = 4


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple[tuple[str, Path], ...]
    q_values: tuple[float, ...] = DEFAULT_Q_VALUES
    histogram: HistogramSpec = HistogramSpec()
    output_format: str = "table"
    csv_options: CsvOptions = CsvOptions()
    keep_going: bool = False

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input file is required")
        if not self.q_values:
            raise ValueError("at least one q value is required")
        qs = [check_q(q) for q in self.q_values]
        if len(set(qs)) != len(qs):
            raise ValueError(f"q values must be distinct, got {list(self.q_values)}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")


@dataclass(frozen=True)
class SeriesResult:
    label: str
    returns: ReturnSeries
    stats: SummaryStats
    dispersion: DispersionReport
    entropy: EntropyReport
    bins: int
    range: tuple[float, float]

    def to_dict(self) -> dict:
        st = self.stats
        return {
            "label": self.label,
            "stats": {
                "n": st.n,
                **{name: getattr(st, name) for name, _, _ in STAT_ROWS},
            },
            "dispersion": {"std_dev": self.dispersion.std_dev, "rsd": self.dispersion.rsd},
            "entropy": {
                "shannon": self.entropy.shannon,
                "tsallis": {q_key(q): v for q, v in self.entropy.tsallis.items()},
            },
            "histogram": {"bins": self.bins, "range": list(self.range)},
        }


@dataclass
class Report:
    q_values: tuple[float, ...]
    results: list[SeriesResult] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def q_key(q: float) -> str:
    return f"{q:g}"


def analyze_series(prices: PriceSeries, q_values=DEFAULT_Q_VALUES, spec: HistogramSpec = HistogramSpec()) -> SeriesResult:
    r = log_returns(prices)
    counts, edges = bin_counts(r, spec)
    dist = counts / counts.sum()
    return SeriesResult(
        label=prices.label,
        returns=r,
        stats=summary_stats(r),
        dispersion=dispersion(r),
        entropy=entropy_report(prices.label, dist, q_values),
        bins=int(counts.size),
        range=(float(edges[0]), float(edges[-1])),
    )


def run_report(cfg: RunConfig) -> Report:
    """Load and analyze every input in order.

    Without ``keep_going`` the first failure stops the run and the report
    carries only that error.
    """
    report = Report(tuple(float(q) for q in cfg.q_values))
    for label, path in cfg.inputs:
        try:
            prices = load_csv(path, cfg.csv_options, label=label)
            report.results.append(analyze_series(prices, report.q_values, cfg.histogram))
        except (TsallisVolError, OSError) as exc:
            msg = str(exc)
            if str(path) not in msg:
                msg = f"{path}: {msg}"
            report.errors.append(msg)
            if not cfg.keep_going:
                report.results.clear()
                break
    return report


def _fmt(value, decimals):
    if value is None:
        return "n/a"
    return f"{value:.{decimals}f}"


def table_rows(report: Report) -> list[list[list[str]]]:
    """The three table blocks as lists of string rows (header row first)."""
    res = report.results
    labels = [r.label for r in res]
    stats = [["Statistics", *labels]]
    for name, title, dp in STAT_ROWS:
        stats.append([title, *(_fmt(getattr(r.stats, name), dp) for r in res)])
    disp = [["Statistics", *labels]]
    for name, title, dp in DISPERSION_ROWS:
        disp.append([title, *(_fmt(getattr(r.dispersion, name), dp) for r in res)])
    ent = [["Statistics", "Index (q)", *labels]]
    ent.append(["Shannon", "1", *(_fmt(r.entropy.shannon, ENTROPY_DECIMALS) for r in res)])
    for q in report.q_values:
        ent.append(["Tsallis", q_key(q), *(_fmt(r.entropy.tsallis[q], ENTROPY_DECIMALS) for r in res)])
    return [stats, disp, ent]


TABLE_TITLES = (
    "Summary statistics of the daily returns",
    "Linear dispersion of the daily returns",
    "Shannon and Tsallis entropies",
)


def _align(rows):
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return lines


def render_table(report: Report) -> str:
    out = []
    for title, rows in zip(TABLE_TITLES, table_rows(report)):
        if out:
            out.append("")
        out.append(title)
        out.extend(_align(rows))
    return "\n".join(out) + "\n"


def csv_header(q_values) -> list[str]:
    return [
        "label",
        "n",
        *(name for name, _, _ in STAT_ROWS),
        "std_dev",
        "rsd",
        "bins",
        "shannon",
        *(f"tsallis_q{q_key(q)}" for q in q_values),
    ]


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(csv_header(report.q_values))
    for r in report.results:
        d = r.to_dict()
        row = [r.label, d["stats"]["n"]]
        row += [repr(d["stats"][name]) for name, _, _ in STAT_ROWS]
        row += [repr(r.dispersion.std_dev), "" if r.dispersion.rsd is None else repr(r.dispersion.rsd)]
        row += [r.bins, repr(r.entropy.shannon)]
        row += [repr(r.entropy.tsallis[q]) for q in report.q_values]
        w.writerow(row)
    return buf.getvalue()


def render_json(report: Report) -> str:
    return json.dumps([r.to_dict() for r in report.results], indent=2) + "\n"


def render(report: Report, fmt: str = "table") -> str:
    return {"table": render_table, "csv": render_csv, "json": render_json}[fmt](report)
