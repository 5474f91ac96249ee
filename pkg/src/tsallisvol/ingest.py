"""Loading and validating daily closing-price series from CSV files."""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateDate,
    MissingColumn,
    MissingValue,
    NonPositivePrice,
    TooFewRows,
    UnparsableDate,
    UnparsablePrice,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CsvOptions:
    date_column: str = "date"
    close_column: str = "close"
    skip_bad_rows: bool = False


@dataclass(frozen=True)
class PriceSeries:
    """Dated closing prices of one index, strictly increasing in date.

    Construct through :func:`from_observations` or :func:`load_csv`; the
    constructor only validates, it does not sort.
    """

    label: str
    dates: tuple[date, ...]
    closes: tuple[float, ...]

    def __post_init__(self):
        if len(self.dates) != len(self.closes):
            raise ValueError("dates and closes differ in length")
        if len(self.dates) < 2:
            raise TooFewRows(f"need at least 2 observations, got {len(self.dates)}")
        for i, c in enumerate(self.closes):
            if not (math.isfinite(c) and c > 0):
                raise NonPositivePrice(f"close must be a positive number, got {c!r}", row=i)
        for i in range(1, len(self.dates)):
            if self.dates[i] <= self.dates[i - 1]:
                if self.dates[i] == self.dates[i - 1]:
                    raise DuplicateDate(f"duplicate date {self.dates[i].isoformat()}")
                raise ValueError("dates must be strictly increasing")

    def __len__(self):
        return len(self.closes)

    @property
    def observations(self) -> list[tuple[date, float]]:
        return list(zip(self.dates, self.closes))

    @classmethod
    def from_observations(cls, label: str, observations: Iterable[tuple[date, float]]) -> "PriceSeries":
        """Build a series from (date, close) pairs in any order."""
        obs = sorted(observations, key=lambda o: o[0])
        for a, b in zip(obs, obs[1:]):
            if a[0] == b[0]:
                raise DuplicateDate(f"duplicate date {a[0].isoformat()}")
        return cls(label, tuple(d for d, _ in obs), tuple(float(c) for _, c in obs))


def _parse_date(text, path, row):
    try:
        return date.fromisoformat(text.strip())
    except (ValueError, AttributeError):
        raise UnparsableDate(f"cannot parse date {text!r} (expected YYYY-MM-DD)", path, row) from None


def _parse_close(text, path, row):
    text = (text or "").strip()
    if not text:
        raise MissingValue("empty close field", path, row)
    try:
        value = float(text)
    except ValueError:
        raise UnparsablePrice(f"cannot parse close {text!r}", path, row) from None
    if not math.isfinite(value) or value <= 0:
        raise NonPositivePrice(f"close must be positive, got {text}", path, row)
    return value


def load_csv(path, options: CsvOptions | None = None, label: str | None = None) -> PriceSeries:
    """Read a ``date,close`` CSV into a :class:`PriceSeries`.

    Rows may appear in any order; they are sorted by date. Extra columns are
    ignored. Row numbers in errors count the header as row 1. With
    ``options.skip_bad_rows`` rows whose date or close cannot be used are
    dropped and their count logged as a warning; duplicate dates are always
    an error.
    """
    options = options or CsvOptions()
    path = Path(path)
    label = label if label is not None else path.stem

    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh, delimiter=",")
        fields = reader.fieldnames or []
        for col in (options.date_column, options.close_column):
            if col not in fields:
                raise MissingColumn(f"missing column {col!r} (found {fields})", path)

        rows = []
        skipped = 0
        seen: dict[date, int] = {}
        for lineno, rec in enumerate(reader, start=2):
            try:
                d = _parse_date(rec.get(options.date_column), path, lineno)
                c = _parse_close(rec.get(options.close_column), path, lineno)
            except (UnparsableDate, UnparsablePrice, MissingValue, NonPositivePrice):
                if not options.skip_bad_rows:
                    raise
                skipped += 1
                continue
            if d in seen:
                raise DuplicateDate(
                    f"date {d.isoformat()} already seen on row {seen[d]}", path, lineno
                )
            seen[d] = lineno
            rows.append((d, c))

    if skipped:
        log.warning("%s: skipped %d bad row(s)", path, skipped)
    if len(rows) < 2:
        raise TooFewRows(f"need at least 2 valid rows, got {len(rows)}", path)
    return PriceSeries.from_observations(label, rows)


def write_csv(series: PriceSeries, path, options: CsvOptions | None = None) -> None:
    """Write ``series`` so that :func:`load_csv` reads back an identical value."""
    options = options or CsvOptions()
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([options.date_column, options.close_column])
        for d, c in zip(series.dates, series.closes):
            w.writerow([d.isoformat(), repr(c)])


def price_series(label: str, closes: Sequence[float], dates: Sequence[date] | None = None) -> PriceSeries:
    """Convenience constructor; consecutive ordinal days are used when ``dates`` is omitted."""
    if dates is None:
        start = date(2000, 1, 1).toordinal()
        dates = [date.fromordinal(start + i) for i in range(len(closes))]
    return PriceSeries.from_observations(label, zip(dates, closes))
