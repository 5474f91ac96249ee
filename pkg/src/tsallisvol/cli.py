"""Command-line entry point: ``tsallisvol report`` and ``tsallisvol gen-synthetic``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .entropy import DEFAULT_Q_VALUES
from .ingest import CsvOptions, write_csv
from .probability import HistogramSpec
from .report import FORMATS, RunConfig, render, run_report
from .synthetic import PAPER_INDEXES, synthetic_panel

log = logging.getLogger("tsallisvol")


def _q_list(text):
    try:
        qs = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}") from None
    if not qs:
        raise argparse.ArgumentTypeError("empty q list")
    if any(q < 0 for q in qs):
        raise argparse.ArgumentTypeError("q values must be nonnegative")
    if len(set(qs)) != len(qs):
        raise argparse.ArgumentTypeError("q values must be distinct")
    return qs


def _range(text):
    try:
        lo, hi = (float(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if not hi > lo:
        raise argparse.ArgumentTypeError("range needs lo < hi")
    return lo, hi


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _input(text):
    """``PATH`` or ``LABEL=PATH``; the label defaults to the file stem."""
    label, sep, path = text.partition("=")
    if not sep:
        return Path(text).stem, Path(text)
    return label, Path(path)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true")
    p = argparse.ArgumentParser(prog="tsallisvol", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", parents=[common], help="statistics, dispersion and entropies per price file")
    rep.add_argument("inputs", nargs="+", type=_input, metavar="[LABEL=]CSV")
    rep.add_argument("--q", type=_q_list, default=DEFAULT_Q_VALUES, metavar="Q1,Q2,...",
                     help="entropic indexes (default 1.4,1.45,1.5)")
    rep.add_argument("--bins", type=_positive_int, default=None,
                     help="equal-width histogram cells (default ceil(sqrt(N)))")
    rep.add_argument("--range", type=_range, default=None, metavar="LO:HI",
                     help="explicit histogram range; write --range=-0.1:0.1 for negative bounds")
    rep.add_argument("--format", choices=FORMATS, default="table")
    rep.add_argument("--output", "-o", type=Path, default=None, help="write report here instead of stdout")
    rep.add_argument("--figures", type=Path, default=None, metavar="DIR",
                     help="also render returns/RSD/entropy figures into DIR")
    rep.add_argument("--figure-format", default="png", choices=("png", "pdf", "svg"))
    rep.add_argument("--date-column", default="date")
    rep.add_argument("--close-column", default="close")
    rep.add_argument("--skip-bad-rows", action="store_true",
                     help="drop rows with empty or invalid date/close instead of failing")
    rep.add_argument("--keep-going", action="store_true",
                     help="report the series that loaded even if others failed")

    gen = sub.add_parser("gen-synthetic", parents=[common], help="write seeded random-walk price CSVs")
    gen.add_argument("outdir", type=Path)
    gen.add_argument("--labels", default=",".join(PAPER_INDEXES),
                     help="comma-separated series labels, one file each")
    gen.add_argument("--n", type=_positive_int, default=4240, help="prices per series")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--mu", type=float, default=0.0003, help="mean daily log return")
    gen.add_argument("--sigma", type=float, default=0.012, help="daily return standard deviation")
    gen.add_argument("--student-t", type=float, default=None, metavar="DF",
                     help="draw fat-tailed Student-t returns with DF degrees of freedom")
    return p


def cmd_report(args) -> int:
    cfg = RunConfig(
        inputs=tuple(args.inputs),
        q_values=args.q,
        histogram=HistogramSpec(bins=args.bins, range=args.range),
        output_format=args.format,
        csv_options=CsvOptions(args.date_column, args.close_column, args.skip_bad_rows),
        keep_going=args.keep_going,
    )
    report = run_report(cfg)
    for msg in report.errors:
        print(f"error: {msg}", file=sys.stderr)
    if report.results:
        text = render(report, cfg.output_format)
        if args.output is None:
            sys.stdout.write(text)
        else:
            args.output.write_text(text, encoding="utf-8")
        if args.figures is not None:
            from .plotting import write_figures

            for path in write_figures(report, args.figures, args.figure_format):
                log.info("wrote %s", path)
    return 0 if report.ok else 1


def _slug(label):
    return "".join(c if c.isalnum() else "_" for c in label).strip("_") or "series"


def cmd_gen_synthetic(args) -> int:
    labels = [s.strip() for s in args.labels.split(",") if s.strip()]
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    args.outdir.mkdir(parents=True, exist_ok=True)
    panel = synthetic_panel(labels, seed=args.seed, n=args.n, mu=args.mu, sigma=args.sigma, df=args.student_t)
    for series in panel:
        path = args.outdir / f"{_slug(series.label)}.csv"
        write_csv(series, path)
        print(f"{series.label}={path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "report":
        return cmd_report(args)
    return cmd_gen_synthetic(args)


if __name__ == "__main__":
    sys.exit(main())
