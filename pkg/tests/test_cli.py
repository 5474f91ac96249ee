import csv
import io
import json
import math

import pytest

from tsallisvol.cli import main
from tsallisvol.ingest import load_csv, write_csv
from tsallisvol.probability import HistogramSpec
from tsallisvol.report import RunConfig, render, run_report, table_rows
from tsallisvol.synthetic import PAPER_INDEXES, synthetic_panel, synthetic_prices


@pytest.fixture
def one_file(tmp_path):
    p = tmp_path / "idx.csv"
    write_csv(synthetic_prices("idx", n=500, seed=4), p)
    return p


@pytest.fixture
def seven_files(tmp_path):
    out = []
    for s in synthetic_panel(PAPER_INDEXES, seed=9, n=800):
        p = tmp_path / f"{s.label.replace(' ', '_')}.csv"
        write_csv(s, p)
        out.append(f"{s.label}={p}")
    return out


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_defaults_single_series(one_file, capsys):
    code, out, err = run(["report", str(one_file)], capsys)
    assert code == 0 and err == ""
    report = run_report(RunConfig(inputs=(("idx", one_file),)))
    ent = table_rows(report)[2]
    assert [r[0] for r in ent] == ["Statistics", "Shannon", "Tsallis", "Tsallis", "Tsallis"]
    assert [r[1] for r in ent] == ["Index (q)", "1", "1.4", "1.45", "1.5"]
    assert all(len(r) == 3 for r in ent)
    assert sum(line.startswith("Tsallis ") for line in out.splitlines()) == 3


def test_seven_series_shape(seven_files, capsys):
    code, out, _ = run(["report", *seven_files], capsys)
    assert code == 0
    header = [line for line in out.splitlines() if line.startswith("Statistics  Index (q)")][0]
    for name in PAPER_INDEXES:
        assert name in header


def _json_and_csv(argv, capsys):
    _, js, _ = run(argv + ["--format", "json"], capsys)
    _, cs, _ = run(argv + ["--format", "csv"], capsys)
    _, tb, _ = run(argv + ["--format", "table"], capsys)
    return json.loads(js), list(csv.DictReader(io.StringIO(cs))), tb


def test_cross_format_consistency(seven_files, capsys):
    doc, rows, table = _json_and_csv(["report", *seven_files, "--q", "0.5,1.4,2"], capsys)
    assert [d["label"] for d in doc] == [r["label"] for r in rows] == list(PAPER_INDEXES)
    for d, r in zip(doc, rows):
        assert set(d) == {"label", "stats", "dispersion", "entropy", "histogram"}
        for k, v in d["stats"].items():
            assert float(r[k]) == v
        assert float(r["std_dev"]) == d["dispersion"]["std_dev"]
        assert float(r["rsd"]) == d["dispersion"]["rsd"]
        assert float(r["shannon"]) == d["entropy"]["shannon"]
        assert int(r["bins"]) == d["histogram"]["bins"]
        for q, v in d["entropy"]["tsallis"].items():
            assert float(r[f"tsallis_q{q}"]) == v
        assert set(d["entropy"]["tsallis"]) == {"0.5", "1.4", "2"}
    # the table shows the same numbers rounded
    lines = table.splitlines()
    shannon_line = next(line for line in lines if line.split()[:2] == ["Shannon", "1"])
    assert shannon_line.split()[2:] == [f"{d['entropy']['shannon']:.4f}" for d in doc]
    kurt_line = next(line for line in lines if line.startswith("Kurtosis"))
    assert kurt_line.split()[1:] == [f"{d['stats']['kurtosis']:.6f}" for d in doc]
    jb_line = next(line for line in lines if line.startswith("Probability"))
    assert jb_line.split()[1:] == [f"{d['stats']['jb_p_value']:.6f}" for d in doc]


@pytest.mark.parametrize("fmt", ["table", "csv", "json"])
def test_determinism(seven_files, capsys, fmt):
    outs = {run(["report", *seven_files, "--format", fmt], capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_bins_and_range_flags(one_file, capsys):
    _, js, _ = run(["report", str(one_file), "--bins", "12", "--range=-0.2:0.2", "--format", "json"], capsys)
    h = json.loads(js)[0]["histogram"]
    assert h == {"bins": 12, "range": [-0.2, 0.2]}


def test_default_bins_sqrt(one_file, capsys):
    _, js, _ = run(["report", str(one_file), "--format", "json"], capsys)
    doc = json.loads(js)[0]
    assert doc["stats"]["n"] == 499
    assert doc["histogram"]["bins"] == math.ceil(math.sqrt(499))


def test_out_of_range_is_error(one_file, capsys):
    code, out, err = run(["report", str(one_file), "--range=-0.001:0.001"], capsys)
    assert code == 1 and out == ""
    assert "outside" in err and str(one_file) in err


def test_bad_row_reported_and_nothing_emitted(tmp_path, one_file, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("date,close\n2020-01-01,10\n2020-01-02,-5.0\n2020-01-03,11\n")
    code, out, err = run(["report", str(one_file), str(bad)], capsys)
    assert code == 1
    assert out == ""
    assert "bad.csv" in err and "row 3" in err


def test_keep_going_emits_partial(tmp_path, one_file, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("date,close\n2020-01-01,10\n")
    code, out, err = run(["report", str(bad), str(one_file), "--keep-going", "--format", "json"], capsys)
    assert code == 1
    assert [d["label"] for d in json.loads(out)] == ["idx"]
    assert "bad.csv" in err


def test_skip_bad_rows_flag(tmp_path, capsys):
    p = tmp_path / "gap.csv"
    write_csv(synthetic_prices("gap", n=50, seed=1), p)
    lines = p.read_text().splitlines()
    lines[10] = lines[10].split(",")[0] + ","
    p.write_text("\n".join(lines) + "\n")
    assert run(["report", str(p)], capsys)[0] == 1
    code, out, _ = run(["report", str(p), "--skip-bad-rows", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)[0]["stats"]["n"] == 48


def test_zero_mean_rsd_is_na(tmp_path, capsys):
    p = tmp_path / "flat.csv"
    p.write_text("date,close\n2020-01-01,100\n2020-01-02,110\n2020-01-03,100\n2020-01-04,110\n2020-01-05,100\n")
    _, tb, _ = run(["report", str(p), "--format", "table"], capsys)
    assert "n/a" in next(line for line in tb.splitlines() if line.startswith("RSD"))
    _, js, _ = run(["report", str(p), "--format", "json"], capsys)
    assert json.loads(js)[0]["dispersion"]["rsd"] is None
    _, cs, _ = run(["report", str(p), "--format", "csv"], capsys)
    assert next(csv.DictReader(io.StringIO(cs)))["rsd"] == ""


def test_label_defaults_to_stem(one_file, capsys):
    _, js, _ = run(["report", str(one_file), "--format", "json"], capsys)
    assert json.loads(js)[0]["label"] == "idx"


def test_output_file(one_file, tmp_path, capsys):
    dest = tmp_path / "out.csv"
    code, out, _ = run(["report", str(one_file), "--format", "csv", "-o", str(dest)], capsys)
    assert code == 0 and out == ""
    assert dest.read_text().startswith("label,n,mean,")


@pytest.mark.parametrize("bad", ["1.4,1.4", "", "-1", "a,b"])
def test_bad_q_list(one_file, bad, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["report", str(one_file), "--q", bad])
    assert exc.value.code == 2


def test_run_config_validation(one_file):
    with pytest.raises(ValueError):
        RunConfig(inputs=())
    with pytest.raises(ValueError):
        RunConfig(inputs=(("a", one_file),), q_values=())
    with pytest.raises(ValueError):
        RunConfig(inputs=(("a", one_file),), q_values=(1.4, 1.4))
    with pytest.raises(ValueError):
        RunConfig(inputs=(("a", one_file),), output_format="xml")


def test_gen_synthetic(tmp_path, capsys):
    code, out, _ = run(["gen-synthetic", str(tmp_path / "d"), "--labels", "A,B c", "--n", "300", "--seed", "5"], capsys)
    assert code == 0
    entries = [line.split("=", 1) for line in out.splitlines()]
    assert [e[0] for e in entries] == ["A", "B c"]
    s = load_csv(entries[1][1])
    assert len(s) == 300 and s.dates[0].isoformat() == "1990-01-08"
    assert all(d.weekday() < 5 for d in s.dates)
    # reproducible
    again = tmp_path / "e"
    run(["gen-synthetic", str(again), "--labels", "A,B c", "--n", "300", "--seed", "5"], capsys)
    assert (again / "B_c.csv").read_bytes() == (tmp_path / "d" / "B_c.csv").read_bytes()


def test_figures(seven_files, tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, out, _ = run(["report", *seven_files, "--figures", str(figdir)], capsys)
    assert code == 0 and out
    names = sorted(p.name for p in figdir.iterdir())
    assert names == ["entropy.png", "returns.png", "rsd.png"]
    for p in figdir.iterdir():
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_api_matches_cli(one_file, capsys):
    report = run_report(RunConfig(inputs=(("idx", one_file),), histogram=HistogramSpec(bins=20)))
    _, out, _ = run(["report", str(one_file), "--bins", "20"], capsys)
    assert render(report, "table") == out
