"""Command line interface: exit codes, JSON shape, CSV sweeps."""

import csv
import io
import json

import jsonschema
import pytest

from qci.cli import build_parser, main
from qci.report import CSV_COLUMNS, REPORT_SCHEMA, SCHEMA_VERSION


def run_cli(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, argv):
    rc, out, err = run_cli(capsys, argv + ["--json"])
    assert rc == 0, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# exit codes


def test_exit_zero_on_success(capsys):
    rc, out, _ = run_cli(capsys, ["analyze-curve", "--f", "x*y*z"])
    assert rc == 0 and "tau: 3" in out


def test_exit_two_on_parse_error(capsys):
    rc, _, err = run_cli(capsys, ["analyze-curve", "--f", "x^2 + y"])
    assert rc == 2 and err.startswith("error:")


def test_exit_three_on_guard_error(capsys):
    rc, _, err = run_cli(capsys, ["analyze-curve", "--f", "x*y*z", "--prime", "15"])
    assert rc == 3 and "not prime" in err


def test_refusals_exit_zero(capsys):
    rc, out, _ = run_cli(
        capsys,
        ["analyze-qci", "--fa", "x*z", "--fb", "y*z", "--fc", "x*z + y*z"],
    )
    assert rc == 0 and "refus" in out


def test_bad_range_syntax_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--family", "lines", "--d-range", "3-5"])
    assert exc.value.code == 2


def test_unknown_family_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["sweep", "--family", "cubics", "--d-range", "3..5"])


# ---------------------------------------------------------------------------
# JSON documents


def test_curve_json_document(capsys):
    doc = run_json(capsys, ["analyze-curve", "--f", "x*y*z"])
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["command"] == "analyze-curve"
    assert doc["prime"] == 32003
    res = doc["results"]
    assert res["tau"] == 3 and res["r"] == 1
    assert res["curve_class"] == "free" and res["exponents"] == [1, 1]
    assert res["qci"]["t"] == 3
    jsonschema.validate(doc, REPORT_SCHEMA)


def test_qci_json_document(capsys):
    doc = run_json(
        capsys, ["analyze-qci", "--fa", "x", "--fb", "y^2", "--fc", "y*z"]
    )
    res = doc["results"]
    assert res["t"] == 1 and res["r"] == 1 and res["c2_at_r"] == 1
    assert res["splits"] is False
    assert res["classification"]["tag"] == "c2-one-resolution"
    assert res["classification"]["resolution"] == {"u": [2, 2, 2], "v": [1, 1, 2, 2]}
    jsonschema.validate(doc, REPORT_SCHEMA)


def test_hilbert_json_document(capsys):
    doc = run_json(
        capsys, ["hilbert", "--fa", "x", "--fb", "y^2", "--fc", "y*z"]
    )
    res = doc["results"]
    assert res["hilbert"]["values"] == [1, 2, 1, 1, 1, 1, 1]
    assert res["hilbert"]["plateau"] == 1
    assert res["syzygies"]["r"] == 1
    jsonschema.validate(doc, REPORT_SCHEMA)


def test_alternate_prime_flag(capsys):
    doc = run_json(capsys, ["analyze-curve", "--f", "x*y*z", "--prime", "31013"])
    assert doc["prime"] == 31013
    assert doc["results"]["tau"] == 3


def test_text_and_json_agree(capsys):
    doc = run_json(capsys, ["analyze-curve", "--f", "x^3 - y^2*z"])
    rc, text, _ = run_cli(capsys, ["analyze-curve", "--f", "x^3 - y^2*z"])
    assert rc == 0
    assert f"tau: {doc['results']['tau']}" in text
    assert f"curve class: {doc['results']['curve_class']}" in text


def test_out_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    rc, out, _ = run_cli(
        capsys, ["analyze-curve", "--f", "x*y*z", "--json", "--out", str(path)]
    )
    assert rc == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["results"]["tau"] == 3


def test_max_window_extensions_flag(capsys):
    doc = run_json(
        capsys,
        ["analyze-curve", "--f", "x*y*z", "--max-window-extensions", "0"],
    )
    assert doc["results"]["tau"] == 3
    assert doc["diagnostics"]["window_extensions"] == 0


# ---------------------------------------------------------------------------
# sweeps


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_lines_sweep_rows(capsys):
    rc, out, _ = run_cli(capsys, ["sweep", "--family", "lines", "--d-range", "3..5"])
    assert rc == 0
    rows = read_csv(out)
    assert rows[0] == list(CSV_COLUMNS)
    assert len(rows) == 4
    taus = [int(row[3]) for row in rows[1:]]
    assert taus == [4, 9, 16]
    assert all(row[9] == "ok" and row[7] == "pass" for row in rows[1:])


def test_sweep_parallel_matches_serial(capsys):
    rc, serial, _ = run_cli(
        capsys, ["sweep", "--family", "smooth-plus-line", "--d-range", "4..6"]
    )
    assert rc == 0
    rc, parallel, _ = run_cli(
        capsys,
        ["sweep", "--family", "smooth-plus-line", "--d-range", "4..6", "--jobs", "2"],
    )
    assert rc == 0
    assert serial == parallel


def test_empty_sweep_range(capsys):
    rc, out, _ = run_cli(capsys, ["sweep", "--family", "lines", "--d-range", "6..3"])
    assert rc == 0
    rows = read_csv(out)
    assert rows == [list(CSV_COLUMNS)]


def test_sweep_out_file(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    rc, out, _ = run_cli(
        capsys,
        ["sweep", "--family", "lines", "--d-range", "3..4", "--out", str(path)],
    )
    assert rc == 0 and out == ""
    rows = read_csv(path.read_text())
    assert len(rows) == 3


# ---------------------------------------------------------------------------
# parser shape


def test_parser_rejects_json_on_sweep():
    with pytest.raises(SystemExit):
        build_parser().parse_args(
            ["sweep", "--family", "lines", "--d-range", "3..4", "--json"]
        )


def test_parser_defaults():
    args = build_parser().parse_args(["analyze-curve", "--f", "x*y*z"])
    assert args.prime == 32003
    assert args.max_window_extensions == 2
