import json

import pytest

from leibniz_lab.data.expected_values import TABLES_ID, expected_fingerprint
from leibniz_lab.services import report
from leibniz_lab.services.results_store import (
    ROW_FIELDS,
    append_run,
    export_rows,
    read_runs,
    rows_frame,
    summarize,
)

ROWS = [
    {"quantity": "der", "algebra": "R3(4)", "n": 4, "computed": "3", "expected": "3", "status": "pass"},
    {"quantity": "hl2", "algebra": "R3(4)", "n": 4, "computed": "1", "expected": "1", "status": "pass"},
    {"quantity": "der", "algebra": "R4(4)", "n": 4, "computed": "2", "expected": "3", "status": "fail"},
]


def test_summarize_empty():
    result = summarize([])
    assert result["total"] == 0
    assert result["by_status"] == {}
    assert result["by_quantity"] == {}
    assert result["pass_rate"] == 0


def test_summarize_basic():
    result = summarize(ROWS)
    assert result["total"] == 3
    assert result["by_status"] == {"pass": 2, "fail": 1}
    assert result["by_quantity"]["der"] == {"pass": 1, "fail": 1}
    assert result["pass_rate"] == 0.6667


def test_append_and_read(tmp_path):
    path = tmp_path / "runs" / "history.jsonl"
    stored = append_run(rows=ROWS, nmin=4, nmax=4, path=path)
    append_run(rows=ROWS[:1], nmin=4, nmax=4, path=path)

    runs = read_runs(path)
    assert len(runs) == 2
    assert runs[0] == json.loads(json.dumps(stored))
    assert runs[0]["tables_id"] == TABLES_ID
    assert runs[0]["expected_fingerprint"] == expected_fingerprint()
    assert runs[0]["range"] == {"nmin": 4, "nmax": 4}
    assert runs[1]["summary"]["total"] == 1


def test_default_path_comes_from_settings(tmp_path, monkeypatch):
    path = tmp_path / "default.jsonl"
    monkeypatch.setenv("LEIBNIZ_RESULTS_PATH", str(path))
    append_run(rows=ROWS, nmin=4, nmax=5)
    assert path.exists()
    assert len(read_runs()) == 1


def test_corrupted_lines_are_skipped(tmp_path):
    path = tmp_path / "history.jsonl"
    append_run(rows=ROWS, nmin=4, nmax=4, path=path)
    with path.open("a", encoding="utf-8") as handle:
        handle.write("{broken\n\n[1, 2]\n")
    assert len(read_runs(path)) == 1
    assert read_runs(tmp_path / "missing.jsonl") == []


def test_fingerprint_is_stable():
    first = expected_fingerprint()
    assert first.startswith("sha256:")
    assert expected_fingerprint() == first


def test_rows_frame_columns():
    frame = rows_frame(ROWS)
    assert list(frame.columns) == ROW_FIELDS
    assert len(frame) == 3


@pytest.mark.parametrize("fmt", ["csv", "json", " CSV "])
def test_export(tmp_path, fmt):
    path = export_rows(ROWS, fmt, tmp_path)
    content = open(path, encoding="utf-8").read()
    if fmt.strip().lower() == "csv":
        assert content.splitlines()[0] == ",".join(ROW_FIELDS)
        assert len(content.splitlines()) == 4
    else:
        assert json.loads(content)["rows"] == ROWS


def test_export_rejects_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        export_rows(ROWS, "xlsx", tmp_path)


def test_report_rows_pass_for_small_sizes():
    rows = report.build_rows(4, 4)
    assert report.failed_rows(rows) == []
    quantities = {row["quantity"] for row in rows}
    assert {"leibniz_defects", "der", "bl2", "zl2", "hl2", "hl2_basis", "c11", "degeneration"} <= quantities
    assert [row for row in rows if row["quantity"] == "degeneration"][0]["computed"] == "verified"
