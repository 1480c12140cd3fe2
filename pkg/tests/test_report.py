"""Report serialization and figure rendering."""

import csv
import json

from mopcount.figures import figure_path_for, render_records_figure
from mopcount.report import (
    ExperimentRecord,
    all_passed,
    records_table,
    records_to_csv,
    records_to_jsonl,
    write_csv,
    write_jsonl,
)


def sample_records():
    return [
        ExperimentRecord(
            suite="p4-value",
            n=8,
            k=4,
            observed=74,
            expected=74,
            passed=True,
            witnesses=("aa", "bb"),
            millis=1.25,
        ),
        ExperimentRecord(
            suite="scan-p5",
            n=26,
            k=5,
            observed=2309,
            expected=2873,
            passed=False,
            family="p5",
            note="ratio=0.803689",
        ),
    ]


def test_csv_columns_and_values(tmp_path):
    path = write_csv(sample_records(), tmp_path / "out.csv")
    with path.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == [
        "suite", "n", "k", "observed", "expected", "pass", "witnesses", "millis",
    ]
    assert rows[1][:6] == ["p4-value", "8", "4", "74", "74", "pass"]
    assert rows[1][6] == "aa;bb"
    assert rows[2][5] == "FAIL"


def test_jsonl_roundtrip(tmp_path):
    path = write_jsonl(sample_records(), tmp_path / "out.jsonl")
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first["suite"] == "p4-value"
    assert first["witnesses"] == ["aa", "bb"]
    second = json.loads(lines[1])
    assert second["family"] == "p5" and second["pass"] is False


def test_reports_are_reproducible():
    a, b = sample_records(), sample_records()
    assert records_to_csv(a) == records_to_csv(b)
    assert records_to_jsonl(a) == records_to_jsonl(b)


def test_all_passed():
    recs = sample_records()
    assert not all_passed(recs)
    assert all_passed([recs[0]])


def test_table_has_header_and_rows():
    table = records_table(sample_records())
    lines = table.splitlines()
    assert lines[0].startswith("suite")
    assert len(lines) == 3


def test_figure_rendering(tmp_path):
    out = figure_path_for(tmp_path / "report.csv")
    assert out.name == "report.png"
    render_records_figure(sample_records(), out)
    assert out.stat().st_size > 0
    # suite-style records (non-scan) use the scatter renderer
    only_suite = [sample_records()[0]]
    out2 = tmp_path / "suite.png"
    render_records_figure(only_suite, out2)
    assert out2.stat().st_size > 0
