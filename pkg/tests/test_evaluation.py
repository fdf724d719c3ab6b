import json
import pytest
from matspec.errors import ParseError
from matspec.evaluation import get_report_df, get_status_counts_df, render_report_df, summarize, write_reports, read_reports
from matspec.evaluation.dataframe import REPORT_COLUMNS, log_report_df_to_file
from matspec.hyperparameters import RunConfig
from matspec.identities import IdentityCheckReport

REPORTS = [
    IdentityCheckReport("young.closed-form", "Y = sum", 3e-15, 1e-9, "PASS", None, 6),
    IdentityCheckReport("bateman.ode.theta", "theta B = ...", 2e-13, 1e-10, "CORRECTED", "shift by I", 6),
    IdentityCheckReport("hyper.laplace-quadratic", "L[F] = ...", None, 1e-6, "FAIL", None, 0),
]


def test_summarize():
    assert summarize(REPORTS) == {"PASS": 1, "FAIL": 1, "CORRECTED": 1}
    assert summarize([]) == {"PASS": 0, "FAIL": 0, "CORRECTED": 0}


def test_report_df_rows():
    df = get_report_df(REPORTS)
    assert list(df.columns) == REPORT_COLUMNS
    assert list(df["id"]) == sorted(r.id for r in REPORTS)
    corrected = df[df["status"] == "CORRECTED"].iloc[0]
    assert corrected["corrected form"] == "shift by I"
    assert list(get_status_counts_df(df)["entries"]) == [1, 1, 1]


def test_render_formats_missing_residual():
    table = render_report_df(get_report_df(REPORTS))
    assert "n/a" in table
    assert "2.00e-13" in table
    assert "shift by I" in table


def test_empty_report_renders_header_only():
    df = get_report_df([])
    assert df.empty and list(df.columns) == REPORT_COLUMNS
    table = render_report_df(df)
    assert "paper eq" in table
    assert "PASS" not in table


def test_log_to_files(tmp_path):
    csv_file, txt_file = tmp_path / "ledger.csv", tmp_path / "ledger.txt"
    log_report_df_to_file(get_report_df(REPORTS), str(csv_file), str(txt_file))
    lines = csv_file.read_text().splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert len(lines) == 4
    assert "young.closed-form" in txt_file.read_text()


def test_write_and_read_reports(tmp_path):
    out_path = tmp_path / "out" / "report.json"
    config = RunConfig.default(apply_env=False)
    write_reports(REPORTS, str(out_path), config)
    obj = json.loads(out_path.read_text())
    assert obj["config"]["truncationK"] == 30
    assert obj["summary"]["CORRECTED"] == 1
    assert [e["id"] for e in obj["entries"]] == sorted(r.id for r in REPORTS)
    assert read_reports(str(out_path)) == sorted(REPORTS, key=lambda r: r.id)
    with pytest.raises(OSError):
        write_reports(REPORTS, str(out_path), config, overwrite=False)


def test_write_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    write_reports(REPORTS, str(a))
    write_reports(list(reversed(REPORTS)), str(b))
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("content", ("not json", '{"entries": [{"id": "x"}]}',
                                     '{"entries": [{"id": "x", "paperEq": "", "residual": 0, '
                                     '"tolerance": 1, "status": "MAYBE", "samples": 1}]}'))
def test_read_rejects_bad_files(tmp_path, content):
    path = tmp_path / "report.json"
    path.write_text(content)
    with pytest.raises(ParseError):
        read_reports(str(path))
