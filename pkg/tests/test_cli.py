import json
import pytest
from types import SimpleNamespace
from matspec.bin import eval as eval_script, verify as verify_script, report as report_script, init as init_script
from matspec.bin.matspec import get_scripts, split_help_from_args
from matspec.hyperparameters import RunConfig, SEED_ENV_VAR
from matspec.identities import IdentityEntry
from matspec.identities.samplers import ParamDraw


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)


def run_eval(capsys, *args):
    code = eval_script.run(eval_script.get_argparser().parse_args(list(args)))
    return code, capsys.readouterr().out


def decoded_value(out):
    value = json.loads(out)["value"]
    return value["dim"], value["entries"]


def test_eval_gamma(capsys):
    code, out = run_eval(capsys, "gamma", "--matrix", "[[2, 0]]")
    assert code == 0
    dim, entries = decoded_value(out)
    assert dim == 1
    assert entries[0] == pytest.approx([1.0, 0.0], abs=1e-12)


def test_eval_bateman_degree_zero_is_identity(capsys):
    code, out = run_eval(capsys, "batemanB", "--n", "0", "--a", "[[0.5, 0.2], [0.0, 1.1]]",
                         "--b", "[[1.0, 0.0], [0.0, 2.0]]", "--z", "0.7")
    assert code == 0
    dim, entries = decoded_value(out)
    assert dim == 2
    assert [e[0] for e in entries] == pytest.approx([1, 0, 0, 1], abs=1e-12)


def test_eval_pfq_at_origin(capsys):
    code, out = run_eval(capsys, "pFq", "--num", "[[0.5, 0], [1.5, 0], [0, 0], [2, 0]]",
                         "--den", "[[1.5, 0], [0, 0], [0, 0], [2.5, 0]]", "--z", "0")
    assert code == 0
    result = json.loads(out)
    assert result["meta"]["label"] == "1F1"
    assert [e[0] for e in result["value"]["entries"]] == pytest.approx([1, 0, 0, 1])


def test_eval_params_json(capsys):
    code, out = run_eval(capsys, "laguerreL", "--params", '{"n": 1, "a": 0.5, "z": "2,0"}')
    assert code == 0
    assert decoded_value(out)[1][0] == pytest.approx([-0.5, 0.0], abs=1e-12)


def test_eval_errors(capsys):
    assert run_eval(capsys, "zeta", "--z", "1")[0] == 2
    assert run_eval(capsys, "gamma")[0] == 1
    assert run_eval(capsys, "gamma", "--matrix", "[[2, 0], [1")[0] == 1
    assert run_eval(capsys, "gamma", "--matrix", "[[-1, 0]]")[0] == 1


def matrix_sampler(rng, dim):
    matrix, _ = ParamDraw(rng, dim).draw()
    return SimpleNamespace(A=matrix)


def entries(broken=False):
    rhs = (lambda p, ctx: 2 * p.A) if broken else (lambda p, ctx: p.A)
    return [IdentityEntry(id="cli.first", paper_eq="A = A", lhs=lambda p, ctx: p.A, rhs=rhs,
                          mode="pointwise", sampler=matrix_sampler),
            IdentityEntry(id="cli.second", paper_eq="2A = A + A", lhs=lambda p, ctx: 2 * p.A,
                          rhs=lambda p, ctx: p.A + p.A, mode="formal", sampler=matrix_sampler)]


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"seeds": [0, 1], "dims": [1, 2],
                                "outputPath": str(tmp_path / "report.json"), "numWorkers": 2}))
    return path


def run_verify(*args, entries=None):
    return verify_script.run(verify_script.get_argparser().parse_args(list(args)), entries=entries)


def test_verify_exit_codes(tmp_path, config_path):
    assert run_verify("--config", str(config_path), entries=entries()) == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["summary"] == {"PASS": 2, "FAIL": 0, "CORRECTED": 0}
    assert report["config"]["seeds"] == [0, 1]
    assert run_verify("--config", str(config_path), "--overwrite", entries=entries(broken=True)) == 1
    assert run_verify("--config", str(config_path), "--overwrite", "--filter", "nothing.*",
                      entries=entries()) == 2


def test_verify_does_not_overwrite_without_flag(config_path):
    assert run_verify("--config", str(config_path), entries=entries()) == 0
    assert run_verify("--config", str(config_path), entries=entries()) == 2


def test_verify_filter_and_overrides(tmp_path, config_path):
    out = tmp_path / "filtered.json"
    code = run_verify("--config", str(config_path), "--filter", "cli.sec*", "--out", str(out),
                      "--dims", "1", "--seeds", "3,4", entries=entries())
    assert code == 0
    report = json.loads(out.read_text())
    assert [e["id"] for e in report["entries"]] == ["cli.second"]
    assert report["entries"][0]["samples"] == 2
    assert report["config"]["dims"] == [1]


def test_verify_bad_config(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dims": [5]}))
    assert run_verify("--config", str(path), entries=entries()) == 2
    assert run_verify("--config", str(tmp_path / "missing.yaml"), entries=entries()) == 2
    assert run_verify("--dims", "1,x", entries=entries()) == 2


def test_verify_reruns_are_byte_identical(tmp_path, config_path):
    assert run_verify("--config", str(config_path), entries=entries()) == 0
    first = (tmp_path / "report.json").read_bytes()
    assert run_verify("--config", str(config_path), "--overwrite", "--num_workers", "1", entries=entries()) == 0
    assert (tmp_path / "report.json").read_bytes() == first


def run_report(*args):
    return report_script.run(report_script.get_argparser().parse_args(list(args)))


def test_report_renders_table(tmp_path, config_path, capsys):
    run_verify("--config", str(config_path), entries=entries())
    capsys.readouterr()
    out_csv = tmp_path / "table.csv"
    assert run_report(str(tmp_path / "report.json"), "--out_csv", str(out_csv)) == 0
    table = capsys.readouterr().out
    assert "cli.first" in table and "cli.second" in table
    assert len(out_csv.read_text().splitlines()) == 3
    assert run_report(str(tmp_path / "report.json"), "--out_csv", str(out_csv)) == 2


def test_report_of_empty_ledger(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"entries": []}))
    assert run_report(str(path)) == 0
    lines = [line for line in capsys.readouterr().out.splitlines() if line.strip()]
    assert len(lines) == 2
    assert "status" in lines[0]


def test_report_rejects_garbage(tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("definitely not a report")
    assert run_report(str(path)) == 2
    assert run_report(str(tmp_path / "missing.json")) == 2


def test_init_creates_loadable_config(tmp_path):
    args = init_script.get_argparser().parse_args(["--name", "project", "--root", str(tmp_path)])
    init_script.run(args)
    config_path = tmp_path / "project" / "config" / "run_config.yaml"
    assert config_path.exists()
    config = RunConfig.from_file(str(config_path))
    assert config.output_path == str(tmp_path / "project" / "matspec_report.json")
    assert config.seeds == (0, 1, 2)
    with pytest.raises(OSError):
        init_script.run(args)


def test_entry_script_discovers_scripts():
    scripts = get_scripts()
    assert set(scripts) == {"eval", "init", "report", "verify"}
    assert scripts["report"].startswith("Script for rendering")
    assert split_help_from_args(["verify", "-h", "--dims", "1"]) == (["verify", "--dims", "1"], ["--help"])
