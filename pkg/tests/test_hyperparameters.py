import json
import pytest
from matspec.errors import ConfigurationError
from matspec.hyperparameters import RunConfig, SEED_ENV_VAR, get_default_config_path

DEFAULT_TOLERANCES = {"quadrature": 1e-8, "formal": 1e-10, "laplace": 1e-6,
                      "expansion": 1e-6, "pointwise": 1e-9, "extraction": 1e-8}


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)


def test_default_config():
    config = RunConfig.default()
    assert config.seeds == (0, 1, 2)
    assert config.dims == (1, 2, 3)
    assert config.tolerances == DEFAULT_TOLERANCES
    assert config.truncation_k == 30
    assert config.output_path == "matspec_report.json"
    assert config.num_workers >= 1


def test_default_yaml_loads_through_from_file():
    assert RunConfig.from_file(get_default_config_path()).to_json() == RunConfig.default().to_json()


def test_json_mirror_uses_camel_case():
    mirror = RunConfig.default().to_json()
    assert set(mirror) == {"seeds", "dims", "tolerances", "truncationK", "outputPath"}
    assert mirror["truncationK"] == 30
    assert RunConfig.from_dict(mirror).to_json() == mirror


def test_partial_config_merges_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"dims": [2], "tolerances": {"formal": 1e-12}, "numWorkers": 3}))
    config = RunConfig.from_file(str(path))
    assert config.dims == (2,)
    assert config.seeds == (0, 1, 2)
    assert config.tolerances["formal"] == 1e-12
    assert config.tolerances["laplace"] == 1e-6
    assert config.num_workers == 3


@pytest.mark.parametrize("values", (
    {"dims": [5]},
    {"dims": []},
    {"seeds": []},
    {"seeds": [1.5]},
    {"truncation_k": 5},
    {"truncation_k": 101},
    {"tolerances": {"formal": -1.0}},
    {"tolerances": {"made-up": 1e-3}},
    {"num_workers": 0},
    {"unknown_key": 1},
    {"truncationK": 30, "truncation_k": 30},
))
def test_invalid_values_rejected(values):
    with pytest.raises(ConfigurationError):
        RunConfig.from_dict(values)


def test_bad_files_rejected(tmp_path):
    with pytest.raises(ConfigurationError):
        RunConfig.from_file(str(tmp_path / "missing.json"))
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    with pytest.raises(ConfigurationError):
        RunConfig.from_file(str(bad_json))
    other = tmp_path / "config.toml"
    other.write_text("seeds = [0]")
    with pytest.raises(ConfigurationError):
        RunConfig.from_file(str(other))


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv(SEED_ENV_VAR, "17")
    assert RunConfig.default().seeds == (17, 1, 2)
    assert RunConfig.default(apply_env=False).seeds == (0, 1, 2)
    monkeypatch.setenv(SEED_ENV_VAR, "seventeen")
    with pytest.raises(ConfigurationError):
        RunConfig.default()


def test_replace_ignores_none():
    config = RunConfig.default().replace(dims=[1], truncation_k=None, num_workers=2)
    assert config.dims == (1,)
    assert config.truncation_k == 30
    assert config.num_workers == 2
    with pytest.raises(ConfigurationError):
        config.replace(truncation_k=1000)
