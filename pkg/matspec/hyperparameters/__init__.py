"""
Run configuration: the YAMLHParams wrapper and the validated RunConfig.
"""

import json
import logging
import os
from dataclasses import dataclass, field, asdict
from yamlhparams import YAMLHParams as _YAMLHParams
from matspec import Defaults
from matspec.errors import ConfigurationError
from matspec.identities.registry import TOLERANCE_CLASSES
from matspec.utils import default_num_workers

logger = logging.getLogger(__name__)

VALID_DIMS = (1, 2, 3, 4)
TRUNCATION_RANGE = (10, 100)
SEED_ENV_VAR = "MATSPEC_SEED"
CONFIG_FIELDS = ("seeds", "dims", "tolerances", "truncation_k", "output_path", "num_workers")

# camelCase keys of the JSON mirror format
KEY_ALIASES = {"truncationK": "truncation_k",
               "outputPath": "output_path",
               "numWorkers": "num_workers"}


def _handle_camel_case_keys(hparams):
    for old_name, new_name in KEY_ALIASES.items():
        value = hparams.get(old_name, None)
        if value is not None:
            logger.warning(f"Found camelCase key '{old_name}' in configuration file at path "
                           f"{hparams.yaml_path}. Reading it as '{new_name}'. "
                           f"Rename the key to suppress this warning.")


def check_deprecated_params(hparams):
    _handle_camel_case_keys(hparams)


class YAMLHParams(_YAMLHParams):
    """
    Wrapper around the yamlhparams.YAMLHParams object to pass the matspec package name for VC.
    Also allows to disable VC with no_version_control parameter.
    """
    def __init__(self, yaml_path, no_version_control=False):
        vc = Defaults.PACKAGE_NAME if not no_version_control else None
        super(YAMLHParams, self).__init__(yaml_path,
                                          version_control_package_name=vc,
                                          check_deprecated_params_func=check_deprecated_params)


def get_default_config_path():
    package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(package_dir, "bin", "defaults", Defaults.CONFIG_NAME)


def _plain(value):
    """ ruamel containers -> builtin dict/list """
    if hasattr(value, "items"):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass(frozen=True)
class RunConfig:
    seeds: tuple
    dims: tuple
    tolerances: dict = field(default_factory=dict)
    truncation_k: int = 30
    output_path: str = "matspec_report.json"
    num_workers: int = 1

    def __post_init__(self):
        if not self.seeds or not all(isinstance(s, int) and not isinstance(s, bool) for s in self.seeds):
            raise ConfigurationError(f"'seeds' must be a non-empty list of integers, got {self.seeds}")
        if not self.dims or not set(self.dims) <= set(VALID_DIMS):
            raise ConfigurationError(f"'dims' must be a non-empty subset of {VALID_DIMS}, got {self.dims}")
        unknown = set(self.tolerances) - set(TOLERANCE_CLASSES)
        if unknown:
            raise ConfigurationError(f"Unknown tolerance classes {sorted(unknown)}. "
                                     f"Valid classes: {TOLERANCE_CLASSES}")
        missing = set(TOLERANCE_CLASSES) - set(self.tolerances)
        if missing:
            raise ConfigurationError(f"Missing tolerances for classes {sorted(missing)}")
        for name, tol in self.tolerances.items():
            if not isinstance(tol, (int, float)) or not tol > 0:
                raise ConfigurationError(f"Tolerance '{name}' must be a positive number, got {tol}")
        low, high = TRUNCATION_RANGE
        if not isinstance(self.truncation_k, int) or not low <= self.truncation_k <= high:
            raise ConfigurationError(f"'truncation_k' must be an integer in [{low}, {high}], "
                                     f"got {self.truncation_k}")
        if not isinstance(self.num_workers, int) or self.num_workers < 1:
            raise ConfigurationError(f"'num_workers' must be a positive integer, got {self.num_workers}")

    @classmethod
    def from_dict(cls, obj, base=None, apply_env=True):
        """
        Build a RunConfig from a mapping. Missing fields (and missing tolerance
        classes) are taken from 'base', the packaged defaults if None.

        Args:
            obj:       (dict)      Configuration values (snake_case or camelCase keys)
            base:      (RunConfig) Values for fields not present in obj
            apply_env: (bool)      Let MATSPEC_SEED replace the first seed
        """
        if not isinstance(obj, dict):
            raise ConfigurationError(f"Configuration must be a mapping, got {type(obj).__name__}")
        values = {}
        for key, value in obj.items():
            key = KEY_ALIASES.get(key, key)
            if key in values:
                raise ConfigurationError(f"Configuration key '{key}' given twice")
            values[key] = value
        valid = set(CONFIG_FIELDS)
        unknown = set(values) - valid
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys {sorted(unknown)}. Valid keys: {sorted(valid)}")
        if base is None and set(values) != valid:
            base = cls.default(apply_env=False)
        if base is not None:
            tolerances = dict(base.tolerances)
            tolerances.update(values.get("tolerances") or {})
            values = {**base.to_dict(), **values, "tolerances": tolerances}
        if values.get("num_workers") is None:
            values["num_workers"] = default_num_workers()
        for key in ("seeds", "dims"):
            if not isinstance(values[key], (list, tuple)):
                raise ConfigurationError(f"'{key}' must be a list, got {values[key]!r}")
            values[key] = tuple(values[key])
        values["tolerances"] = {str(k): v for k, v in dict(values["tolerances"]).items()}
        values["output_path"] = str(values["output_path"])
        config = cls(**values)
        return config.with_seed_from_env() if apply_env else config

    @classmethod
    def from_file(cls, path, apply_env=True):
        """
        Load a .json (mirror format) or .yaml/.yml run configuration file.
        """
        if not os.path.exists(path):
            raise ConfigurationError(f"Configuration file not found at {path}")
        ext = os.path.splitext(path)[-1].lower()
        if ext == ".json":
            try:
                with open(path) as in_file:
                    obj = json.load(in_file)
            except json.JSONDecodeError as e:
                raise ConfigurationError(f"Configuration file at {path} is not valid JSON: {e}") from e
        elif ext in (".yaml", ".yml"):
            obj = _plain(YAMLHParams(path, no_version_control=True))
        else:
            raise ConfigurationError(f"Configuration file must be .json, .yaml or .yml, got {path}")
        logger.info(f"Loading run configuration from {path}")
        return cls.from_dict(obj, apply_env=apply_env)

    @classmethod
    def default(cls, apply_env=True):
        """ The packaged run_config.yaml """
        path = get_default_config_path()
        obj = _plain(YAMLHParams(path, no_version_control=True))
        missing = set(CONFIG_FIELDS) - {KEY_ALIASES.get(k, k) for k in obj}
        if missing:
            raise ConfigurationError(f"Default configuration at {path} misses keys {sorted(missing)}")
        return cls.from_dict(obj, apply_env=apply_env)

    def with_seed_from_env(self):
        value = os.environ.get(SEED_ENV_VAR)
        if value in (None, ""):
            return self
        try:
            seed = int(value)
        except ValueError as e:
            raise ConfigurationError(f"Environment variable {SEED_ENV_VAR} must be an integer, got {value!r}") from e
        logger.info(f"{SEED_ENV_VAR}={seed} replaces the first seed {self.seeds[0]}")
        return self.replace(seeds=(seed,) + tuple(self.seeds[1:]))

    def replace(self, **changes):
        values = {**self.to_dict(), **{k: v for k, v in changes.items() if v is not None}}
        for key in ("seeds", "dims"):
            values[key] = tuple(values[key])
        return RunConfig(**values)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        """ camelCase mirror of the fields affecting results (num_workers excluded) """
        return {"seeds": list(self.seeds),
                "dims": list(self.dims),
                "tolerances": dict(sorted(self.tolerances.items())),
                "truncationK": self.truncation_k,
                "outputPath": self.output_path}
