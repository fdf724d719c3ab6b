import logging
import os
import random
import sys
import numpy as np

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s | %(asctime)s | %(module)s:%(funcName)s:%(lineno)d | %(message)s'
LOG_DATEFMT = "%Y/%m/%d %H:%M:%S"


class _Defaults:
    """
    Package-wide numerical thresholds, project layout names, logging set-up and seeding.
    """
    # 'matspec'
    PACKAGE_NAME = __name__.split(".")[0]

    # Project layout written by 'matspec init'
    CONFIG_DIR = 'config'
    CONFIG_NAME = 'run_config.yaml'

    # Absolute entry tolerance for matrix equality and relative commutator tolerance
    EQUALITY_ATOL = 1e-10
    COMMUTATOR_RTOL = 1e-10
    # Smallest singular value relative to the norm below which A + nI counts as singular
    INVERTIBILITY_RTOL = 1e-12
    # Largest accepted eigenvector condition number in spectral matrix functions
    MAX_EIGENBASIS_COND = 1e6

    GLOBAL_SEED = None

    # LOG_DIR is set by the matspec entry script (--log_dir)
    PACKAGE_LEVEL_LOGGERS = []
    LOG_DIR = None

    @classmethod
    def numerical_settings(cls):
        return {"equality_atol": cls.EQUALITY_ATOL,
                "commutator_rtol": cls.COMMUTATOR_RTOL,
                "invertibility_rtol": cls.INVERTIBILITY_RTOL,
                "max_eigenbasis_cond": cls.MAX_EIGENBASIS_COND}

    @classmethod
    def get_logging_path(cls, log_file_name=None, log_dir=None):
        log_dir = log_dir or cls.LOG_DIR
        return os.path.join(log_dir, log_file_name or "") if log_dir else None

    @classmethod
    def init_package_level_loggers(cls, level, package_names=None, format=LOG_FORMAT,
                                   datefmt=LOG_DATEFMT, stream=sys.stdout):
        """
        Attach one stream handler to the top-level logger of each package in
        'package_names' (matspec only by default). Replaces earlier calls.
        """
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter(format, datefmt=datefmt))
        cls.PACKAGE_LEVEL_LOGGERS = [logging.getLogger(name) for name in (package_names or [cls.PACKAGE_NAME])]
        for package_logger in cls.PACKAGE_LEVEL_LOGGERS:
            package_logger.setLevel(level)
            package_logger.addHandler(handler)

    @classmethod
    def _assert_log_path_free(cls, path, mode, overwrite_existing):
        if not os.path.exists(path):
            return
        if overwrite_existing:
            os.remove(path)
        elif "a" not in mode:
            raise OSError(f"Log file {path} already exists. Set --overwrite to replace it, or choose "
                          f"another file with --log_dir / --log_file.")

    @classmethod
    def set_logging_file_handler(cls, file_name, loggers=None, mode="w", log_dir=None, overwrite_existing=False):
        path = cls.get_logging_path(file_name, log_dir)
        if path is None:
            raise ValueError("Defaults.LOG_DIR is not set. Run through the 'matspec' entry script "
                             "or pass 'log_dir'.")
        cls._assert_log_path_free(path, mode, overwrite_existing)
        folder = os.path.dirname(path)
        if folder and not os.path.exists(folder):
            logger.info(f"Creating logging directory at path: {folder}")
            os.makedirs(folder, exist_ok=True)

        package_logger = logging.getLogger(cls.PACKAGE_NAME)
        file_handler = logging.FileHandler(path, mode=mode)
        file_handler.setLevel(package_logger.level)
        formatter = package_logger.handlers[0].formatter if package_logger.handlers else None
        file_handler.setFormatter(formatter or logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
        for passed_logger in (loggers or cls.PACKAGE_LEVEL_LOGGERS or [package_logger]):
            passed_logger.addHandler(file_handler)
        return path

    @classmethod
    def set_global_seed(cls, seed):
        """
        Seeds the legacy numpy and random generators. Catalog sampling draws
        from its own per-entry generators and does not depend on this seed.
        """
        cls.GLOBAL_SEED = int(seed)
        logger.info(f"Seeding numpy and random modules with seed: {cls.GLOBAL_SEED}")
        np.random.seed(cls.GLOBAL_SEED)
        random.seed(cls.GLOBAL_SEED)

    @classmethod
    def get_config_dir(cls, project_dir):
        return os.path.join(project_dir, cls.CONFIG_DIR)

    @classmethod
    def get_config_path(cls, project_dir):
        return os.path.join(cls.get_config_dir(project_dir), cls.CONFIG_NAME)
