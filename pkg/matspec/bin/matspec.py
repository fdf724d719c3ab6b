"""
Entry script redirecting all command line arguments to a specified script
from the matspec.bin folder.

Usage:
matspec [--help] [--log_dir DIR] [--log_level LEVEL] [--seed N] script [script args]...
"""

import logging
import argparse
import ast
import os
import sys
import importlib
import pkgutil
from matspec import bin, Defaults
from matspec.version import __version__

logger = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'WARN', 'ERROR', 'FATAL', 'CRITICAL')


def get_scripts():
    """ Script module names in matspec.bin mapped to the first paragraph of their docstring """
    this_script = os.path.splitext(os.path.basename(__file__))[0]
    scripts = {}
    for module_info in pkgutil.iter_modules(bin.__path__):
        if module_info.ispkg or module_info.name == this_script:
            continue
        path = os.path.join(module_info.module_finder.path, module_info.name + ".py")
        with open(path) as in_file:
            doc = ast.get_docstring(ast.parse(in_file.read())) or ""
        scripts[module_info.name] = " ".join(doc.split("\n\n")[0].split())
    return dict(sorted(scripts.items()))


def get_parser():
    scripts = get_scripts()
    title = f"matspec ({__version__})"
    usage = (f"matspec [--help] [--log_dir DIR] [--log_level LEVEL] [--seed N] script [script args]...\n\n"
             f"{title}\n{'-' * len(title)}\nAvailable scripts:\n" +
             "".join(f"- {name:8s} {doc}\n" for name, doc in scripts.items()))

    parser = argparse.ArgumentParser(usage=usage)
    parser.add_argument("script", help="Name of the matspec script to run.",
                        choices=list(scripts))
    parser.add_argument("--log_dir", default="logs", type=str,
                        help="Folder of the log files written with a script's --log_file flag.")
    parser.add_argument("--log_level", default="INFO", type=str.upper, choices=LOG_LEVELS,
                        help="Logging level of the matspec package loggers. Default 'INFO'.")
    parser.add_argument("--seed", default=None, type=int,
                        help="Seed the global numpy and random generators with this integer. "
                             "Catalog sampling is seeded from the run configuration instead.")
    return parser


def split_help_from_args(args):
    """
    Separate -h/--help so that 'matspec <script> --help' reaches the script
    parser and a bare 'matspec --help' reaches this one.
    """
    help_args = ["--help" for arg in args if arg in ("-h", "--help")][:1]
    return [arg for arg in args if arg not in ("-h", "--help")], help_args


def entry_func():
    args, help_args = split_help_from_args(sys.argv[1:])
    parsed, script_args = get_parser().parse_known_args(args or help_args)

    # The log folder is created on demand by add_logging_file_handler
    Defaults.LOG_DIR = os.path.abspath(parsed.log_dir)
    Defaults.init_package_level_loggers(parsed.log_level)
    logger.debug(f"Entry script args dump: {vars(parsed)}")
    if parsed.seed is not None:
        Defaults.set_global_seed(parsed.seed)

    mod = importlib.import_module("matspec.bin." + parsed.script)
    mod.entry_func(script_args + help_args)


if __name__ == "__main__":
    entry_func()
