"""
Script for initializing new matspec project directories with a copy of the
default run configuration.
"""

import logging
import os
from argparse import ArgumentParser
from matspec import Defaults
from matspec.utils import create_folders
from matspec.utils.scriptutils import add_logging_file_handler

logger = logging.getLogger(__name__)


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Create a new project folder')
    parser.add_argument('--name', type=str, required=True,
                        help='the name of the project folder')
    parser.add_argument('--root', type=str, default=os.path.abspath("./"),
                        help='a path to the root folder in '
                             'which the project will be initialized '
                             '(default=./)')
    parser.add_argument("--output_path", type=str, default=None,
                        help="Optional report path stored in the new configuration "
                             "(default: <project>/matspec_report.json)")
    parser.add_argument("--overwrite", action="store_true",
                        help="Overwrite existing projects and/or log files")
    parser.add_argument("--log_file", type=str, default=None,
                        help="Relative path (from Defaults.LOG_DIR as specified by matspec --log_dir flag) of "
                             "output log file for this script. "
                             "Set to an empty string to not save any logs to file for this run. "
                             "Default is None (no log file)")
    return parser


def copy_yaml_and_set_output_path(in_path, out_path, output_path):
    """
    Creates a YAMLHParams object from in_path (the default run configuration),
    sets the report output path and saves the configuration to out_path.

    args:
        in_path:     (string) Path to the default run_config.yaml file
        out_path:    (string) Path to save the configuration to
        output_path: (string) Report path written into the configuration
    """
    from matspec.hyperparameters import YAMLHParams
    hparams = YAMLHParams(in_path, no_version_control=True)
    hparams.set_group("/output_path", output_path, overwrite=True)
    hparams.save_current(out_path)


def init_project_folder(default_folder, out_folder, output_path=None):
    """
    Create and populate a new project folder with the default run configuration.

    Args:
        default_folder: (string) Path to the matspec.bin.defaults folder
        out_folder:     (string) Path to the project directory to create and populate
        output_path:    (string) Report path stored in the configuration
    """
    config_dir = Defaults.get_config_dir(out_folder)
    logger.info(f"Initializing project in project folder: {out_folder}")
    create_folders(config_dir)
    in_path = os.path.join(default_folder, Defaults.CONFIG_NAME)
    output_path = output_path or os.path.join(out_folder, "matspec_report.json")
    copy_yaml_and_set_output_path(in_path, Defaults.get_config_path(out_folder), output_path)
    return Defaults.get_config_path(out_folder)


def run(args):
    """
    Run this script with the specified args. See argparser for details.
    Returns the path of the written run configuration.
    """
    add_logging_file_handler(args.log_file, args.overwrite, mode="w")
    default_folder = os.path.join(os.path.dirname(os.path.abspath(__file__)), "defaults")
    root_path = os.path.abspath(args.root)
    if not os.path.isdir(root_path):
        raise OSError(f"Root folder '{args.root}' does not exist.")
    out_folder = os.path.join(root_path, args.name)
    if os.path.exists(out_folder) and not args.overwrite:
        raise OSError(f"Project folder '{out_folder}' already exists. Set --overwrite to replace "
                      f"its run configuration (other files are left untouched).")
    create_folders(out_folder, create_deep=True)
    config_path = init_project_folder(default_folder, out_folder, args.output_path)
    logger.info(f"Run configuration written to {config_path}. Use it with "
                f"'matspec verify --config {config_path}'")
    return config_path


def entry_func(args=None):
    # Parse arguments
    parser = get_argparser()
    run(parser.parse_args(args))


if __name__ == "__main__":
    entry_func()
