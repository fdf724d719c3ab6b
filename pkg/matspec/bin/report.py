"""
Script for rendering a JSON verification report as a per-entry status table.
"""

import logging
import os
from argparse import ArgumentParser
from matspec.errors import ParseError
from matspec.evaluation import read_reports, get_report_df, render_report_df, log_report_df
from matspec.utils.scriptutils import add_logging_file_handler

logger = logging.getLogger(__name__)


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Render a verification report as a table.')
    parser.add_argument("report_path", type=str,
                        help="Path to a JSON report written by 'matspec verify'.")
    parser.add_argument("--out_csv", type=str, default=None,
                        help="Optional path of a .csv copy of the table.")
    parser.add_argument("--out_txt", type=str, default=None,
                        help="Optional path of a plain text copy of the table.")
    parser.add_argument("--overwrite", action="store_true",
                        help="Overwrite existing output and log files.")
    parser.add_argument("--log_file", type=str, default=None,
                        help="Relative path (from Defaults.LOG_DIR as specified by matspec --log_dir flag) of "
                             "output log file for this script. "
                             "Set to an empty string to not save any logs to file for this run. "
                             "Default is None (no log file)")
    return parser


def assert_args(args):
    for path in (args.out_csv, args.out_txt):
        if path and os.path.exists(path) and not args.overwrite:
            raise OSError(f"Output file at {path} already exists. Set --overwrite to replace it.")


def run(args):
    """
    Run this script with the specified args. See argparser for details.
    Returns the exit code.
    """
    add_logging_file_handler(args.log_file, args.overwrite, mode="w")
    try:
        assert_args(args)
        reports = read_reports(args.report_path)
    except (OSError, ParseError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2
    report_df = get_report_df(reports)
    log_report_df(report_df, out_csv_file=args.out_csv, out_txt_file=args.out_txt,
                  txt=f"REPORT {args.report_path} ({len(report_df)} entries)")
    print(render_report_df(report_df))
    return 0


def entry_func(args=None):
    # Parse arguments
    parser = get_argparser()
    raise SystemExit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
