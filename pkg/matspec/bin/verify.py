"""
Script for running the identity catalog and writing the JSON verification
report.

Exit codes:
    0: no entry FAILED (CORRECTED entries are reported with a warning)
    1: at least one entry FAILED
    2: configuration error or a --filter matching no entry
"""

import logging
from argparse import ArgumentParser
from matspec import Defaults
from matspec.errors import ConfigurationError
from matspec.hyperparameters import RunConfig
from matspec.identities import EvalContext, full_catalog, run_catalog, select_entries
from matspec.evaluation import get_report_df, get_status_counts_df, log_report_df, write_reports, summarize
from matspec.utils import parse_int_list
from matspec.utils.scriptutils import add_logging_file_handler

logger = logging.getLogger(__name__)


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Verify the identity catalog and write a JSON report.')
    parser.add_argument("--filter", type=str, default=None,
                        help="Glob pattern on entry ids, e.g. 'bateman.*'. Default runs all entries.")
    parser.add_argument("--config", type=str, default=None,
                        help="Path to a .json or .yaml run configuration file. "
                             "Default uses matspec/bin/defaults/run_config.yaml")
    parser.add_argument("--out", type=str, default=None,
                        help="Output report path. Overrides 'output_path' of the configuration.")
    parser.add_argument("--num_workers", type=int, default=None,
                        help="Number of threads evaluating entries. Overrides the configuration.")
    parser.add_argument("--dims", type=str, default=None,
                        help="Comma separated matrix dimensions, e.g. '1,2'. Overrides the configuration.")
    parser.add_argument("--seeds", type=str, default=None,
                        help="Comma separated integer seeds. Overrides the configuration.")
    parser.add_argument("--truncation_k", type=int, default=None,
                        help="Series truncation of formal comparisons. Overrides the configuration.")
    parser.add_argument("--overwrite", action="store_true",
                        help="Overwrite existing report and log files.")
    parser.add_argument("--log_file", type=str, default=None,
                        help="Relative path (from Defaults.LOG_DIR as specified by matspec --log_dir flag) of "
                             "output log file for this script. "
                             "Set to an empty string to not save any logs to file for this run. "
                             "Default is None (no log file)")
    return parser


def get_config(args):
    """
    Load the run configuration and apply command line overrides.
    Raises ConfigurationError.
    """
    config = RunConfig.from_file(args.config) if args.config else RunConfig.default()
    try:
        dims = tuple(parse_int_list(args.dims)) if args.dims else None
        seeds = tuple(parse_int_list(args.seeds)) if args.seeds else None
    except ValueError as e:
        raise ConfigurationError(f"--dims and --seeds take comma separated integers ({e})") from e
    return config.replace(dims=dims, seeds=seeds, output_path=args.out,
                          num_workers=args.num_workers, truncation_k=args.truncation_k)


def verify(config, pattern=None, entries=None, overwrite=True):
    """
    Run the selected entries and write the report.

    Args:
        config:    (RunConfig) Run configuration
        pattern:   (string)    Glob pattern on entry ids, all entries if None
        entries:   (list)      Entries to select from, the full catalog if None
        overwrite: (bool)      Replace an existing report file

    Returns:
        The exit code and the list of IdentityCheckReport objects
    """
    entries = select_entries(full_catalog() if entries is None else entries, pattern)
    if not entries:
        logger.error(f"Filter '{pattern}' matches no catalog entry")
        return 2, []
    logger.info(f"Running {len(entries)} entries over dims {list(config.dims)} and seeds "
                f"{list(config.seeds)} with {config.num_workers} worker(s)")
    logger.debug(f"Numerical settings: {Defaults.numerical_settings()}")
    ctx = EvalContext(truncation_k=config.truncation_k)
    reports = run_catalog(entries, seeds=list(config.seeds), dims=list(config.dims),
                          tolerances=config.tolerances, ctx=ctx, num_workers=config.num_workers)
    write_reports(reports, config.output_path, config=config, overwrite=overwrite)

    report_df = get_report_df(reports)
    log_report_df(report_df)
    log_report_df(get_status_counts_df(report_df), txt="STATUS COUNTS", showindex=True)
    counts = summarize(reports)
    for report in reports:
        if report.status == "CORRECTED":
            logger.warning(f"[CORRECTED] {report.id} ({report.paper_eq}): {report.corrected_form}")
    if counts["FAIL"]:
        failed = [r.id for r in reports if r.status == "FAIL"]
        logger.error(f"{counts['FAIL']} entries FAILED: {failed}")
        return 1, reports
    return 0, reports


def run(args, entries=None):
    """
    Run this script with the specified args. See argparser for details.
    Returns the exit code.
    """
    add_logging_file_handler(args.log_file, args.overwrite, mode="w")
    try:
        config = get_config(args)
    except ConfigurationError as e:
        logger.error(f"Configuration error: {e}")
        return 2
    try:
        code, _ = verify(config, args.filter, entries=entries, overwrite=args.overwrite)
    except OSError as e:
        logger.error(str(e))
        return 2
    return code


def entry_func(args=None):
    # Parse arguments
    parser = get_argparser()
    raise SystemExit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
