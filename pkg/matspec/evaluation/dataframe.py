import logging
import numpy as np
import pandas as pd
from tabulate import tabulate
from matspec.utils import highlighted

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["id", "paper eq", "residual", "tolerance", "status", "corrected form"]


def get_report_df(reports):
    """
    One row per entry report, sorted by id. An empty report list gives a
    header-only frame.
    """
    rows = [[r.id, r.paper_eq,
             np.nan if r.residual is None else r.residual,
             r.tolerance, r.status, r.corrected_form or ""]
            for r in sorted(reports, key=lambda r: r.id)]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def get_status_counts_df(report_df):
    counts = report_df["status"].value_counts()
    return pd.DataFrame({"entries": [int(counts.get(s, 0)) for s in ("PASS", "CORRECTED", "FAIL")]},
                        index=["PASS", "CORRECTED", "FAIL"])


def render_report_df(report_df, tablefmt="github", showindex=False):
    formatted = report_df.copy()
    if "residual" in formatted:
        formatted["residual"] = [("n/a" if pd.isna(v) else f"{v:.2e}") for v in formatted["residual"]]
    if "tolerance" in formatted:
        formatted["tolerance"] = [f"{v:.0e}" for v in formatted["tolerance"]]
    return tabulate(formatted, headers="keys", tablefmt=tablefmt, showindex=showindex, disable_numparse=True)


def log_report_df_to_screen(report_df, txt=None, showindex=False):
    logger.info(f"\n[*] {txt or 'VERIFICATION LEDGER'}\n" + highlighted(render_report_df(report_df, showindex=showindex)))


def log_report_df_to_file(report_df, out_csv_file=None, out_txt_file=None):
    if out_csv_file:
        with open(out_csv_file, "w+") as out_csv:
            out_csv.write(report_df.to_csv(index=False))
    if out_txt_file:
        with open(out_txt_file, "w+") as out_txt:
            out_txt.write(render_report_df(report_df) + "\n")


def log_report_df(report_df, out_csv_file=None, out_txt_file=None, txt=None, showindex=False):
    log_report_df_to_screen(report_df, txt, showindex)
    log_report_df_to_file(report_df, out_csv_file, out_txt_file)
