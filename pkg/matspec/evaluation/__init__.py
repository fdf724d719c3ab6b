from .dataframe import get_report_df, get_status_counts_df, render_report_df, log_report_df
from .ledger import read_reports, write_reports, reports_to_json, summarize
