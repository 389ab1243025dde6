from capfair.report.tables import render_bias_table, render_metric_table, render_table
from capfair.report.writer import render_text, write_report
