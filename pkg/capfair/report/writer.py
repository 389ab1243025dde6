import os

from capfair import OutputError
from capfair.constants import REPORT_JSON_FILE, REPORT_TXT_FILE, TIMING_FILE
from capfair.models.Report import RunReport
from capfair.report.tables import render_bias_table, render_metric_table, render_table
from capfair.util.helpers import dump_json, mkdir


def render_text(run: RunReport):
    """The human-readable report.  Contains nothing that changes between identical runs."""
    lines = ["capfair %s (v%s): %s" % (run.command, run.version, run.status), "", "config:"]
    lines += ["  %s: %s" % (k, _fmt(v)) for k, v in sorted(run.config.items())]

    if run.split_sizes:
        lines += ["", "split sizes:", render_table(("split", "images"), run.split_sizes).rstrip("\n")]

    if run.metric_rows:
        lines += ["", "metrics:", render_metric_table(run.metric_rows).rstrip("\n")]
        first = run.metric_rows[0]
        lines.append("(%s; %s uses exact and stem matching only)" % (first.cider_variant, first.meteor_label))

    if run.gender_accuracy is not None:
        lines += ["", "gender accuracy:"]
        lines += ["  %s: %s" % (k, _fmt(v)) for k, v in run.gender_accuracy.items()]

    if run.bias is not None:
        lines += ["", "gender co-occurrence bias (%s):" % run.bias["table"]]
        lines += ["  rows: %d, min_support: %d" % (run.bias["n_rows"], run.bias["min_support"])]
        if run.bias["top"]:
            lines.append(render_bias_table(run.bias["top"]).rstrip("\n"))

    if run.notes:
        lines += ["", "notes:"] + ["  %s" % n for n in run.notes]

    lines += ["", "outputs:"] + ["  %s" % o for o in sorted(run.outputs)]
    return "\n".join(lines) + "\n"


def _fmt(v):
    if isinstance(v, float):
        return "%.4f" % v
    if isinstance(v, (list, tuple)):
        return ", ".join(map(str, v))
    if isinstance(v, dict):
        return ", ".join("%s=%s" % (k, _fmt(x)) for k, x in sorted(v.items()))
    return str(v)


def write_report(run: RunReport, out_dir):
    """Writes report.json, report.txt and timing.json under `out_dir`."""
    mkdir(out_dir)
    for name, write in (
        (REPORT_JSON_FILE, lambda fp: dump_json(run.to_dict(), fp)),
        (REPORT_TXT_FILE, lambda fp: fp.write(render_text(run))),
        (TIMING_FILE, lambda fp: dump_json(run.timing(), fp)),
    ):
        path = os.path.join(out_dir, name)
        try:
            with open(path, "w", encoding="utf-8") as fp:
                write(fp)
        except OSError as e:
            raise OutputError(path, e.strerror or str(e))
