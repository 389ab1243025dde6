"""
Plain-text aligned tables for metric rows and the bias report.
"""
from capfair.models.Report import METRIC_FIELDS

METRIC_HEADER = ("label", "Bleu1", "Bleu2", "Bleu3", "Bleu4", "METEOR-lite", "ROUGE_L", "CIDEr")
BIAS_HEADER = ("word", "male", "female", "ratio", "support")
SEP = "  "


def render_table(header, rows):
    """
    First column left-aligned, the others right-aligned, columns separated by two spaces.

    >>> print(render_table(("name", "n"), [("a", "10"), ("bb", "2")]), end="")
    name   n
    a     10
    bb     2
    """
    rows = [tuple(str(v) for v in r) for r in rows]
    assert all(len(r) == len(header) for r in rows), "every row needs %d columns" % len(header)
    widths = [max(len(str(v)) for v in column) for column in zip(header, *rows)]

    def line(values):
        cells = [values[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(values[1:], widths[1:])]
        return SEP.join(cells).rstrip()

    return "".join(line(tuple(map(str, r))) + "\n" for r in [tuple(header)] + rows)


def render_metric_table(reports):
    """One row per MetricReport, four decimals."""
    rows = [(r.label,) + tuple("%.4f" % getattr(r, name) for name in METRIC_FIELDS) for r in reports]
    return render_table(METRIC_HEADER, rows)


def render_bias_table(rows):
    """Rows as produced by BiasRow.to_dict."""
    return render_table(
        BIAS_HEADER,
        [(r["word"], r["male_count"], r["female_count"], "%.4f" % r["ratio"], r["support"]) for r in rows],
    )
