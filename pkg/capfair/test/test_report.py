import json
import os

import pytest

from capfair import RunStatus, __version__
from capfair.models.Report import GenderAccuracy, MetricReport, RunReport
from capfair.report import render_metric_table, render_text, write_report

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

ROWS = [
    ("SAT", 0.70123, 0.53456, 0.39871, 0.29012, 0.24019, 0.52011, 0.89123),
    ("SAT-N", 0.71234, 0.54321, 0.40012, 0.30047, 0.25068, 0.53013, 0.91234),
    ("SAI", 0.70891, 0.53902, 0.39444, 0.29333, 0.24498, 0.52276, 1.02347),
]


def metric_report(label, b1, b2, b3, b4, meteor, rouge, cider, n_images=100):
    return MetricReport(label, b1, b2, b3, b4, rouge, meteor, cider, n_images)


def finished_run():
    run = RunReport(command="evaluate", config=dict(split="all", workers=2, neutral=False))
    run.metric_rows = [metric_report(*row) for row in ROWS]
    run.outputs = ["per_image_SAT.csv", "per_image_SAI.csv"]
    run.note("SAI: 3 of 103 candidate(s) lie outside the all split")
    run.status = RunStatus.running
    run.status = RunStatus.successful
    return run


def test_metric_table_matches_golden_file():
    with open(os.path.join(DATA_DIR, "metric_table.golden.txt"), encoding="utf-8") as fp:
        golden = fp.read()
    assert render_metric_table([metric_report(*row) for row in ROWS]) == golden


@pytest.mark.parametrize("field, value", [("bleu1", 1.5), ("rouge_l", -0.1), ("cider", 10.5)])
def test_metric_values_are_range_checked(field, value):
    values = dict(bleu1=0.5, bleu2=0.5, bleu3=0.5, bleu4=0.5, rouge_l=0.5, meteor_lite=0.5, cider=1.0)
    values[field] = value
    with pytest.raises(AssertionError):
        MetricReport(label="x", n_images=1, **values)


def test_run_status_changes():
    run = RunReport(command="split", config={})
    assert run.status is RunStatus.no_attempt
    assert run.wall_time is None

    run.status = RunStatus.running
    started = run.started_on
    assert started is not None and run.finished_on is None
    run.status = RunStatus.running
    assert run.started_on is started

    run.status = RunStatus.failed
    assert run.finished_on >= started
    assert run.wall_time.total_seconds() >= 0


def test_report_dict_has_no_timing():
    d = finished_run().to_dict()
    assert d["status"] == "Finished successfully"
    assert d["version"] == __version__
    assert d["outputs"] == ["per_image_SAI.csv", "per_image_SAT.csv"]
    assert [m["label"] for m in d["metrics"]] == ["SAT", "SAT-N", "SAI"]
    assert not {"started_on", "finished_on", "wall_time"} & set(d)
    assert "split_sizes" not in d and "bias" not in d


def test_render_text():
    text = render_text(finished_run())
    assert text.startswith("capfair evaluate (v%s): Finished successfully\n" % __version__)
    assert "  workers: 2\n" in text
    with open(os.path.join(DATA_DIR, "metric_table.golden.txt"), encoding="utf-8") as fp:
        assert fp.read() in text
    assert "no length penalty" in text
    assert "  SAI: 3 of 103 candidate(s) lie outside the all split\n" in text


def test_render_gender_accuracy_and_bias():
    run = RunReport(command="gender-accuracy", config={})
    run.gender_accuracy = dict(GenderAccuracy(0.75, 0.4, 10, 4, 3).to_dict(), chance_accuracy=0.5, seed=0)
    run.bias = dict(
        table="bias_table.csv",
        n_rows=1,
        min_support=1,
        top_k=20,
        top=[dict(word="shopping", male_count=0, female_count=2, ratio=0.0, support=2)],
    )
    text = render_text(run)
    assert "  accuracy: 0.7500\n" in text
    assert "  coverage: 0.4000\n" in text
    assert "  rows: 1, min_support: 1\n" in text
    assert "shopping     0       2  0.0000        2\n" in text


def test_write_report(cleandir):
    run = finished_run()
    write_report(run, "out")
    assert sorted(os.listdir("out")) == ["report.json", "report.txt", "timing.json"]
    with open("out/report.json") as fp:
        assert json.load(fp) == json.loads(json.dumps(run.to_dict()))
    with open("out/timing.json") as fp:
        timing = json.load(fp)
    assert timing["command"] == "evaluate"
    assert timing["wall_time_seconds"] >= 0
