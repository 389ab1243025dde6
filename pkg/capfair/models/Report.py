"""
Results of a capfair run: metric rows, the gender-accuracy block and the per-command RunReport.
"""
import datetime
import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional, Tuple

from capfair import RunStatus, __version__, signal_run_status_change

METRIC_FIELDS = ("bleu1", "bleu2", "bleu3", "bleu4", "meteor_lite", "rouge_l", "cider")


@dataclass(frozen=True)
class PerImageScore:
    image_id: int
    bleu4: float
    rouge_l: float
    meteor_lite: float
    cider: float


@dataclass(frozen=True)
class MetricReport:
    label: str
    bleu1: float
    bleu2: float
    bleu3: float
    bleu4: float
    rouge_l: float
    meteor_lite: float
    cider: float
    n_images: int
    per_image: Optional[Tuple[PerImageScore, ...]] = None
    cider_variant: str = "CIDEr (original, no length penalty)"
    meteor_label: str = "METEOR-lite"

    def __post_init__(self):
        for name in METRIC_FIELDS:
            v = getattr(self, name)
            hi = 10.0 if name == "cider" else 1.0
            assert 0.0 <= v <= hi, "%s=%r is outside [0, %s]" % (name, v, hi)
        assert self.per_image is None or len(self.per_image) == self.n_images, "per_image rows != n_images"

    def to_dict(self):
        d = OrderedDict(label=self.label, n_images=self.n_images)
        for name in METRIC_FIELDS:
            d[name] = getattr(self, name)
        d["cider_variant"] = self.cider_variant
        d["meteor_label"] = self.meteor_label
        return d


@dataclass(frozen=True)
class GenderAccuracy:
    accuracy: float
    coverage: float
    n_confident: int
    n_predicted: int
    n_correct: int

    def to_dict(self):
        return OrderedDict(
            accuracy=self.accuracy,
            coverage=self.coverage,
            n_confident=self.n_confident,
            n_predicted=self.n_predicted,
            n_correct=self.n_correct,
        )


@signal_run_status_change.connect
def _run_status_changed(run):
    if run.status in [RunStatus.successful, RunStatus.failed]:
        run.finished_on = datetime.datetime.now()
        logfunc = run.log.warning if run.status == RunStatus.failed else run.log.info
        logfunc("%s %s in %s" % (run, run.status, run.wall_time))
    elif run.status == RunStatus.running:
        run.started_on = datetime.datetime.now()
        run.log.info("%s %s, capfair v%s" % (run, run.status, run.version))


@dataclass
class RunReport:
    """
    Everything one command produced.  `to_dict` leaves out the timing so that two runs with the same
    inputs serialize identically; `timing` is written separately.
    """

    command: str
    config: dict
    log: logging.Logger = field(default=logging.getLogger("capfair"), repr=False)
    version: str = __version__
    split_sizes: list = field(default_factory=list)
    metric_rows: list = field(default_factory=list)
    gender_accuracy: Optional[dict] = None
    bias: Optional[dict] = None
    outputs: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    started_on: Optional[datetime.datetime] = None
    finished_on: Optional[datetime.datetime] = None
    _status: RunStatus = RunStatus.no_attempt

    @property
    def status(self):
        return self._status

    @status.setter
    def status(self, value):
        if self._status != value:
            self._status = value
            signal_run_status_change.send(self)

    @property
    def wall_time(self):
        if self.started_on is None:
            return None
        return (self.finished_on or datetime.datetime.now()) - self.started_on

    def note(self, msg):
        self.log.warning(msg)
        self.notes.append(msg)

    def to_dict(self):
        d = OrderedDict()
        d["command"] = self.command
        d["version"] = self.version
        d["status"] = str(self.status)
        d["config"] = self.config
        if self.split_sizes:
            d["split_sizes"] = OrderedDict(self.split_sizes)
        if self.metric_rows:
            d["metrics"] = [r.to_dict() for r in self.metric_rows]
        if self.gender_accuracy is not None:
            d["gender_accuracy"] = self.gender_accuracy
        if self.bias is not None:
            d["bias"] = self.bias
        d["outputs"] = sorted(self.outputs)
        d["notes"] = list(self.notes)
        return d

    def timing(self):
        return OrderedDict(
            command=self.command,
            started_on=self.started_on.isoformat() if self.started_on else None,
            finished_on=self.finished_on.isoformat() if self.finished_on else None,
            wall_time_seconds=self.wall_time.total_seconds() if self.wall_time is not None else None,
        )

    def __repr__(self):
        return "<RunReport %s>" % self.command
