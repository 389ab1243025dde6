import os
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional, Tuple

from capfair import SplitName
from capfair.constants import (
    DEFAULT_MIN_SUPPORT,
    DEFAULT_SEED,
    DEFAULT_TOP_K,
    LEXICON_ENV_VAR,
)

# command -> input flags it cannot run without
REQUIRED_INPUTS = {
    "split": ("annotations",),
    "neutralize": (),
    "recombine": ("candidates", "predictions"),
    "evaluate": ("annotations", "candidates"),
    "bias-report": ("annotations",),
    "gender-accuracy": ("annotations", "predictions"),
}

# commands that honour --split and --neutral
SUBSET_COMMANDS = ("evaluate", "bias-report")


@dataclass(frozen=True)
class RunConfig:
    command: str
    annotations: Optional[str] = None
    lexicon: Optional[str] = None
    candidates: Tuple[Tuple[str, str], ...] = ()
    predictions: Optional[str] = None
    split: str = SplitName.all.value
    neutral: bool = False
    min_support: int = DEFAULT_MIN_SUPPORT
    top_k: int = DEFAULT_TOP_K
    out: str = "capfair_out"
    workers: int = 1
    seed: int = DEFAULT_SEED
    environ: dict = field(default_factory=lambda: dict(os.environ), repr=False, compare=False)

    def __post_init__(self):
        assert self.command in REQUIRED_INPUTS, "unknown command `%s`" % self.command
        object.__setattr__(self, "candidates", tuple(tuple(c) for c in self.candidates))

    @classmethod
    def from_args(cls, args, environ=None):
        return cls(
            command=args.command,
            annotations=args.annotations,
            lexicon=args.lexicon,
            candidates=args.candidates,
            predictions=args.predictions,
            split=args.split,
            neutral=args.neutral,
            min_support=args.min_support,
            top_k=args.top_k,
            out=args.out,
            workers=args.workers,
            seed=args.seed,
            environ=dict(os.environ if environ is None else environ),
        )

    @property
    def lexicon_path(self):
        """--lexicon, else $CAPFAIR_LEXICON, else None for the built-in lexicon."""
        return self.lexicon or self.environ.get(LEXICON_ENV_VAR) or None

    def problems(self):
        """Yields a message for every missing input, unreadable path or clashing label."""
        for name in REQUIRED_INPUTS[self.command]:
            if not getattr(self, name):
                yield "%s requires --%s" % (self.command, name)
        if self.command == "neutralize" and not (self.annotations or self.candidates):
            yield "neutralize requires --annotations and/or --candidates"
        if self.command not in SUBSET_COMMANDS:
            if self.split != SplitName.all.value:
                yield "--split is only accepted by %s" % " and ".join(SUBSET_COMMANDS)
            if self.neutral:
                yield "--neutral is only accepted by %s" % " and ".join(SUBSET_COMMANDS)

        paths = [("--annotations", self.annotations), ("--predictions", self.predictions)]
        paths += [("--candidates %s" % label, path) for label, path in self.candidates]
        if self.lexicon_path:
            paths.append(("--lexicon" if self.lexicon else "$%s" % LEXICON_ENV_VAR, self.lexicon_path))
        for flag, path in paths:
            if path and not os.path.isfile(path):
                yield "%s: no such file: %s" % (flag, path)

        labels = [label for label, _ in self.candidates]
        clashes = sorted({label for label in labels if labels.count(label) > 1})
        if clashes:
            yield "duplicate candidate label(s): %s" % ", ".join(clashes)
        if os.path.exists(self.out) and not os.path.isdir(self.out):
            yield "--out %s exists and is not a directory" % self.out

    def to_dict(self):
        return OrderedDict(
            command=self.command,
            annotations=self.annotations,
            lexicon=self.lexicon_path or "default",
            candidates=["%s=%s" % c for c in self.candidates],
            predictions=self.predictions,
            split=self.split,
            neutral=self.neutral,
            min_support=self.min_support,
            top_k=self.top_k,
            out=self.out,
            workers=self.workers,
            seed=self.seed,
        )
