import argparse
import os
import re
import sys

from capfair import SplitName
from capfair.constants import DEFAULT_MIN_SUPPORT, DEFAULT_SEED, DEFAULT_TOP_K, MAX_CORES

LABEL_RE = re.compile(r"^[A-Za-z0-9_.+-]+$")


def get_last_cmd_executed():
    cmd_args = [a if " " not in a else "'" + a + "'" for a in sys.argv[1:]]
    return " ".join([sys.argv[0]] + cmd_args)


def candidate_arg(value):
    """
    Parses LABEL=PATH; a bare PATH is labeled with its file name minus the extension.

    >>> candidate_arg("SAT=out/sat.json")
    ('SAT', 'out/sat.json')
    >>> candidate_arg("out/sai.json")
    ('sai', 'out/sai.json')
    """
    if "=" in value:
        label, path = value.split("=", 1)
    else:
        path = value
        label = os.path.splitext(os.path.basename(value))[0]
    if not LABEL_RE.match(label):
        raise argparse.ArgumentTypeError("invalid candidate label `%s`, use letters, digits and _.+-" % label)
    if not path:
        raise argparse.ArgumentTypeError("missing path in `%s`" % value)
    return label, path


def positive_int(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got `%s`" % value)
    if n < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1, got %d" % n)
    return n


def add_input_args(p):
    p.add_argument("--annotations", "-a", help="MSCOCO-style caption annotation file (JSON)")
    p.add_argument(
        "--lexicon",
        "-l",
        help="Lexicon config file (INI).  Defaults to $CAPFAIR_LEXICON, else the built-in lexicon",
    )
    p.add_argument(
        "--candidates",
        nargs="+",
        type=candidate_arg,
        default=[],
        metavar="LABEL=PATH",
        help="Candidate caption files, one caption per image, labeled for the report (e.g. SAT=sat.json)",
    )
    p.add_argument("--predictions", "-p", help="Per-image gender prediction file (JSON, or CSV by extension)")
    p.add_argument(
        "--split",
        choices=[s.value for s in SplitName],
        default=SplitName.all.value,
        help="Restrict the command to one evaluation subset",
    )
    p.add_argument(
        "--neutral",
        action="store_true",
        help="Neutralize gender words on both sides before scoring / counting (the -N protocol)",
    )


def add_run_args(p):
    p.add_argument(
        "--min-support",
        "--min_support",
        type=positive_int,
        default=DEFAULT_MIN_SUPPORT,
        help="Drop bias rows with fewer gendered images than this",
    )
    p.add_argument(
        "--top-k", "--top_k", type=positive_int, default=DEFAULT_TOP_K, help="Bias rows shown in the report"
    )
    p.add_argument("--out", "-o", default="capfair_out", help="Output directory, created if absent")
    p.add_argument(
        "--workers",
        "-w",
        type=positive_int,
        default=MAX_CORES,
        help="Maximum number of worker threads.  Defaults to all cores (%(default)s)",
    )
    p.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="Seed of the chance baseline for gender accuracy"
    )
