"""
The ``capfair`` command line.

Every command writes its outputs under ``--out`` with fixed names, plus report.json, report.txt,
run.log and timing.json.
"""
import argparse
import csv
import sys

from decorator import decorator

from capfair import CapfairError, OutputError, RunStatus, __version__, opj
from capfair.constants import (
    BIAS_TABLE_FILE,
    GENDER_ACCURACY_FILE,
    LOG_FILE,
    NEUTRAL_CANDIDATES_FILE,
    NEUTRAL_CORPUS_FILE,
    NEUTRALIZE_AUDIT_FILE,
    PER_IMAGE_FILE,
    RECOMBINE_AUDIT_FILE,
    SAI_CANDIDATES_FILE,
    SPLIT_FILE,
    SPLITS_SUMMARY_FILE,
)
from capfair.core.bias_stats import cooccurrence_table, top_k, write_bias_csv
from capfair.core.splitter import build_splits, export_split, split_ids
from capfair.core.transform import (
    neutralize,
    neutralize_audit_rows,
    neutralize_candidates,
    neutralize_corpus,
    recombine_audit_rows,
    sai_pipeline,
)
from capfair.corpus_io import (
    load_candidates,
    load_coco_annotations,
    load_gender_predictions,
    write_candidates,
    write_corpus,
)
from capfair.lexicon import default_lexicon, load_lexicon
from capfair.metrics.evaluate import build_eval_pairs, evaluate, write_per_image_csv
from capfair.metrics.gender_accuracy import gender_accuracy, random_predictions
from capfair.models.Report import RunReport
from capfair.models.RunConfig import RunConfig
from capfair.report.writer import write_report
from capfair.util.args import add_input_args, add_run_args, get_last_cmd_executed
from capfair.util.helpers import detach_file_handlers, dump_json, get_logger, mkdir

AUDIT_HEADER = ("source", "image_id", "caption_index", "position", "original", "replacement")

OUTPUTS_HELP = """
output files (under --out):
  split            split_confident.json, split_human.json, split_nature.json, splits.json
  neutralize       neutral_corpus.json, neutral_<label>.json, neutralize_audit.tsv
  recombine        sai_<label>.json, recombine_audit.tsv
  evaluate         per_image_<label>.csv
  bias-report      bias_table.csv
  gender-accuracy  gender_accuracy.json
  every command    report.json, report.txt, run.log, timing.json
"""


@decorator
def capfair_command(fxn, config, run):
    """
    Runs a command inside a RunReport: logs to <out>/run.log, tracks the run status and writes the
    reports when the command succeeds.
    """
    try:
        mkdir(config.out)
    except OSError as e:
        raise OutputError(config.out, e.strerror or str(e))

    log = get_logger("capfair", opj(config.out, LOG_FILE))
    run = RunReport(command=config.command, config=config.to_dict(), log=log)
    try:
        log.debug("command line: %s", get_last_cmd_executed())
        run.status = RunStatus.running
        try:
            fxn(config, run)
        except CapfairError as e:
            log.error(str(e))
            run.status = RunStatus.failed
            raise
        except BaseException:
            log.exception("%s aborted by an unexpected error", config.command)
            run.status = RunStatus.failed
            raise
        run.status = RunStatus.successful
        write_report(run, config.out)
    finally:
        detach_file_handlers(log)
    return run


def _lexicon(config):
    path = config.lexicon_path
    return load_lexicon(path) if path else default_lexicon()


def _output(run, config, name):
    run.outputs.append(name)
    return opj(config.out, name)


def _write_tsv(path, header, rows):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            w = csv.writer(fp, delimiter="\t", lineterminator="\n")
            w.writerow(header)
            n = 0
            for row in rows:
                w.writerow(row)
                n += 1
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))
    return n


def _restrict_to_split(config, run, corpus, lexicon):
    """The corpus restricted to --split; the split sizes are recorded when a split was requested."""
    if config.split == "all":
        return corpus
    splits = build_splits(lexicon, corpus, config.workers)
    run.split_sizes = splits.summary()
    label = "%s:%s" % (corpus.source_label, config.split)
    return corpus.subset(split_ids(splits, config.split), source_label=label)


@capfair_command
def cmd_split(config, run=None):
    lexicon = _lexicon(config)
    corpus = load_coco_annotations(config.annotations)
    splits = build_splits(lexicon, corpus, config.workers)
    for name in ("confident", "human", "nature"):
        export_split(splits, name, corpus, _output(run, config, SPLIT_FILE.format(name=name)))
    path = _output(run, config, SPLITS_SUMMARY_FILE)
    try:
        with open(path, "w", encoding="utf-8") as fp:
            dump_json(splits.to_dict(), fp)
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))
    run.split_sizes = splits.summary()


@capfair_command
def cmd_neutralize(config, run=None):
    lexicon = _lexicon(config)
    audit = []

    if config.annotations:
        corpus = load_coco_annotations(config.annotations)
        neutral = neutralize_corpus(lexicon, corpus, config.workers)
        write_corpus(neutral, _output(run, config, NEUTRAL_CORPUS_FILE))
        for record in corpus:
            for i, caption in enumerate(record.captions):
                rows = neutralize_audit_rows(record.image_id, i, neutralize(lexicon, caption))
                audit += [("corpus",) + row for row in rows]

    for label, path in config.candidates:
        candidates = load_candidates(path, label)
        write_candidates(
            neutralize_candidates(lexicon, candidates),
            _output(run, config, NEUTRAL_CANDIDATES_FILE.format(label=label)),
        )
        for image_id, caption in candidates:
            rows = neutralize_audit_rows(image_id, 0, neutralize(lexicon, caption))
            audit += [(label,) + row for row in rows]

    n = _write_tsv(_output(run, config, NEUTRALIZE_AUDIT_FILE), AUDIT_HEADER, audit)
    run.log.info("neutralized %d gender word(s)", n)


@capfair_command
def cmd_recombine(config, run=None):
    lexicon = _lexicon(config)
    predictions = load_gender_predictions(config.predictions)
    audit = []
    for label, path in config.candidates:
        candidates = load_candidates(path, label)
        sai = sai_pipeline(lexicon, candidates, predictions)
        write_candidates(sai, _output(run, config, SAI_CANDIDATES_FILE.format(label=label)))
        for image_id, caption in candidates:
            gender = predictions.label_for(image_id)
            rows = recombine_audit_rows(lexicon, image_id, neutralize(lexicon, caption), gender)
            audit += [(label,) + row for row in rows]
    n = _write_tsv(_output(run, config, RECOMBINE_AUDIT_FILE), AUDIT_HEADER, audit)
    run.log.info("recombined %d neutral word(s)", n)


@capfair_command
def cmd_evaluate(config, run=None):
    lexicon = _lexicon(config)
    corpus = load_coco_annotations(config.annotations)
    keep = set(_restrict_to_split(config, run, corpus, lexicon).image_ids)

    for label, path in config.candidates:
        candidates = load_candidates(path, label)
        pairs = build_eval_pairs(candidates, corpus, config.neutral, lexicon)
        pairs = [p for p in pairs if p.image_id in keep]
        row_label = label + "-N" if config.neutral else label
        report = evaluate(pairs, workers=config.workers, per_image=True, label=row_label)
        if len(pairs) < len(candidates):
            run.note(
                "%s: %d of %d candidate(s) lie outside the %s split"
                % (row_label, len(candidates) - len(pairs), len(candidates), config.split)
            )
        write_per_image_csv(report, _output(run, config, PER_IMAGE_FILE.format(label=row_label)))
        run.metric_rows.append(report)


@capfair_command
def cmd_bias_report(config, run=None):
    lexicon = _lexicon(config)
    corpus = _restrict_to_split(config, run, load_coco_annotations(config.annotations), lexicon)
    if config.neutral:
        corpus = neutralize_corpus(lexicon, corpus, config.workers)

    rows = cooccurrence_table(lexicon, corpus, config.min_support, config.workers)
    write_bias_csv(rows, _output(run, config, BIAS_TABLE_FILE))
    if not rows:
        run.note(
            "the co-occurrence table is empty: no word reaches min_support=%d with a gendered caption"
            % config.min_support
        )
    run.bias = dict(
        table=BIAS_TABLE_FILE,
        n_rows=len(rows),
        min_support=config.min_support,
        top_k=config.top_k,
        top=[r.to_dict() for r in top_k(rows, config.top_k)],
    )


@capfair_command
def cmd_gender_accuracy(config, run=None):
    lexicon = _lexicon(config)
    splits = build_splits(lexicon, load_coco_annotations(config.annotations), config.workers)
    run.split_sizes = splits.summary()

    measured = gender_accuracy(load_gender_predictions(config.predictions), splits)
    chance = gender_accuracy(random_predictions(splits.confident, config.seed), splits)
    block = measured.to_dict()
    block["chance_accuracy"] = chance.accuracy
    block["seed"] = config.seed
    run.gender_accuracy = block

    path = _output(run, config, GENDER_ACCURACY_FILE)
    try:
        with open(path, "w", encoding="utf-8") as fp:
            block = dict(measured=measured.to_dict(), chance_baseline=chance.to_dict(), seed=config.seed)
            dump_json(block, fp)
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))


COMMANDS = {
    "split": (cmd_split, "Build and export the confident, human and nature subsets"),
    "neutralize": (cmd_neutralize, "Replace gender words with person / people in corpora or candidate files"),
    "recombine": (cmd_recombine, "Recombine neutral candidates with per-image gender predictions (SAI)"),
    "evaluate": (cmd_evaluate, "Score candidate captions with BLEU-1..4, METEOR-lite, ROUGE-L and CIDEr"),
    "bias-report": (cmd_bias_report, "Gender / word co-occurrence bias table"),
    "gender-accuracy": (cmd_gender_accuracy, "Score gender predictions against the confident split"),
}


def get_parser():
    parser = argparse.ArgumentParser(
        prog="capfair",
        description="Gender fairness toolkit for image caption corpora",
        epilog=OUTPUTS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sps = parser.add_subparsers(dest="command", title="commands", metavar="COMMAND")
    sps.required = True
    for name, (_, description) in COMMANDS.items():
        sp = sps.add_parser(
            name,
            help=description,
            description=description,
            epilog=OUTPUTS_HELP,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        add_input_args(sp)
        add_run_args(sp)
    return parser


def main(argv=None, environ=None):
    """Returns the exit status; argparse exits with 2 on usage errors."""
    parser = get_parser()
    args = parser.parse_args(argv)
    config = RunConfig.from_args(args, environ)
    for problem in config.problems():
        parser.error(problem)

    try:
        COMMANDS[config.command][0](config)
    except CapfairError as e:
        print("capfair %s: error: %s" % (config.command, e), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
