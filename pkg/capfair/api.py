from capfair import (
    CapfairError,
    GenderClass,
    GenderLabel,
    RunStatus,
    SplitName,
    Verdict,
    signal_run_status_change,
)
from capfair.core.bias_stats import BiasRow, compare_bias, cooccurrence_table, top_k, write_bias_csv
from capfair.core.splitter import build_splits, consensus, export_split, split_ids
from capfair.core.transform import (
    NeutralCaption,
    neutralize,
    neutralize_candidates,
    neutralize_corpus,
    recombine,
    sai_pipeline,
    swap_gender,
)
from capfair.corpus_io import (
    load_candidates,
    load_coco_annotations,
    load_gender_predictions,
    write_candidates,
    write_corpus,
    write_predictions,
)
from capfair.lexicon import classify, default_lexicon, load_lexicon, render, tokenize
from capfair.metrics import (
    EvalPair,
    bleu,
    build_eval_pairs,
    cider,
    evaluate,
    gender_accuracy,
    meteor_lite,
    random_predictions,
    rouge_l,
)
from capfair.models.Corpus import CandidateCaptionFile, Corpus, GenderPredictionFile, ImageRecord, Prediction
from capfair.models.Lexicon import Lexicon
from capfair.models.Report import GenderAccuracy, MetricReport, RunReport
from capfair.models.Splits import SplitAssignment
from capfair.report import render_metric_table
