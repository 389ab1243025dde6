import multiprocessing
import os

REPO_DIR = os.path.split(os.path.dirname(os.path.abspath(__file__)))[0]
MAX_CORES = max(1, multiprocessing.cpu_count())

LEXICON_ENV_VAR = "CAPFAIR_LEXICON"

DEFAULT_MIN_SUPPORT = 5
DEFAULT_TOP_K = 20
DEFAULT_SEED = 0

# fixed output file names, relative to --out
SPLIT_FILE = "split_{name}.json"
SPLITS_SUMMARY_FILE = "splits.json"
NEUTRAL_CORPUS_FILE = "neutral_corpus.json"
NEUTRAL_CANDIDATES_FILE = "neutral_{label}.json"
NEUTRALIZE_AUDIT_FILE = "neutralize_audit.tsv"
SAI_CANDIDATES_FILE = "sai_{label}.json"
RECOMBINE_AUDIT_FILE = "recombine_audit.tsv"
PER_IMAGE_FILE = "per_image_{label}.csv"
BIAS_TABLE_FILE = "bias_table.csv"
GENDER_ACCURACY_FILE = "gender_accuracy.json"
REPORT_JSON_FILE = "report.json"
REPORT_TXT_FILE = "report.txt"
LOG_FILE = "run.log"
TIMING_FILE = "timing.json"
