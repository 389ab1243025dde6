from capfair.metrics.bleu import bleu, bleu_pair
from capfair.metrics.cider import cider, cider_pairs
from capfair.metrics.evaluate import build_eval_pairs, evaluate, write_per_image_csv
from capfair.metrics.gender_accuracy import gender_accuracy, oracle_predictions, random_predictions
from capfair.metrics.meteor import meteor_lite, meteor_pair
from capfair.metrics.ngrams import EvalPair
from capfair.metrics.rouge import lcs_length, rouge_l, rouge_l_pair
