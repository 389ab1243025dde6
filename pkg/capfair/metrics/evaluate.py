import csv
import logging
import os

from capfair import EmptyInputError, OutputError, UnknownImageError
from capfair.core.transform import neutralize
from capfair.lexicon.tokenize import norms
from capfair.metrics.bleu import bleu, bleu_pair
from capfair.metrics.cider import VARIANT, CiderScorer
from capfair.metrics.meteor import LABEL, meteor_pair
from capfair.metrics.ngrams import EvalPair, canonical
from capfair.metrics.rouge import rouge_l_pair
from capfair.models.Corpus import CandidateCaptionFile, Corpus
from capfair.models.Lexicon import Lexicon
from capfair.models.Report import MetricReport, PerImageScore
from capfair.util.helpers import mkdir
from capfair.util.parallel import parallel_map

log = logging.getLogger(__name__)

PER_IMAGE_HEADER = ("image_id", "bleu4", "rouge_l", "meteor_lite", "cider_pair")


def build_eval_pairs(
    candidates: CandidateCaptionFile, corpus: Corpus, neutral_mode=False, lexicon: Lexicon = None
):
    """
    Pairs every candidate caption with the reference captions of its image.  In neutral mode both
    sides are neutralized first, so gender words no longer count towards n-gram overlap.

    >>> from capfair.lexicon import default_lexicon
    >>> from capfair.models.Corpus import ImageRecord
    >>> corpus = Corpus([ImageRecord(1, "", ("a woman cooking",))])
    >>> cands = CandidateCaptionFile({1: "a man cooking"})
    >>> build_eval_pairs(cands, corpus, True, default_lexicon())[0].candidate
    ('a', 'person', 'cooking')
    >>> build_eval_pairs(cands, corpus)[0].references
    (('a', 'woman', 'cooking'),)
    """
    assert lexicon is not None or not neutral_mode, "neutral_mode needs a lexicon"
    unknown = [image_id for image_id in candidates.image_ids if image_id not in corpus]
    if unknown:
        raise UnknownImageError(unknown, context="candidates `%s`" % candidates.label)

    if neutral_mode:

        def to_tokens(text):
            return neutralize(lexicon, text).norms

    else:
        to_tokens = norms

    return [
        EvalPair(image_id, to_tokens(caption), tuple(to_tokens(ref) for ref in corpus.get(image_id).captions))
        for image_id, caption in candidates
    ]


def evaluate(pairs, workers=1, per_image=True, label=""):
    """
    Runs every metric over the pairs.

    >>> pairs = [EvalPair(i, "a dog runs on grass".split(), ["a dog runs on grass".split()]) for i in (1, 2)]
    >>> r = evaluate(pairs)
    >>> r.bleu1, r.bleu4, r.rouge_l, r.n_images
    (1.0, 1.0, 1.0, 2)
    """
    pairs = canonical(pairs)
    if not pairs:
        raise EmptyInputError("nothing to evaluate: %s has no candidate/reference pairs" % (label or "input"))

    bleus = [bleu(pairs, n) for n in (1, 2, 3, 4)]
    rouge = parallel_map(rouge_l_pair, pairs, workers=workers)
    meteor = parallel_map(meteor_pair, pairs, workers=workers)
    cider, cider_per_pair = CiderScorer(pairs).compute_score(workers)

    rows = None
    if per_image:
        bleu4 = parallel_map(bleu_pair, pairs, workers=workers)
        rows = tuple(
            PerImageScore(p.image_id, b, r, m, 10.0 * c)
            for p, b, r, m, c in zip(pairs, bleu4, rouge, meteor, cider_per_pair)
        )

    report = MetricReport(
        label=label,
        bleu1=bleus[0],
        bleu2=bleus[1],
        bleu3=bleus[2],
        bleu4=bleus[3],
        rouge_l=sum(rouge) / len(rouge),
        meteor_lite=sum(meteor) / len(meteor),
        cider=float(cider),
        n_images=len(pairs),
        per_image=rows,
        cider_variant=VARIANT,
        meteor_label=LABEL,
    )
    log.info("evaluated %s on %d images", label or "candidates", len(pairs))
    return report


def write_per_image_csv(report: MetricReport, path):
    assert report.per_image is not None, "%s was evaluated without per-image scores" % report.label
    try:
        mkdir(os.path.dirname(path))
        with open(path, "w", encoding="utf-8", newline="") as fp:
            w = csv.writer(fp, lineterminator="\n")
            w.writerow(PER_IMAGE_HEADER)
            for s in report.per_image:
                scores = (s.bleu4, s.rouge_l, s.meteor_lite, s.cider)
                w.writerow((s.image_id,) + tuple("%.6f" % v for v in scores))
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))
