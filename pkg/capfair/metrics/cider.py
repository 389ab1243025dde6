"""
CIDEr: tf-idf weighted n-gram cosine similarity between a candidate and its references.

This is the original formulation (no Gaussian length penalty, no count clipping, i.e. not CIDEr-D).
Document frequencies are computed over the reference sets of the pairs being scored.
"""
from collections import Counter

import numpy as np

from capfair import EmptyInputError
from capfair.metrics.ngrams import MAX_N, canonical, ngram_counts
from capfair.util.parallel import parallel_map

SCALE = 10.0
VARIANT = "CIDEr (original, no length penalty)"


def document_frequencies(pairs, n):
    """Number of pairs whose reference set contains each n-gram."""
    df = Counter()
    for p in pairs:
        grams = set()
        for ref in p.references:
            grams.update(ngram_counts(ref, n))
        df.update(grams)
    return df


def tfidf_vector(words, n, df, log_n_docs):
    return {
        gram: tf * (log_n_docs - np.log(float(max(1, df.get(gram, 0)))))
        for gram, tf in ngram_counts(words, n).items()
    }


def cosine(x, y):
    """
    Cosine similarity of two sparse vectors; 0 when either vector is zero.

    >>> cosine({"a": 1.0, "b": 2.0}, {"a": 2.0, "b": 4.0})
    1.0
    >>> cosine({"a": 1.0}, {})
    0.0
    """
    norm_x = np.sqrt(sum(v * v for v in x.values()))
    norm_y = np.sqrt(sum(v * v for v in y.values()))
    if norm_x == 0 or norm_y == 0:
        return 0.0
    dot = sum(v * y[k] for k, v in x.items() if k in y)
    return float(min(1.0, max(0.0, dot / (norm_x * norm_y))))


class CiderScorer(object):
    """
    Holds the document frequencies of a set of pairs and scores pairs against them.
    """

    def __init__(self, pairs, n=MAX_N):
        self.pairs = canonical(pairs)
        if not self.pairs:
            raise EmptyInputError("cider needs at least one candidate/reference pair")
        self.n = n
        self.log_n_docs = np.log(float(len(self.pairs)))
        self.df = [document_frequencies(self.pairs, k) for k in range(1, n + 1)]

    def score_pair(self, pair):
        """Pair score in [0, 1]: mean over n-gram orders of the mean cosine to each reference."""
        total = 0.0
        for k in range(1, self.n + 1):
            df = self.df[k - 1]
            vec = tfidf_vector(pair.candidate, k, df, self.log_n_docs)
            sims = [cosine(vec, tfidf_vector(ref, k, df, self.log_n_docs)) for ref in pair.references]
            total += sum(sims) / len(sims)
        return total / self.n

    def compute_score(self, workers=1):
        """(corpus score in [0, 10], per-pair scores in canonical pair order)"""
        scores = parallel_map(self.score_pair, self.pairs, workers=workers)
        return SCALE * sum(scores) / len(scores), scores


def cider(pairs, workers=1):
    """
    >>> from capfair.metrics.ngrams import EvalPair
    >>> cider([EvalPair(1, "a cat".split(), ["a cat".split()])])
    0.0
    """
    score, _ = CiderScorer(pairs).compute_score(workers)
    return float(score)


def cider_pairs(pairs, workers=1):
    """Per-pair CIDEr on the 0..10 scale, keyed by image_id."""
    scorer = CiderScorer(pairs)
    _, scores = scorer.compute_score(workers)
    return {p.image_id: SCALE * s for p, s in zip(scorer.pairs, scores)}
