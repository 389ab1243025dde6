"""
Corpus-level BLEU (modified n-gram precision with brevity penalty), without smoothing.
"""
import math
from collections import Counter

from capfair import EmptyInputError
from capfair.metrics.ngrams import MAX_N, canonical, ngram_counts


def closest_ref_length(candidate_length, ref_lengths):
    """
    The reference length closest to the candidate's; ties go to the shorter reference.

    >>> closest_ref_length(5, [3, 7, 9])
    3
    >>> closest_ref_length(5, [6, 4])
    4
    """
    return min(ref_lengths, key=lambda length: (abs(length - candidate_length), length))


def clipped_matches(candidate, references, n):
    """(clipped match count, candidate n-gram count) of one pair for n-grams of length n."""
    counts = ngram_counts(candidate, n)
    max_ref = Counter()
    for ref in references:
        for gram, count in ngram_counts(ref, n).items():
            max_ref[gram] = max(max_ref[gram], count)
    return sum(min(count, max_ref[gram]) for gram, count in counts.items()), sum(counts.values())


def bleu(pairs, max_n=MAX_N):
    """
    Corpus BLEU-`max_n`.  Any zero n-gram precision yields 0.

    >>> from capfair.metrics.ngrams import EvalPair
    >>> round(bleu([EvalPair(1, "the cat sat".split(), ["the cat sat down".split()])], 1), 4)
    0.7165
    >>> bleu([EvalPair(1, "a b".split(), ["a b".split()])], 2)
    1.0
    """
    if not 1 <= max_n <= MAX_N:
        raise ValueError("max_n must lie in [1, %d], got %r" % (MAX_N, max_n))
    pairs = canonical(pairs)
    if not pairs:
        raise EmptyInputError("bleu needs at least one candidate/reference pair")

    matches = [0] * max_n
    totals = [0] * max_n
    c = r = 0
    for p in pairs:
        c += len(p.candidate)
        r += closest_ref_length(len(p.candidate), [len(ref) for ref in p.references])
        for k in range(max_n):
            m, t = clipped_matches(p.candidate, p.references, k + 1)
            matches[k] += m
            totals[k] += t

    if any(m == 0 for m in matches):
        return 0.0
    log_precision = sum(math.log(m / t) for m, t in zip(matches, totals)) / max_n
    bp = 1.0 if c > r else math.exp(1 - r / c)
    return min(1.0, bp * math.exp(log_precision))


def bleu_pair(pair, max_n=MAX_N):
    """Sentence-level BLEU of a single pair (the same formula on a one-pair corpus)."""
    return bleu([pair], max_n)
