from capfair import EmptyInputError
from capfair.metrics.ngrams import canonical

BETA = 1.2


def lcs_length(a, b):
    """
    Length of the longest common subsequence of two token sequences.

    >>> lcs_length("a b c d".split(), "a c b d".split())
    3
    >>> lcs_length([], ["a"])
    0
    """
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0] * (len(b) + 1)
        for j, y in enumerate(b, 1):
            cur[j] = prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def rouge_l_f(candidate, reference, beta=BETA):
    lcs = lcs_length(candidate, reference)
    if lcs == 0:
        return 0.0
    rec = lcs / len(reference)
    prec = lcs / len(candidate)
    denom = rec + beta ** 2 * prec
    if denom == 0:
        return 0.0
    return min(1.0, (1 + beta ** 2) * rec * prec / denom)


def rouge_l_pair(pair, beta=BETA):
    """Best F-measure of the candidate against any of its references."""
    return max(rouge_l_f(pair.candidate, ref, beta) for ref in pair.references)


def rouge_l(pairs, beta=BETA):
    """
    Mean over pairs of the per-pair ROUGE-L F-measure.

    >>> from capfair.metrics.ngrams import EvalPair
    >>> round(rouge_l([EvalPair(1, "a b c d".split(), ["a c b d".split()])]), 10)
    0.75
    """
    pairs = canonical(pairs)
    if not pairs:
        raise EmptyInputError("rouge_l needs at least one candidate/reference pair")
    return sum(rouge_l_pair(p, beta) for p in pairs) / len(pairs)
