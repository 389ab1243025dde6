"""
METEOR-lite: unigram alignment by exact match, then by Porter stem, with a fragmentation penalty.

There are no synonym or paraphrase stages, so scores are not comparable to the official METEOR tool.

Among the maximal two-stage alignments the one with the fewest chunks is chosen by an exact,
memoized depth-first search.  Pathological inputs (many repeated words) that exhaust the search
budget fall back to a greedy left-to-right alignment, which has the same number of matches but may
have more chunks.
"""
import functools
import logging
from collections import Counter

from nltk.stem.porter import PorterStemmer

from capfair import EmptyInputError
from capfair.metrics.ngrams import canonical
from capfair.util.parallel import parallel_map

log = logging.getLogger(__name__)

LABEL = "METEOR-lite"
ALPHA = 0.9
BETA = 3.0
GAMMA = 0.5
SEARCH_BUDGET = 50000

_stemmer = PorterStemmer()


@functools.lru_cache(maxsize=1 << 16)
def stem(word):
    """
    >>> stem("running"), stem("runs")
    ('run', 'run')
    """
    return _stemmer.stem(word)


class _BudgetExceeded(Exception):
    pass


def count_chunks(alignment):
    """
    Number of runs of matches that are adjacent in both the candidate and the reference.

    >>> count_chunks([(0, 0), (1, 1), (3, 2)])
    2
    >>> count_chunks([])
    0
    """
    chunks = 0
    prev = None
    for i, j in sorted(alignment):
        if prev is None or (i, j) != (prev[0] + 1, prev[1] + 1):
            chunks += 1
        prev = (i, j)
    return chunks


def greedy_alignment(candidate, reference, cand_stems, ref_stems):
    """Exact stage then stem stage, each candidate word taking the first free reference position."""
    used = set()
    alignment = {}
    for keys_c, keys_r in ((candidate, reference), (cand_stems, ref_stems)):
        for i, key in enumerate(keys_c):
            if i in alignment:
                continue
            prev = alignment.get(i - 1)
            free = [j for j, k in enumerate(keys_r) if k == key and j not in used]
            if free:
                j = prev + 1 if prev is not None and prev + 1 in free else free[0]
                alignment[i] = j
                used.add(j)
    return sorted(alignment.items())


def _min_chunks(candidate, reference, cand_stems, ref_stems, budget):
    """
    Fewest chunks over the alignments matching min(count) of every word exactly and min(count) of
    every stem overall.  These are exactly the maximal two-stage alignments.
    """
    word_need = Counter(candidate) & Counter(reference)
    stem_need = Counter(cand_stems) & Counter(ref_stems)
    words = sorted(word_need)
    stems = sorted(stem_need)
    w_idx = {w: k for k, w in enumerate(words)}
    s_idx = {s: k for k, s in enumerate(stems)}

    n = len(candidate)
    options = [[j for j, s in enumerate(ref_stems) if s == cand_stems[i]] for i in range(n)]
    # occurrences of each word / stem strictly after position i
    words_after = [Counter(candidate[i + 1 :]) for i in range(n)]
    stems_after = [Counter(cand_stems[i + 1 :]) for i in range(n)]

    memo = {}
    nodes = [0]
    inf = float("inf")

    def decrement(counts, k):
        return counts[:k] + (counts[k] - 1,) + counts[k + 1 :]

    def search(i, used, prev, w_left, s_left):
        if i == n:
            return 0 if not any(w_left) and not any(s_left) else inf
        key = (i, used, prev, w_left, s_left)
        if key in memo:
            return memo[key]
        nodes[0] += 1
        if nodes[0] > budget:
            raise _BudgetExceeded()

        word, st = candidate[i], cand_stems[i]
        best = inf
        s = s_idx.get(st)
        w = w_idx.get(word)
        can_skip = (s is None or stems_after[i][st] >= s_left[s]) and (
            w is None or words_after[i][word] >= w_left[w]
        )
        if can_skip:
            best = search(i + 1, used, None, w_left, s_left)
        if s is not None and s_left[s] > 0:
            for j in options[i]:
                if used >> j & 1:
                    continue
                exact = reference[j] == word
                if exact and w_left[w] == 0:
                    continue
                cost = 0 if prev is not None and j == prev + 1 else 1
                rest = search(
                    i + 1,
                    used | (1 << j),
                    j,
                    decrement(w_left, w) if exact else w_left,
                    decrement(s_left, s),
                )
                best = min(best, cost + rest)
        memo[key] = best
        return best

    return search(0, 0, None, tuple(word_need[w] for w in words), tuple(stem_need[s] for s in stems))


def align(candidate, reference, budget=SEARCH_BUDGET):
    """
    (matches, chunks) of the best alignment of two normalized token sequences.

    >>> align("the cat sat on the mat".split(), "on the mat the cat sat".split())
    (6, 2)
    >>> align(["running"], ["runs"])
    (1, 1)
    """
    candidate, reference = tuple(candidate), tuple(reference)
    cand_stems = tuple(stem(w) for w in candidate)
    ref_stems = tuple(stem(w) for w in reference)
    m = sum((Counter(cand_stems) & Counter(ref_stems)).values())
    if m == 0:
        return 0, 0
    try:
        chunks = _min_chunks(candidate, reference, cand_stems, ref_stems, budget)
    except _BudgetExceeded:
        log.debug("alignment search budget exceeded for %r, using greedy alignment", " ".join(candidate))
        chunks = count_chunks(greedy_alignment(candidate, reference, cand_stems, ref_stems))
    assert chunks != float("inf"), "no maximal alignment found for %r / %r" % (candidate, reference)
    return m, int(chunks)


def meteor_score(candidate, reference):
    """
    >>> round(meteor_score("a b c".split(), "a b c".split()), 4)
    0.9815
    >>> meteor_score(["a"], ["b"])
    0.0
    """
    if not candidate or not reference:
        return 0.0
    m, chunks = align(candidate, reference)
    if m == 0:
        return 0.0
    precision = m / len(candidate)
    recall = m / len(reference)
    f_mean = precision * recall / (ALPHA * precision + (1 - ALPHA) * recall)
    penalty = GAMMA * (chunks / m) ** BETA
    return min(1.0, max(0.0, f_mean * (1 - penalty)))


def meteor_pair(pair):
    return max(meteor_score(pair.candidate, ref) for ref in pair.references)


def meteor_lite(pairs, workers=1):
    """Mean over pairs of the best score against any reference."""
    pairs = canonical(pairs)
    if not pairs:
        raise EmptyInputError("meteor_lite needs at least one candidate/reference pair")
    scores = parallel_map(meteor_pair, pairs, workers=workers)
    return sum(scores) / len(scores)
