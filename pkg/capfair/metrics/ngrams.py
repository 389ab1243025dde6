from collections import Counter
from dataclasses import dataclass
from typing import Tuple

MAX_N = 4


@dataclass(frozen=True)
class EvalPair:
    """One candidate caption and its references, all as normalized token sequences."""

    image_id: int
    candidate: Tuple[str, ...]
    references: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "candidate", tuple(self.candidate))
        object.__setattr__(self, "references", tuple(tuple(r) for r in self.references))
        assert len(self.references) >= 1, "image %s: an EvalPair needs at least one reference" % self.image_id


def ngram_counts(words, n):
    """
    Counts of the n-grams (tuples of n words) of a token sequence.

    >>> sorted(ngram_counts(("a", "b", "a", "b"), 2).items())
    [(('a', 'b'), 2), (('b', 'a'), 1)]
    >>> ngram_counts(("a",), 2)
    Counter()
    """
    assert 1 <= n <= MAX_N, "n-gram length must lie in [1, %d]" % MAX_N
    return Counter(tuple(words[i : i + n]) for i in range(len(words) - n + 1))


def canonical(pairs):
    """
    Pairs in a fixed order (image_id, then content) with references sorted, so that corpus scores
    are bitwise independent of input order.
    """
    return sorted(
        (EvalPair(p.image_id, p.candidate, tuple(sorted(p.references))) for p in pairs),
        key=lambda p: (p.image_id, p.candidate, p.references),
    )
