"""
Gender / word co-occurrence statistics over a caption corpus.

Counting is per image: a word counts once for an image if any caption of that image contains both the
word and a male (resp. female) word.
"""
import csv
import logging
import os
from collections import Counter
from dataclasses import dataclass

from capfair import OutputError
from capfair.constants import DEFAULT_MIN_SUPPORT, DEFAULT_TOP_K
from capfair.lexicon.tokenize import classify, tokenize
from capfair.models.Corpus import Corpus, ImageRecord
from capfair.models.Lexicon import Lexicon
from capfair.util.helpers import mkdir
from capfair.util.parallel import parallel_map

log = logging.getLogger(__name__)

CSV_HEADER = ("word", "male_count", "female_count", "ratio", "support")


@dataclass(frozen=True)
class BiasRow:
    word: str
    male_count: int
    female_count: int

    @property
    def support(self):
        return self.male_count + self.female_count

    @property
    def ratio(self):
        """Fraction of gendered co-occurrences that are male; 0.5 is balanced."""
        assert self.support > 0, "ratio undefined for `%s` (no support)" % self.word
        return self.male_count / self.support

    def sort_key(self):
        return -abs(self.ratio - 0.5), -self.support, self.word

    def to_dict(self):
        return dict(
            word=self.word,
            male_count=self.male_count,
            female_count=self.female_count,
            ratio=self.ratio,
            support=self.support,
        )


def image_cooccurrences(lexicon: Lexicon, image: ImageRecord):
    """The sets of non-lexicon words co-mentioned with a male word and with a female word."""
    with_male = set()
    with_female = set()
    for caption in image.captions:
        tokens = tokenize(caption)
        classes = [classify(lexicon, t) for t in tokens]
        has_male = any(c.is_male for c in classes)
        has_female = any(c.is_female for c in classes)
        if not (has_male or has_female):
            continue
        words = {t.norm for t, c in zip(tokens, classes) if not c.is_human}
        if has_male:
            with_male |= words
        if has_female:
            with_female |= words
    return with_male, with_female


def cooccurrence_table(lexicon: Lexicon, corpus: Corpus, min_support=DEFAULT_MIN_SUPPORT, workers=1):
    """
    One BiasRow per word with support >= min_support, most skewed first (then by support, then
    alphabetically).

    >>> from capfair.lexicon import default_lexicon
    >>> corpus = Corpus([
    ...     ImageRecord(1, "", ("a woman shopping",)),
    ...     ImageRecord(2, "", ("a man shopping", "a lady shopping")),
    ...     ImageRecord(3, "", ("a man repairing a car",)),
    ... ])
    >>> [(r.word, r.male_count, r.female_count) for r in cooccurrence_table(default_lexicon(), corpus, 1)]
    [('car', 1, 0), ('repairing', 1, 0), ('shopping', 1, 2), ('a', 2, 2)]
    """
    assert min_support >= 1, "min_support must be >= 1"

    male = Counter()
    female = Counter()
    per_image = parallel_map(lambda image: image_cooccurrences(lexicon, image), corpus, workers)
    for with_male, with_female in per_image:
        male.update(with_male)
        female.update(with_female)

    rows = [BiasRow(w, male[w], female[w]) for w in set(male) | set(female)]
    rows = sorted((r for r in rows if r.support >= min_support), key=BiasRow.sort_key)
    if not rows:
        log.warning("co-occurrence table of %s is empty (min_support=%d)", corpus, min_support)
    return rows


def compare_bias(before, after):
    """
    (word, ratio_before, ratio_after) for the words present in both tables, in `before` order.

    >>> compare_bias([BiasRow("a", 1, 1), BiasRow("b", 2, 0)], [BiasRow("b", 1, 1)])
    [('b', 1.0, 0.5)]
    """
    after_by_word = {r.word: r for r in after}
    return [(r.word, r.ratio, after_by_word[r.word].ratio) for r in before if r.word in after_by_word]


def top_k(rows, k=DEFAULT_TOP_K):
    return list(rows[:k])


def write_bias_csv(rows, path):
    try:
        mkdir(os.path.dirname(path))
        with open(path, "w", encoding="utf-8", newline="") as fp:
            w = csv.writer(fp, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for r in rows:
                w.writerow((r.word, r.male_count, r.female_count, "%.6f" % r.ratio, r.support))
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))
