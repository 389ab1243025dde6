import csv
import random

import pytest

from capfair.core.bias_stats import compare_bias, cooccurrence_table, top_k, write_bias_csv
from capfair.core.transform import neutralize_corpus, swap_gender
from capfair.models.Corpus import Corpus, ImageRecord

FILLER = ["kitchen", "pizza", "shopping", "skateboard", "tie", "umbrella", "a", "the", "with"]


def corpus_of(*captions_per_image):
    return Corpus(tuple(ImageRecord(i, "", captions) for i, captions in enumerate(captions_per_image, 1)))


def random_corpus(rng, lexicon, n_images):
    vocab = FILLER + sorted(lexicon.all_words)

    def caption():
        return " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 7)))

    return corpus_of(*(tuple(caption() for _ in range(rng.randint(1, 4))) for _ in range(n_images)))


def by_word(rows):
    return {r.word: r for r in rows}


def test_toy_table(lexicon, toy_corpus):
    rows = by_word(cooccurrence_table(lexicon, toy_corpus, min_support=1))
    assert rows["shopping"].ratio == 0.0
    assert rows["surfboard"].ratio == 1.0
    assert rows["cake"].male_count == rows["cake"].female_count == 1
    assert "skiing" not in rows
    assert "man" not in rows and "person" not in rows


def test_balanced_word(lexicon):
    corpus = corpus_of(*[("a man eating pizza",)] * 3, *[("a woman eating pizza",)] * 3)
    rows = by_word(cooccurrence_table(lexicon, corpus, min_support=1))
    assert (rows["eating"].male_count, rows["eating"].female_count) == (3, 3)
    assert rows["eating"].ratio == 0.5


def test_counts_once_per_image(lexicon):
    corpus = corpus_of(("a man with a tie", "the man in a tie", "a guy with a tie"))
    assert by_word(cooccurrence_table(lexicon, corpus, min_support=1))["tie"].male_count == 1


def test_no_gendered_words(lexicon):
    corpus = corpus_of(("a dog on the grass",), ("a person with an umbrella",))
    assert cooccurrence_table(lexicon, corpus, min_support=1) == []


def test_sort_order(lexicon):
    corpus = corpus_of(
        ("a man with a tie",),
        ("a man with a tie",),
        ("a woman with a tie",),
        ("a woman with an umbrella",),
        ("a man in a kitchen",),
    )
    rows = cooccurrence_table(lexicon, corpus, min_support=1)
    assert [r.word for r in rows[:3]] == ["an", "in", "kitchen"]
    assert [(r.word, r.ratio) for r in rows[-2:]] == [("a", 0.6), ("with", 0.5)]


def test_swapping_genders_mirrors_ratios(lexicon):
    corpus = random_corpus(random.Random(0), lexicon, 400)
    swapped = corpus.replace_captions(
        {r.image_id: tuple(swap_gender(lexicon, c) for c in r.captions) for r in corpus}
    )
    before = by_word(cooccurrence_table(lexicon, corpus, min_support=1))
    after = by_word(cooccurrence_table(lexicon, swapped, min_support=1))
    assert set(before) == set(after)
    for word, row in before.items():
        assert (after[word].male_count, after[word].female_count) == (row.female_count, row.male_count)
        assert after[word].ratio == pytest.approx(1 - row.ratio)


def test_duplicated_captions_do_not_change_counts(lexicon):
    corpus = random_corpus(random.Random(1), lexicon, 200)
    doubled = corpus.replace_captions({r.image_id: r.captions + r.captions for r in corpus})
    assert cooccurrence_table(lexicon, doubled, 1) == cooccurrence_table(lexicon, corpus, 1)


def test_neutralized_corpus_has_no_bias_rows(lexicon):
    corpus = random_corpus(random.Random(2), lexicon, 200)
    assert cooccurrence_table(lexicon, neutralize_corpus(lexicon, corpus), min_support=1) == []


def test_min_support_is_monotonic(lexicon):
    corpus = random_corpus(random.Random(3), lexicon, 300)
    previous = None
    for min_support in (1, 2, 5, 10, 50):
        words = {r.word for r in cooccurrence_table(lexicon, corpus, min_support)}
        assert all(r.support >= min_support for r in cooccurrence_table(lexicon, corpus, min_support))
        if previous is not None:
            assert words <= previous
        previous = words


def test_workers_do_not_change_the_table(lexicon):
    corpus = random_corpus(random.Random(4), lexicon, 1200)
    serial = cooccurrence_table(lexicon, corpus, 1, workers=1)
    assert cooccurrence_table(lexicon, corpus, 1, workers=4) == serial


def test_compare_bias_and_top_k(lexicon):
    corpus = corpus_of(("a man with a tie",), ("a woman with a tie",), ("a man with a skateboard",))
    before = cooccurrence_table(lexicon, corpus, 1)
    after = cooccurrence_table(lexicon, corpus_of(("a man with a skateboard", "a woman on a skateboard")), 1)
    assert ("skateboard", 1.0, 0.5) in compare_bias(before, after)
    assert "tie" not in [word for word, _, _ in compare_bias(before, after)]
    assert top_k(before, 1) == before[:1]
    assert top_k(before, 100) == before


def test_write_bias_csv(cleandir, lexicon, toy_corpus):
    rows = cooccurrence_table(lexicon, toy_corpus, min_support=1)
    write_bias_csv(rows, "out/bias_table.csv")
    with open("out/bias_table.csv") as fp:
        lines = list(csv.reader(fp))
    assert lines[0] == ["word", "male_count", "female_count", "ratio", "support"]
    assert len(lines) == len(rows) + 1
    shopping = [line for line in lines if line[0] == "shopping"][0]
    assert shopping == ["shopping", "0", "1", "0.000000", "1"]
