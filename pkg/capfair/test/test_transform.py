import random

import pytest

from capfair import GenderLabel
from capfair.core.transform import (
    neutralize,
    neutralize_audit_rows,
    neutralize_candidates,
    neutralize_corpus,
    recombine,
    recombine_audit_rows,
    sai_pipeline,
    swap_gender,
)
from capfair.lexicon import classify, tokenize
from capfair.models.Corpus import CandidateCaptionFile, GenderPredictionFile, Prediction

FILLER = ["w%03d" % i for i in range(200)]


def random_caption(rng, lexicon):
    gendered = sorted(lexicon.all_words)
    words = []
    for _ in range(rng.randint(1, 12)):
        w = rng.choice(gendered) if rng.random() < 0.35 else rng.choice(FILLER)
        r = rng.random()
        if r < 0.1:
            w = w.upper()
        elif r < 0.2:
            w = w.capitalize()
        elif r < 0.3:
            w = w + rng.choice([",", ".", "!", ";"])
        elif r < 0.35:
            w = "(" + w + ")"
        words.append(w)
    return " ".join(words)


@pytest.mark.parametrize(
    "caption, expected",
    [
        ("A man riding a bike.", "A person riding a bike."),
        ("Two WOMEN, shopping!", "Two people, shopping!"),
        ("a guy and (two girls)", "a person and (two people)"),
        ("a snowboarder in the air", "a snowboarder in the air"),
        ("a  dog   on grass ", "a  dog   on grass "),
    ],
)
def test_neutralize(lexicon, caption, expected):
    assert neutralize(lexicon, caption).text == expected


def test_transform_properties(lexicon):
    rng = random.Random(0)
    for _ in range(10000):
        caption = random_caption(rng, lexicon)
        n = neutralize(lexicon, caption)

        assert not any(classify(lexicon, t).is_gendered for t in tokenize(n.text))
        assert neutralize(lexicon, n.text).text == n.text
        assert len(n.tokens) == len(tokenize(caption)) == len(tokenize(n.text))
        for gender in (GenderLabel.male, GenderLabel.female):
            assert neutralize(lexicon, recombine(lexicon, n, gender)).norms == n.norms


def test_neutral_caption_records_originals(lexicon):
    n = neutralize(lexicon, "A Man and two girls.")
    assert sorted(n.replaced_positions) == [1, 4]
    assert n.original_surfaces == {1: "Man", 4: "girls."}
    rows = list(neutralize_audit_rows(7, 0, n))
    assert rows == [(7, 0, 1, "Man", "person"), (7, 0, 4, "girls.", "people.")]


def test_recombine(lexicon):
    n = neutralize(lexicon, "a person and two people, near a skier")
    assert recombine(lexicon, n, GenderLabel.female) == "a woman and two women, near a skier"
    assert recombine(lexicon, n, GenderLabel.unknown) == n.text
    rows = list(recombine_audit_rows(lexicon, 3, n, GenderLabel.male))
    assert rows == [(3, 0, 1, "person", "man"), (3, 0, 4, "people,", "men,")]


def test_neutralize_corpus(lexicon, toy_corpus):
    neutral = neutralize_corpus(lexicon, toy_corpus)
    assert neutral.image_ids == toy_corpus.image_ids
    assert neutral.source_label == "toy_annotations:neutral"
    assert neutral.get(2).captions[2] == "Two people shopping at a fruit stand"
    assert neutral.get(4) == toy_corpus.get(4)
    assert neutralize_corpus(lexicon, neutral).images == neutral.images


def test_sai_pipeline(lexicon):
    candidates = CandidateCaptionFile(
        {1: "a person riding a wave", 2: "people shopping", 3: "a dog", 4: "a man eating"}, "SAT"
    )
    predictions = GenderPredictionFile({1: Prediction(GenderLabel.male), 2: Prediction(GenderLabel.female)})
    sai = sai_pipeline(lexicon, candidates, predictions)
    assert sai.label == "SAT"
    assert sai.entries == {1: "a man riding a wave", 2: "women shopping", 3: "a dog", 4: "a person eating"}


def test_sai_with_unknown_predictions_is_neutralization(lexicon):
    candidates = CandidateCaptionFile({1: "a man riding a wave", 2: "Two girls, shopping"}, "SAT")
    unknown = GenderPredictionFile({1: Prediction(GenderLabel.unknown)})
    assert sai_pipeline(lexicon, candidates, unknown) == neutralize_candidates(lexicon, candidates)


def test_swap_gender(lexicon):
    swapped = swap_gender(lexicon, "A man and a girl, with two Gentlemen")
    assert swapped == "A woman and a boy, with two ladies"
    caption = "two men and a lady"
    assert swap_gender(lexicon, swap_gender(lexicon, caption)) == caption
    assert swap_gender(lexicon, "a dog") == "a dog"
