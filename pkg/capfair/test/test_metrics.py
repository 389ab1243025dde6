import csv
import itertools
import math
import random

import pytest

from capfair import EmptyInputError, UnknownImageError
from capfair.metrics import (
    EvalPair,
    bleu,
    build_eval_pairs,
    cider,
    cider_pairs,
    evaluate,
    lcs_length,
    meteor_lite,
    rouge_l,
    write_per_image_csv,
)
from capfair.metrics.bleu import clipped_matches
from capfair.metrics.cider import cosine
from capfair.metrics.meteor import align, meteor_score, stem
from capfair.metrics.ngrams import ngram_counts
from capfair.models.Corpus import CandidateCaptionFile, Corpus, ImageRecord

VOCAB = ["a", "dog", "cat", "cats", "runs", "running", "on", "the", "grass", "man"]


def random_words(rng, lo=1, hi=8):
    return tuple(rng.choice(VOCAB) for _ in range(rng.randint(lo, hi)))


def random_pairs(rng, n):
    refs = [[random_words(rng) for _ in range(rng.randint(1, 4))] for _ in range(n)]
    return [EvalPair(i, random_words(rng), refs[i]) for i in range(n)]


def brute_lcs(a, b):
    def is_subsequence(sub, seq):
        it = iter(seq)
        return all(x in it for x in sub)

    for k in range(min(len(a), len(b)), 0, -1):
        if any(is_subsequence(sub, b) for sub in itertools.combinations(a, k)):
            return k
    return 0


def brute_align(candidate, reference):
    """(matches, chunks) by enumerating every injective stem-equal alignment."""
    best = None

    def walk(i, used, alignment):
        nonlocal best
        if i == len(candidate):
            m = len(alignment)
            exact = sum(1 for a, b in alignment if candidate[a] == reference[b])
            chunks = 0
            for k, (a, b) in enumerate(alignment):
                if k == 0 or (a, b) != (alignment[k - 1][0] + 1, alignment[k - 1][1] + 1):
                    chunks += 1
            key = (-m, -exact, chunks)
            if best is None or key < best:
                best = key
            return
        walk(i + 1, used, alignment)
        for j, word in enumerate(reference):
            if j not in used and stem(word) == stem(candidate[i]):
                walk(i + 1, used | {j}, alignment + [(i, j)])

    walk(0, frozenset(), [])
    return -best[0], best[2]


def grams(words, n):
    return [tuple(words[i : i + n]) for i in range(len(words) - n + 1)]


def oracle_bleu(pairs, max_n):
    """Corpus BLEU straight from the definition, counting with list.count."""
    matched = [0] * max_n
    total = [0] * max_n
    c = r = 0
    for p in pairs:
        c += len(p.candidate)
        lengths = sorted(len(ref) for ref in p.references)
        r += min(lengths, key=lambda length: abs(length - len(p.candidate)))
        for n in range(1, max_n + 1):
            cand = grams(p.candidate, n)
            total[n - 1] += len(cand)
            for g in set(cand):
                matched[n - 1] += min(cand.count(g), max(grams(ref, n).count(g) for ref in p.references))
    if 0 in matched:
        return 0.0
    precision = math.exp(sum(math.log(m / t) for m, t in zip(matched, total)) / max_n)
    return precision * (1.0 if c > r else math.exp(1 - r / c))


def oracle_cider(pairs):
    """CIDEr by direct tf-idf arithmetic."""
    log_n = math.log(len(pairs))
    scores = []
    for p in pairs:
        total = 0.0
        for n in range(1, 5):

            def vector(words):
                out = {}
                for g in set(grams(words, n)):
                    df = sum(1 for q in pairs if any(g in grams(ref, n) for ref in q.references))
                    out[g] = grams(words, n).count(g) * (log_n - math.log(max(1, df)))
                return out

            cand = vector(p.candidate)
            sims = []
            for ref in p.references:
                vec = vector(ref)
                norm = math.sqrt(sum(v * v for v in cand.values()) * sum(v * v for v in vec.values()))
                dot = sum(v * vec.get(g, 0.0) for g, v in cand.items())
                sims.append(dot / norm if norm else 0.0)
            total += sum(sims) / len(sims)
        scores.append(total / 4)
    return 10.0 * sum(scores) / len(scores)


def test_lcs_against_brute_force():
    rng = random.Random(0)
    for _ in range(500):
        a = tuple(rng.choice("abc") for _ in range(rng.randint(0, 7)))
        b = tuple(rng.choice("abc") for _ in range(rng.randint(0, 7)))
        assert lcs_length(a, b) == brute_lcs(a, b)
        assert lcs_length(a, b) == lcs_length(b, a)


def test_bleu_clipping():
    pair = EvalPair(1, "the the the the".split(), ["the cat".split()])
    assert bleu([pair], 1) == pytest.approx(0.25)
    assert bleu([pair], 2) == 0.0


def test_clipped_matches_bounds():
    rng = random.Random(1)
    for pair in random_pairs(rng, 500):
        for n in range(1, 5):
            m, total = clipped_matches(pair.candidate, pair.references, n)
            ceiling = sum(
                max(ngram_counts(ref, n)[gram] for ref in pair.references)
                for gram in ngram_counts(pair.candidate, n)
            )
            assert 0 <= m <= total
            assert m <= ceiling


@pytest.mark.parametrize("max_n", [0, 5])
def test_bleu_order_out_of_range(max_n):
    with pytest.raises(ValueError):
        bleu([EvalPair(1, ["a"], [["a"]])], max_n)


@pytest.mark.parametrize("metric", [bleu, rouge_l, meteor_lite, cider, evaluate])
def test_empty_input(metric):
    with pytest.raises(EmptyInputError):
        metric([])


def test_metric_ranges():
    pairs = random_pairs(random.Random(2), 10000)
    report = evaluate(pairs, workers=4)
    for value in (report.bleu1, report.bleu2, report.bleu3, report.bleu4, report.rouge_l, report.meteor_lite):
        assert 0.0 <= value <= 1.0
    assert 0.0 <= report.cider <= 10.0
    for row in report.per_image:
        assert 0.0 <= row.bleu4 <= 1.0
        assert 0.0 <= row.rouge_l <= 1.0
        assert 0.0 <= row.meteor_lite <= 1.0
        assert 0.0 <= row.cider <= 10.0


def test_corpus_scores_do_not_depend_on_pair_order():
    pairs = random_pairs(random.Random(3), 300)
    shuffled = list(pairs)
    random.Random(4).shuffle(shuffled)
    shuffled = [EvalPair(p.image_id, p.candidate, tuple(reversed(p.references))) for p in shuffled]
    for n in range(1, 5):
        assert bleu(pairs, n) == bleu(shuffled, n)
    assert rouge_l(pairs) == rouge_l(shuffled)
    assert meteor_lite(pairs) == meteor_lite(shuffled)
    assert cider(pairs) == cider(shuffled)
    assert evaluate(pairs, workers=1) == evaluate(shuffled, workers=4)


def test_identical_captions():
    pairs = [
        EvalPair(1, "a b c d".split(), ["a b c d".split()]),
        EvalPair(2, "e f g h".split(), ["e f g h".split()]),
    ]
    for n in range(1, 5):
        assert bleu(pairs, n) == 1.0
    assert rouge_l(pairs) == 1.0
    assert cider(pairs) == pytest.approx(10.0)
    assert meteor_lite(pairs) == pytest.approx(1 - 0.5 / 64)


def test_cider_of_a_single_pair_is_zero():
    # with one document every idf is log(1/1) = 0
    assert cider([EvalPair(1, "a man riding".split(), ["a man riding".split()])]) == 0.0


def test_cider_pairs_average_to_the_corpus_score():
    pairs = random_pairs(random.Random(5), 50)
    per_pair = cider_pairs(pairs)
    assert sorted(per_pair) == list(range(50))
    assert sum(per_pair.values()) / len(per_pair) == pytest.approx(cider(pairs))


def test_cosine_is_scale_invariant():
    rng = random.Random(6)
    for _ in range(200):
        x = {k: rng.uniform(0.1, 5.0) for k in rng.sample(VOCAB, 4)}
        y = {k: rng.uniform(0.1, 5.0) for k in rng.sample(VOCAB, 4)}
        scaled = {k: 7.5 * v for k, v in y.items()}
        assert cosine(x, y) == pytest.approx(cosine(x, scaled))
        assert 0.0 <= cosine(x, y) <= 1.0


@pytest.mark.parametrize(
    "candidate, reference, expected",
    [
        ("a b c", "a b c", 1 - 0.5 / 27),
        ("running", "runs", 0.5),
        ("a cat", "a dog cat", 10 / 29),
        ("a cat", "the dog", 0.0),
        ("", "a dog", 0.0),
    ],
)
def test_meteor_examples(candidate, reference, expected):
    assert meteor_score(candidate.split(), reference.split()) == pytest.approx(expected)


def test_alignment_against_brute_force():
    words = ["a", "run", "runs", "running", "cat", "cats"]
    rng = random.Random(7)
    for _ in range(300):
        candidate = tuple(rng.choice(words) for _ in range(rng.randint(1, 5)))
        reference = tuple(rng.choice(words) for _ in range(rng.randint(1, 5)))
        assert align(candidate, reference) == brute_align(candidate, reference)


def test_alignment_budget_fallback_keeps_matches():
    candidate = ("a",) * 12
    reference = ("a", "b") * 8
    m, chunks = align(candidate, reference, budget=10)
    assert m == 8
    assert 1 <= chunks <= m


def test_build_eval_pairs(lexicon):
    corpus = Corpus([ImageRecord(1, "", ("A Woman cooking.", "a person at a stove"))])
    cands = CandidateCaptionFile({1: "A man, cooking"}, "SAT")
    pair = build_eval_pairs(cands, corpus)[0]
    assert pair.candidate == ("a", "man", "cooking")
    assert pair.references == (("a", "woman", "cooking"), ("a", "person", "at", "a", "stove"))

    neutral = build_eval_pairs(cands, corpus, neutral_mode=True, lexicon=lexicon)[0]
    assert neutral.candidate == ("a", "person", "cooking")
    assert neutral.references[0] == ("a", "person", "cooking")


def test_build_eval_pairs_unknown_image(toy_corpus):
    with pytest.raises(UnknownImageError) as e:
        build_eval_pairs(CandidateCaptionFile({1: "a man", 42: "a dog", 40: "a cat"}, "SAT"), toy_corpus)
    assert e.value.image_ids == [40, 42]


def test_write_per_image_csv(cleandir):
    pairs = [EvalPair(i, "a dog on grass".split(), ["a dog on the grass".split()]) for i in (3, 1, 2)]
    report = evaluate(pairs, label="SAT")
    write_per_image_csv(report, "out/per_image.csv")
    with open("out/per_image.csv") as fp:
        rows = list(csv.reader(fp))
    assert rows[0] == ["image_id", "bleu4", "rouge_l", "meteor_lite", "cider_pair"]
    assert [r[0] for r in rows[1:]] == ["1", "2", "3"]
    assert all(len(r) == 5 for r in rows)

    with pytest.raises(AssertionError):
        write_per_image_csv(evaluate(pairs, per_image=False), "nope.csv")


def test_bleu_and_cider_against_direct_computation():
    rng = random.Random(8)
    for _ in range(20):
        pairs = random_pairs(rng, rng.randint(2, 12))
        for n in range(1, 5):
            assert bleu(pairs, n) == pytest.approx(oracle_bleu(pairs, n), abs=1e-9)
        assert cider(pairs) == pytest.approx(oracle_cider(pairs), abs=1e-9)
