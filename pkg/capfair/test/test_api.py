from capfair import api


def test_public_surface(toy_corpus):
    lexicon = api.default_lexicon()
    splits = api.build_splits(lexicon, toy_corpus)
    assert splits.summary() == [("confident", 3), ("human", 5), ("nature", 1)]

    candidates = api.CandidateCaptionFile({1: "a person surfing", 2: "people shopping"}, "SAT")
    sai = api.sai_pipeline(lexicon, candidates, api.random_predictions(splits.confident, seed=3))
    report = api.evaluate(api.build_eval_pairs(sai, toy_corpus), label="SAI")
    assert report.n_images == 2
    assert api.render_metric_table([report]).splitlines()[1].startswith("SAI")
