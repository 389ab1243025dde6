"""
Scores an image-level gender classifier against the consensus gender of the confident split.
"""
import logging

import numpy as np

from capfair import EmptyInputError, GenderLabel
from capfair.constants import DEFAULT_SEED
from capfair.models.Corpus import GenderPredictionFile, Prediction
from capfair.models.Report import GenderAccuracy
from capfair.models.Splits import SplitAssignment

log = logging.getLogger(__name__)


def gender_accuracy(predictions: GenderPredictionFile, splits: SplitAssignment) -> GenderAccuracy:
    """
    Accuracy over the confident images that have a prediction; an Unknown prediction is a miss.

    >>> splits = SplitAssignment({1: GenderLabel.male, 2: GenderLabel.female}, frozenset({1, 2}), frozenset())
    >>> preds = GenderPredictionFile({1: Prediction(GenderLabel.male), 2: Prediction(GenderLabel.unknown)})
    >>> ga = gender_accuracy(preds, splits)
    >>> ga.accuracy, ga.coverage
    (0.5, 1.0)
    """
    if not splits.confident:
        raise EmptyInputError("the confident split is empty, no image to score gender predictions against")

    n_confident = len(splits.confident)
    predicted = [image_id for image_id in sorted(splits.confident) if image_id in predictions]
    n_correct = sum(1 for i in predicted if predictions.label_for(i) == splits.confident[i])
    n_predicted = len(predicted)

    if n_predicted < n_confident:
        log.warning(
            "%d of %d confident image(s) have no gender prediction (coverage %.4f)",
            n_confident - n_predicted,
            n_confident,
            n_predicted / n_confident,
        )
    accuracy = n_correct / n_predicted if n_predicted else 0.0
    return GenderAccuracy(accuracy, n_predicted / n_confident, n_confident, n_predicted, n_correct)


def oracle_predictions(splits: SplitAssignment) -> GenderPredictionFile:
    """Predictions equal to the consensus gender of every confident image."""
    return GenderPredictionFile(
        {image_id: Prediction(gender, 1.0) for image_id, gender in splits.confident.items()}, "oracle"
    )


def random_predictions(image_ids, seed=DEFAULT_SEED) -> GenderPredictionFile:
    """
    Uniform male/female coin flips, the chance baseline for gender accuracy.

    >>> a = random_predictions(range(100), seed=7)
    >>> b = random_predictions(range(100), seed=7)
    >>> [a.label_for(i) for i in range(100)] == [b.label_for(i) for i in range(100)]
    True
    """
    image_ids = sorted(image_ids)
    rng = np.random.default_rng(seed)
    flips = rng.integers(0, 2, size=len(image_ids))
    return GenderPredictionFile(
        {
            image_id: Prediction(GenderLabel.male if flip else GenderLabel.female, 0.5)
            for image_id, flip in zip(image_ids, flips)
        },
        "random(seed=%d)" % seed,
    )
