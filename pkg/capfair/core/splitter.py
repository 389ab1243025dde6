"""
Construction of the Gender-Confident, Human and Nature evaluation subsets.

An image is *confident* when every one of its captions mentions the same gender (and never the other),
*human* when any caption mentions a person at all (gendered or neutral word), and *nature* otherwise.
"""
import logging

from capfair import SplitName, UnknownSplitError, Verdict
from capfair.corpus_io.coco import write_corpus
from capfair.lexicon.tokenize import classify, tokenize
from capfair.models.Corpus import Corpus, ImageRecord
from capfair.models.Lexicon import Lexicon
from capfair.models.Splits import CaptionProfile, ImageConsensus, SplitAssignment
from capfair.util.parallel import parallel_map

log = logging.getLogger(__name__)


def caption_profile(lexicon: Lexicon, caption: str) -> CaptionProfile:
    male = female = neutral = 0
    for token in tokenize(caption):
        c = classify(lexicon, token)
        if c.is_male:
            male += 1
        elif c.is_female:
            female += 1
        elif c.is_neutral:
            neutral += 1
    return CaptionProfile(male, female, neutral)


def consensus(lexicon: Lexicon, image: ImageRecord) -> ImageConsensus:
    """
    Classifies an image from all of its reference captions.

    >>> from capfair.lexicon import default_lexicon
    >>> lex = default_lexicon()
    >>> consensus(lex, ImageRecord(1, "", ("A man on a bike", "a guy riding"))).verdict.value
    'ConfidentMale'
    >>> consensus(lex, ImageRecord(2, "", ("a man cooking", "a woman cooking"))).verdict.value
    'HumanMixed'
    >>> consensus(lex, ImageRecord(3, "", ("a bowl of fruit", "fruit on a table"))).verdict.value
    'NoHuman'
    """
    profiles = tuple(caption_profile(lexicon, c) for c in image.captions)

    if all(p.male >= 1 and p.female == 0 for p in profiles):
        verdict = Verdict.confident_male
    elif all(p.female >= 1 and p.male == 0 for p in profiles):
        verdict = Verdict.confident_female
    elif not any(p.has_human for p in profiles):
        verdict = Verdict.no_human
    else:
        verdict = Verdict.human_mixed

    return ImageConsensus(image.image_id, profiles, verdict)


def build_splits(lexicon: Lexicon, corpus: Corpus, workers=1) -> SplitAssignment:
    """
    Builds the three subsets.  Images are classified in parallel; the result does not depend on
    `workers`.
    """
    verdicts = parallel_map(lambda image: consensus(lexicon, image), corpus.images, workers=workers)

    confident = {c.image_id: c.verdict.gender for c in verdicts if c.verdict.gender is not None}
    human = {c.image_id for c in verdicts if c.verdict is not Verdict.no_human}
    nature = {c.image_id for c in verdicts if c.verdict is Verdict.no_human}

    assignment = SplitAssignment(confident, human, nature)
    log.info(
        "splits of %s: %s", corpus, ", ".join("%s=%d" % (name, n) for name, n in assignment.summary())
    )
    return assignment


def export_split(assignment: SplitAssignment, which, corpus: Corpus, path):
    """Writes the member images of split `which` as a corpus file."""
    if str(which) not in (SplitName.confident.value, SplitName.human.value, SplitName.nature.value):
        raise UnknownSplitError(
            "unknown split `%s`, expected one of confident, human, nature" % (which,)
        )
    label = "%s:%s" % (corpus.source_label, which) if corpus.source_label else str(which)
    sub = corpus.subset(assignment.ids(which), source_label=label)
    write_corpus(sub, path)
    log.info("exported %d %s image(s) to %s", len(sub), which, path)
    return sub


def split_ids(assignment: SplitAssignment, which):
    """The sorted image ids of `which`, one of confident, human, nature or all."""
    return sorted(assignment.ids(which))
