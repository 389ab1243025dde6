"""
Gender neutralization of captions and SAI recombination.

Neutralization replaces every gendered word by the lexicon's neutral target of the same number
("man" -> "person", "ladies" -> "people").  Recombination does the reverse for one image-level gender
label: every neutral target word becomes the gendered target of that gender.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

from capfair import GenderClass, GenderLabel
from capfair.lexicon.tokenize import classify, render, tokenize
from capfair.models.Corpus import CandidateCaptionFile, Corpus, GenderPredictionFile
from capfair.models.Lexicon import Lexicon, Token
from capfair.util.parallel import parallel_map

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeutralCaption:
    source: str
    tokens: Tuple[Token, ...]
    replaced_positions: FrozenSet[int] = frozenset()
    original_classes: Dict[int, GenderClass] = field(default_factory=dict)
    original_surfaces: Dict[int, str] = field(default_factory=dict)

    @property
    def norms(self):
        return tuple(t.norm for t in self.tokens)

    @property
    def text(self):
        """The neutral caption; untouched captions come back exactly as written."""
        return self.source if not self.replaced_positions else render(self.tokens)


def neutralize(lexicon: Lexicon, caption: str) -> NeutralCaption:
    """
    >>> from capfair.lexicon import default_lexicon
    >>> lex = default_lexicon()
    >>> n = neutralize(lex, "A man riding a bike.")
    >>> n.text, sorted(n.replaced_positions)
    ('A person riding a bike.', [1])
    >>> neutralize(lex, "two women shopping with a lady").text
    'two people shopping with a person'
    >>> neutralize(lex, "a dog on the grass").replaced_positions
    frozenset()
    """
    tokens = []
    replaced = set()
    original_classes = dict()
    original_surfaces = dict()
    for t in tokenize(caption):
        c = classify(lexicon, t)
        if c.is_gendered:
            replaced.add(t.position)
            original_classes[t.position] = c
            original_surfaces[t.position] = t.surface
            t = t.replaced(lexicon.neutral_target(c.is_plural))
        tokens.append(t)
    return NeutralCaption(caption, tuple(tokens), frozenset(replaced), original_classes, original_surfaces)


def recombine_tokens(lexicon: Lexicon, neutral: NeutralCaption, gender: GenderLabel):
    """Returns the recombined tokens and the positions that changed."""
    if gender is GenderLabel.unknown:
        return neutral.tokens, ()
    tokens = []
    changed = []
    for t in neutral.tokens:
        if t.norm == lexicon.neutral_target_singular:
            t = t.replaced(lexicon.target_for(gender, plural=False))
            changed.append(t.position)
        elif t.norm == lexicon.neutral_target_plural:
            t = t.replaced(lexicon.target_for(gender, plural=True))
            changed.append(t.position)
        tokens.append(t)
    return tuple(tokens), tuple(changed)


def recombine(lexicon: Lexicon, neutral: NeutralCaption, gender: GenderLabel) -> str:
    """
    >>> from capfair.lexicon import default_lexicon
    >>> lex = default_lexicon()
    >>> recombine(lex, neutralize(lex, "a person riding a bike"), GenderLabel.male)
    'a man riding a bike'
    >>> recombine(lex, neutralize(lex, "people playing frisbee"), GenderLabel.female)
    'women playing frisbee'
    >>> recombine(lex, neutralize(lex, "a person walking a dog"), GenderLabel.unknown)
    'a person walking a dog'
    """
    tokens, changed = recombine_tokens(lexicon, neutral, gender)
    return render(tokens) if changed else neutral.text


def neutralize_corpus(lexicon: Lexicon, corpus: Corpus, workers=1) -> Corpus:
    """Neutralizes every caption of every image; ids, counts and caption order are preserved."""
    def neutral_captions(record):
        return tuple(neutralize(lexicon, c).text for c in record.captions)

    neutral = parallel_map(neutral_captions, corpus.images, workers=workers)
    label = "%s:neutral" % corpus.source_label if corpus.source_label else "neutral"
    return corpus.replace_captions(dict(zip(corpus.image_ids, neutral)), source_label=label)


def neutralize_candidates(lexicon: Lexicon, candidates: CandidateCaptionFile) -> CandidateCaptionFile:
    return CandidateCaptionFile(
        {image_id: neutralize(lexicon, caption).text for image_id, caption in candidates}, candidates.label
    )


def sai_pipeline(
    lexicon: Lexicon, candidates: CandidateCaptionFile, predictions: GenderPredictionFile
) -> CandidateCaptionFile:
    """
    Show-Attend-and-Identify: each candidate is neutralized (a no-op for a gender-agnostic captioner)
    and then recombined with its image's predicted gender.  Images without a prediction stay neutral.
    """
    entries = dict()
    for image_id, caption in candidates:
        entries[image_id] = recombine(lexicon, neutralize(lexicon, caption), predictions.label_for(image_id))
    missing = sum(1 for image_id in entries if image_id not in predictions)
    if missing:
        log.warning("%d of %d candidate(s) have no gender prediction and stay neutral", missing, len(entries))
    return CandidateCaptionFile(entries, candidates.label)


def swap_gender(lexicon: Lexicon, caption: str) -> str:
    """
    Counterfactual caption: every gendered word becomes the opposite gender, through the lexicon's
    counterpart pairs when one exists and its gendered target otherwise.

    >>> from capfair.lexicon import default_lexicon
    >>> swap_gender(default_lexicon(), "A man and two girls near a guy")
    'A woman and two boys near a woman'
    """
    female_to_male = {f: m for m, f in lexicon.counterparts.items()}
    tokens = []
    changed = False
    for t in tokenize(caption):
        c = classify(lexicon, t)
        if c.is_gendered:
            counterpart = lexicon.counterparts.get(t.norm) if c.is_male else female_to_male.get(t.norm)
            if counterpart is None:
                opposite = GenderLabel.female if c.gender is GenderLabel.male else GenderLabel.male
                counterpart = lexicon.target_for(opposite, c.is_plural)
            t = t.replaced(counterpart)
            changed = True
        tokens.append(t)
    return render(tokens) if changed else caption


def neutralize_audit_rows(image_id, caption_index, neutral: NeutralCaption):
    """(image_id, caption_index, position, original, replacement) for every replaced word."""
    for position in sorted(neutral.replaced_positions):
        original = neutral.original_surfaces[position]
        yield image_id, caption_index, position, original, neutral.tokens[position].surface


def recombine_audit_rows(lexicon: Lexicon, image_id, neutral: NeutralCaption, gender: GenderLabel):
    tokens, changed = recombine_tokens(lexicon, neutral, gender)
    for position in changed:
        yield image_id, 0, position, neutral.tokens[position].surface, tokens[position].surface
