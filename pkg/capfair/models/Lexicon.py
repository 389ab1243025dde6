"""
The gender / neutral word inventory and its tokens.
"""
import configparser
import io
from collections import namedtuple
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Tuple

from capfair import GenderClass, GenderLabel, LexiconDisjointnessError, LexiconMappingError

#: config section name for every word set, in canonical order
SET_SECTIONS = (
    ("male_singular", GenderClass.male_singular),
    ("male_plural", GenderClass.male_plural),
    ("female_singular", GenderClass.female_singular),
    ("female_plural", GenderClass.female_plural),
    ("neutral_singular", GenderClass.neutral_singular),
    ("neutral_plural", GenderClass.neutral_plural),
)


class Token(namedtuple("Token", "surface norm position")):
    """
    One word of a caption.

    surface is the whitespace-delimited piece as written (case and edge punctuation kept),
    norm its lowercased form with leading/trailing punctuation stripped.
    """

    __slots__ = ()

    @property
    def prefix(self):
        i = self.surface.lower().find(self.norm)
        return self.surface[:i]

    @property
    def suffix(self):
        i = self.surface.lower().find(self.norm)
        return self.surface[i + len(self.norm) :]

    def replaced(self, word):
        """A copy of this token with its word swapped for `word`, keeping edge punctuation."""
        return Token(self.prefix + word + self.suffix, word, self.position)


@dataclass(frozen=True)
class Lexicon:
    male_singular: FrozenSet[str]
    male_plural: FrozenSet[str]
    female_singular: FrozenSet[str]
    female_plural: FrozenSet[str]
    neutral_human_singular: FrozenSet[str]
    neutral_human_plural: FrozenSet[str]
    plural_of: Mapping[str, str]
    neutral_target_singular: str = "person"
    neutral_target_plural: str = "people"
    gendered_target: Mapping[Tuple[GenderLabel, bool], str] = None
    counterparts: Mapping[str, str] = None
    _class_of: Dict[str, GenderClass] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        for name, _ in SET_SECTIONS:
            object.__setattr__(self, self._attr(name), frozenset(getattr(self, self._attr(name))))
        if self.gendered_target is None:
            object.__setattr__(
                self,
                "gendered_target",
                {
                    (GenderLabel.male, False): "man",
                    (GenderLabel.male, True): "men",
                    (GenderLabel.female, False): "woman",
                    (GenderLabel.female, True): "women",
                },
            )
        object.__setattr__(self, "plural_of", dict(self.plural_of))
        object.__setattr__(self, "gendered_target", dict(self.gendered_target))
        object.__setattr__(self, "counterparts", dict(self.counterparts or {}))

        class_of = dict()
        set_of = dict()
        for name, gender_class in SET_SECTIONS:
            for word in sorted(self.words(gender_class)):
                if word in class_of:
                    raise LexiconDisjointnessError(word, set_of[word], name)
                class_of[word] = gender_class
                set_of[word] = name
        object.__setattr__(self, "_class_of", class_of)
        self._validate_mappings()

    @staticmethod
    def _attr(section):
        return section.replace("neutral_", "neutral_human_")

    def words(self, gender_class):
        return {
            GenderClass.male_singular: self.male_singular,
            GenderClass.male_plural: self.male_plural,
            GenderClass.female_singular: self.female_singular,
            GenderClass.female_plural: self.female_plural,
            GenderClass.neutral_singular: self.neutral_human_singular,
            GenderClass.neutral_plural: self.neutral_human_plural,
        }.get(gender_class, frozenset())

    def _validate_mappings(self):
        for singular, plural in sorted(self.plural_of.items()):
            sc, pc = self.class_of(singular), self.class_of(plural)
            ok = (
                (sc, pc) == (GenderClass.male_singular, GenderClass.male_plural)
                or (sc, pc) == (GenderClass.female_singular, GenderClass.female_plural)
                or (sc, pc) == (GenderClass.neutral_singular, GenderClass.neutral_plural)
            )
            if not ok:
                raise LexiconMappingError(
                    "plural_of `%s = %s` maps %s to %s; it must map a singular word to a plural word "
                    "of the same gender" % (singular, plural, sc, pc)
                )

        if self.class_of(self.neutral_target_singular) is not GenderClass.neutral_singular:
            raise LexiconMappingError(
                "neutral singular target `%s` is not a neutral singular word" % self.neutral_target_singular
            )
        if self.class_of(self.neutral_target_plural) is not GenderClass.neutral_plural:
            raise LexiconMappingError(
                "neutral plural target `%s` is not a neutral plural word" % self.neutral_target_plural
            )
        for gender in (GenderLabel.male, GenderLabel.female):
            for plural in (False, True):
                key = (gender, plural)
                if key not in self.gendered_target:
                    raise LexiconMappingError("missing gendered target for %s %s" % key)
                expected = _gender_class(gender, plural)
                word = self.gendered_target[key]
                if self.class_of(word) is not expected:
                    raise LexiconMappingError(
                        "gendered target `%s` for %s is not in the %s set" % (word, expected, expected)
                    )

        for male_word, female_word in sorted(self.counterparts.items()):
            mc, fc = self.class_of(male_word), self.class_of(female_word)
            if not (mc.is_male and fc.is_female and mc.is_plural == fc.is_plural):
                raise LexiconMappingError(
                    "counterpart `%s = %s` must pair a male word with a female word of the same number"
                    % (male_word, female_word)
                )

    def class_of(self, norm) -> GenderClass:
        return self._class_of.get(norm, GenderClass.non_human)

    def target_for(self, gender: GenderLabel, plural: bool) -> str:
        return self.gendered_target[(gender, plural)]

    def neutral_target(self, plural: bool) -> str:
        return self.neutral_target_plural if plural else self.neutral_target_singular

    @property
    def all_words(self):
        return frozenset(self._class_of)

    def to_config(self) -> str:
        """Serializes the lexicon to the INI format read by `capfair.lexicon.load_lexicon`."""
        cp = configparser.ConfigParser()
        for name, gender_class in SET_SECTIONS:
            cp[name] = {"words": ", ".join(sorted(self.words(gender_class)))}
        cp["plural_of"] = dict(sorted(self.plural_of.items()))
        cp["targets"] = {
            "neutral_singular": self.neutral_target_singular,
            "neutral_plural": self.neutral_target_plural,
            "male_singular": self.target_for(GenderLabel.male, False),
            "male_plural": self.target_for(GenderLabel.male, True),
            "female_singular": self.target_for(GenderLabel.female, False),
            "female_plural": self.target_for(GenderLabel.female, True),
        }
        cp["counterparts"] = dict(sorted(self.counterparts.items()))
        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()


def _gender_class(gender: GenderLabel, plural: bool) -> GenderClass:
    return {
        (GenderLabel.male, False): GenderClass.male_singular,
        (GenderLabel.male, True): GenderClass.male_plural,
        (GenderLabel.female, False): GenderClass.female_singular,
        (GenderLabel.female, True): GenderClass.female_plural,
    }[(gender, plural)]
