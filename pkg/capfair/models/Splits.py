from collections import namedtuple
from dataclasses import dataclass
from typing import FrozenSet, Mapping, Tuple

from capfair import GenderLabel, SplitName, UnknownSplitError, Verdict


class CaptionProfile(namedtuple("CaptionProfile", "male female neutral")):
    """Counts of male, female and neutral-human tokens in one caption."""

    __slots__ = ()

    @property
    def has_human(self):
        return self.male + self.female + self.neutral > 0


@dataclass(frozen=True)
class ImageConsensus:
    image_id: int
    per_caption_profiles: Tuple[CaptionProfile, ...]
    verdict: Verdict

    def __post_init__(self):
        profiles = self.per_caption_profiles
        if self.verdict is Verdict.confident_male:
            assert all(p.male and not p.female for p in profiles), "invalid ConfidentMale: %s" % (profiles,)
        elif self.verdict is Verdict.confident_female:
            assert all(p.female and not p.male for p in profiles), "invalid ConfidentFemale: %s" % (profiles,)
        elif self.verdict is Verdict.no_human:
            assert not any(p.has_human for p in profiles), "invalid NoHuman: %s" % (profiles,)


@dataclass(frozen=True)
class SplitAssignment:
    """
    Membership of every corpus image in the confident, human and nature subsets.

    confident maps an image_id to its consensus gender; human and nature partition the corpus.
    """

    confident: Mapping[int, GenderLabel]
    human: FrozenSet[int]
    nature: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "human", frozenset(self.human))
        object.__setattr__(self, "nature", frozenset(self.nature))
        object.__setattr__(self, "confident", dict(sorted(self.confident.items())))
        overlap = self.human & self.nature
        assert not overlap, "human and nature overlap: %s" % sorted(overlap)[:10]
        assert set(self.confident) <= self.human, "confident images outside human"

    @property
    def all_ids(self):
        return self.human | self.nature

    def ids(self, which) -> FrozenSet[int]:
        """
        >>> a = SplitAssignment({1: GenderLabel.male}, {1, 2}, {3})
        >>> sorted(a.ids("confident")), sorted(a.ids("all"))
        ([1], [1, 2, 3])
        >>> a.ids("animals")
        Traceback (most recent call last):
        ...
        capfair.UnknownSplitError: unknown split `animals`, expected one of confident, human, nature, all
        """
        try:
            name = SplitName(str(which))
        except ValueError:
            raise UnknownSplitError(
                "unknown split `%s`, expected one of %s" % (which, ", ".join(s.value for s in SplitName))
            ) from None
        return {
            SplitName.confident: frozenset(self.confident),
            SplitName.human: self.human,
            SplitName.nature: self.nature,
            SplitName.all: self.all_ids,
        }[name]

    def summary(self):
        """(name, count) rows in canonical split order."""
        return [
            (SplitName.confident.value, len(self.confident)),
            (SplitName.human.value, len(self.human)),
            (SplitName.nature.value, len(self.nature)),
        ]

    def to_dict(self):
        return {
            "confident": {str(k): v.value for k, v in self.confident.items()},
            "human": sorted(self.human),
            "nature": sorted(self.nature),
            "sizes": dict(self.summary()),
        }
