import os

opj = os.path.join

#########################################################################################################################
# Settings
#########################################################################################################################

library_path = os.path.dirname(os.path.realpath(__file__))
with open(os.path.join(library_path, "VERSION"), "r") as fh:
    __version__ = fh.read().strip()


#########################################################################################################################
# Exceptions
#########################################################################################################################


class CapfairError(Exception):
    pass


class ParseError(CapfairError):
    pass


class ValidationError(CapfairError):
    pass


class UnknownImageError(ValidationError):
    def __init__(self, image_ids, context=""):
        self.image_ids = sorted(set(image_ids))
        shown = ", ".join(map(str, self.image_ids[:20]))
        more = " (and %d more)" % (len(self.image_ids) - 20) if len(self.image_ids) > 20 else ""
        super(UnknownImageError, self).__init__(
            "%sunknown image_id(s): %s%s" % (context + ": " if context else "", shown, more)
        )


class DuplicateIdError(ValidationError):
    def __init__(self, image_id, context=""):
        self.image_id = image_id
        super(DuplicateIdError, self).__init__(
            "%sduplicate image_id %s" % (context + ": " if context else "", image_id)
        )


class InvalidLabelError(ValidationError):
    pass


class LexiconError(CapfairError):
    pass


class LexiconDisjointnessError(LexiconError):
    def __init__(self, word, set_a, set_b):
        self.word = word
        super(LexiconDisjointnessError, self).__init__(
            "word `%s` appears in both [%s] and [%s]; lexicon sets must be disjoint" % (word, set_a, set_b)
        )


class LexiconMappingError(LexiconError):
    pass


class UnknownSplitError(CapfairError):
    pass


class EmptyInputError(CapfairError):
    pass


class OutputError(CapfairError):
    def __init__(self, path, reason):
        self.path = path
        super(OutputError, self).__init__("cannot write %s: %s" % (path, reason))


#########################################################################################################################
# Signals
#########################################################################################################################
import blinker

signal_run_status_change = blinker.Signal()

########################################################################################################################
# Enums
########################################################################################################################
import enum


class MyEnum(enum.Enum):
    def __str__(self):
        return "%s" % self._value_


class GenderClass(MyEnum):
    male_singular = "MaleSingular"
    male_plural = "MalePlural"
    female_singular = "FemaleSingular"
    female_plural = "FemalePlural"
    neutral_singular = "NeutralHumanSingular"
    neutral_plural = "NeutralHumanPlural"
    non_human = "NonHuman"

    @property
    def is_male(self):
        return self in (GenderClass.male_singular, GenderClass.male_plural)

    @property
    def is_female(self):
        return self in (GenderClass.female_singular, GenderClass.female_plural)

    @property
    def is_gendered(self):
        return self.is_male or self.is_female

    @property
    def is_neutral(self):
        return self in (GenderClass.neutral_singular, GenderClass.neutral_plural)

    @property
    def is_human(self):
        return self is not GenderClass.non_human

    @property
    def is_plural(self):
        return self in (GenderClass.male_plural, GenderClass.female_plural, GenderClass.neutral_plural)

    @property
    def gender(self):
        """GenderLabel.male or GenderLabel.female for gendered words, else None."""
        if self.is_male:
            return GenderLabel.male
        if self.is_female:
            return GenderLabel.female
        return None


class GenderLabel(MyEnum):
    male = "male"
    female = "female"
    unknown = "unknown"


class Verdict(MyEnum):
    confident_male = "ConfidentMale"
    confident_female = "ConfidentFemale"
    human_mixed = "HumanMixed"
    no_human = "NoHuman"

    @property
    def gender(self):
        """The consensus gender of a confident verdict, else None."""
        return {
            Verdict.confident_male: GenderLabel.male,
            Verdict.confident_female: GenderLabel.female,
        }.get(self)


class SplitName(MyEnum):
    confident = "confident"
    human = "human"
    nature = "nature"
    all = "all"


class RunStatus(MyEnum):
    no_attempt = "Has not been attempted"
    running = "Running"
    successful = "Finished successfully"
    failed = "Finished, but failed"
