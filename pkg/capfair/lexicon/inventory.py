import configparser
import logging
import os

from capfair import GenderLabel, LexiconMappingError, ParseError
from capfair.models.Lexicon import SET_SECTIONS, Lexicon
from capfair.util.helpers import split_words

log = logging.getLogger(__name__)

DEFAULT_WORDS = {
    "male_singular": ("man", "guy", "boy", "gentleman", "male"),
    "male_plural": ("men", "guys", "boys", "gentlemen", "males"),
    "female_singular": ("woman", "lady", "girl", "female"),
    "female_plural": ("women", "ladies", "girls", "females"),
    "neutral_singular": (
        "person",
        "player",
        "skier",
        "snowboarder",
        "surfer",
        "rider",
        "child",
        "kid",
        "human",
    ),
    "neutral_plural": (
        "people",
        "players",
        "skiers",
        "snowboarders",
        "surfers",
        "riders",
        "children",
        "kids",
        "humans",
    ),
}

DEFAULT_PLURAL_OF = {
    "man": "men",
    "guy": "guys",
    "boy": "boys",
    "gentleman": "gentlemen",
    "male": "males",
    "woman": "women",
    "lady": "ladies",
    "girl": "girls",
    "female": "females",
    "person": "people",
    "player": "players",
    "skier": "skiers",
    "snowboarder": "snowboarders",
    "surfer": "surfers",
    "rider": "riders",
    "child": "children",
    "kid": "kids",
    "human": "humans",
}

DEFAULT_COUNTERPARTS = {
    "man": "woman",
    "men": "women",
    "boy": "girl",
    "boys": "girls",
    "gentleman": "lady",
    "gentlemen": "ladies",
    "male": "female",
    "males": "females",
}

TARGET_KEYS = {
    "male_singular": (GenderLabel.male, False),
    "male_plural": (GenderLabel.male, True),
    "female_singular": (GenderLabel.female, False),
    "female_plural": (GenderLabel.female, True),
}

KNOWN_SECTIONS = {name for name, _ in SET_SECTIONS} | {"plural_of", "targets", "counterparts"}


def default_lexicon() -> Lexicon:
    """
    The built-in inventory.

    >>> lex = default_lexicon()
    >>> "guy" in lex.male_singular, str(lex.class_of("male")), lex.neutral_target_plural
    (True, 'MaleSingular', 'people')
    """
    return _build({name: set(words) for name, words in DEFAULT_WORDS.items()})


def _build(word_sets, targets=None, extra_plural_of=None, extra_counterparts=None) -> Lexicon:
    targets = targets or {}
    gendered_target = {
        (GenderLabel.male, False): "man",
        (GenderLabel.male, True): "men",
        (GenderLabel.female, False): "woman",
        (GenderLabel.female, True): "women",
    }
    for key, value in targets.items():
        if key in TARGET_KEYS:
            gendered_target[TARGET_KEYS[key]] = value

    # built-in pairs survive only while both words are still in the inventory; user pairs are validated
    known = set().union(*word_sets.values())
    plural_of = {s: p for s, p in DEFAULT_PLURAL_OF.items() if s in known and p in known}
    plural_of.update(extra_plural_of or {})
    counterparts = {m: f for m, f in DEFAULT_COUNTERPARTS.items() if m in known and f in known}
    counterparts.update(extra_counterparts or {})

    return Lexicon(
        male_singular=word_sets["male_singular"],
        male_plural=word_sets["male_plural"],
        female_singular=word_sets["female_singular"],
        female_plural=word_sets["female_plural"],
        neutral_human_singular=word_sets["neutral_singular"],
        neutral_human_plural=word_sets["neutral_plural"],
        plural_of=plural_of,
        neutral_target_singular=targets.get("neutral_singular", "person"),
        neutral_target_plural=targets.get("neutral_plural", "people"),
        gendered_target=gendered_target,
        counterparts=counterparts,
    )


def load_lexicon(path) -> Lexicon:
    """
    Reads a lexicon config file.  Every section is optional and extends or overrides the built-in
    inventory, so an empty file yields `default_lexicon()`.

    .. code-block:: ini

        [male_singular]
        add = dude
        [male_plural]
        add = dudes
        [plural_of]
        dude = dudes
        [targets]
        neutral_singular = person

    Word-set sections accept `words` (replaces the set), `add` and `remove`.
    """
    if not os.path.exists(path):
        raise ParseError("lexicon file %s does not exist" % path)

    cp = configparser.ConfigParser(delimiters=("=",), interpolation=None)
    try:
        with open(path, "r", encoding="utf-8") as fp:
            cp.read_file(fp)
    except configparser.Error as e:
        raise ParseError("cannot parse lexicon file %s: %s" % (path, e))

    unknown = [s for s in cp.sections() if s not in KNOWN_SECTIONS]
    if unknown:
        raise ParseError(
            "lexicon file %s has unknown section(s) %s; expected %s"
            % (path, ", ".join(unknown), ", ".join(sorted(KNOWN_SECTIONS)))
        )

    word_sets = {name: set(words) for name, words in DEFAULT_WORDS.items()}
    for name, _ in SET_SECTIONS:
        if not cp.has_section(name):
            continue
        section = cp[name]
        bad_keys = set(section) - {"words", "add", "remove"}
        if bad_keys:
            raise ParseError("[%s] in %s: unknown key(s) %s" % (name, path, ", ".join(sorted(bad_keys))))
        if "words" in section:
            word_sets[name] = set(w.lower() for w in split_words(section["words"]))
        word_sets[name] |= set(w.lower() for w in split_words(section.get("add", "")))
        word_sets[name] -= set(w.lower() for w in split_words(section.get("remove", "")))

    plural_of = {}
    if cp.has_section("plural_of"):
        plural_of = {k.lower(): v.strip().lower() for k, v in cp["plural_of"].items()}

    counterparts = {}
    if cp.has_section("counterparts"):
        counterparts = {k.lower(): v.strip().lower() for k, v in cp["counterparts"].items()}

    targets = {}
    if cp.has_section("targets"):
        targets = {k: v.strip().lower() for k, v in cp["targets"].items()}
        bad_keys = set(targets) - set(TARGET_KEYS) - {"neutral_singular", "neutral_plural"}
        if bad_keys:
            bad = ", ".join(sorted(bad_keys))
            raise LexiconMappingError("[targets] in %s: unknown key(s) %s" % (path, bad))

    lexicon = _build(word_sets, targets, plural_of, counterparts)
    log.debug("loaded lexicon from %s (%d words)", path, len(lexicon.all_words))
    return lexicon
