import string

from capfair import GenderClass
from capfair.models.Lexicon import Lexicon, Token

PUNCTUATION = string.punctuation + "‘’“”…–—«»"


def tokenize(text):
    """
    Splits a caption into Tokens: lowercase, whitespace split, leading/trailing punctuation stripped
    (apostrophes inside a word are kept), empty pieces dropped.

    >>> [t.norm for t in tokenize("A man riding a bike.")]
    ['a', 'man', 'riding', 'a', 'bike']
    >>> [t.norm for t in tokenize("Two WOMEN, shopping!")]
    ['two', 'women', 'shopping']
    >>> [t.norm for t in tokenize("a woman's  hat -- ")]
    ['a', "woman's", 'hat']
    >>> tokenize("")
    []
    """
    tokens = []
    for piece in text.split():
        norm = piece.lower().strip(PUNCTUATION)
        if norm:
            tokens.append(Token(piece, norm, len(tokens)))
    return tokens


def norms(text):
    return tuple(t.norm for t in tokenize(text))


def render(tokens):
    """
    Joins token surfaces with single spaces.

    >>> render(tokenize("  A man,   riding "))
    'A man, riding'
    """
    return " ".join(t.surface for t in tokens)


def classify(lexicon: Lexicon, token: Token) -> GenderClass:
    """
    >>> from capfair.lexicon.inventory import default_lexicon
    >>> lex = default_lexicon()
    >>> [str(classify(lex, t)) for t in tokenize("Ladies and a snowboarder on a bike")]
    ['FemalePlural', 'NonHuman', 'NonHuman', 'NeutralHumanSingular', 'NonHuman', 'NonHuman', 'NonHuman']
    """
    return lexicon.class_of(token.norm)
