from capfair.lexicon.inventory import default_lexicon, load_lexicon
from capfair.lexicon.tokenize import classify, norms, render, tokenize
