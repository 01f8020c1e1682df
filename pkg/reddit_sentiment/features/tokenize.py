"""Tokenizer shared by keyword matching and the classifiers"""
import re

# runs of letters, digits and apostrophes; "_" is a word character for re but not alphanumeric
_TOKEN_RE = re.compile(r"(?:[^\W_]|')+")
# typographic apostrophe U+2019
APOSTROPHES = str.maketrans({"\u2019": "'"})


def tokenize(text: str) -> list[str]:
    """
    Split text into lowercase tokens

    Any character that is neither alphanumeric nor an apostrophe separates tokens,
    so "Covid-19 vaccines!" gives ["covid", "19", "vaccines"] and "don't" stays whole.
    A typographic apostrophe is read as a plain one.

    Args:
        text: Text to split

    Returns:
        List of tokens, empty for empty text
    """
    if not text:
        return []
    return _TOKEN_RE.findall(text.lower().translate(APOSTROPHES))
