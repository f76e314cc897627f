"""Regex tokenizer and rule-based sentence segmentation.

Tokens are words, numbers, English clitics ("'s", "n't") and single
punctuation characters.  Everything between tokens is whitespace, so the
token spans plus the gaps reproduce the input exactly.
"""
from __future__ import annotations

import re
import unicodedata
from typing import List, NamedTuple, Tuple

from ..errors import EmptyInputError
from .types import Span

_APOS = "['’]"
_TOKEN_RE = re.compile(
    rf"""
      (?P<ntword>[^\W\d_]+?(?=n{_APOS}t(?![^\W_])))   # "do" in "don't"
    | (?P<nt>n{_APOS}t(?![^\W_]))
    | (?P<clitic>(?<=[^\W\d_]){_APOS}(?:s|re|ve|ll|d|m)(?![^\W_]))
    | (?P<number>\d+(?:[.,:]\d+)*[^\W\d_]*)
    | (?P<word>[^\W\d_][^\W_]*)
    | (?P<punct>[^\w\s]|_)
    """,
    re.VERBOSE | re.IGNORECASE,
)

SENTENCE_FINAL = frozenset(".!?")
_CLOSERS = frozenset("\"')]}”’»")
_BLANK_LINE = re.compile(r"\n[^\S\n]*\n")

# Words after which a period does not end a sentence.
ABBREVIATIONS = frozenset(
    """
    mr mrs ms dr st prof jr sr etc vs inc ltd co corp gen col lt sgt capt
    rev hon mt no vol fig approx dept est al cf ca jan feb mar apr jun jul
    aug sep sept oct nov dec
    """.split()
)


class RawToken(NamedTuple):
    surface: str
    start: int
    end: int


def normalize(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def split_tokens(text: str) -> List[RawToken]:
    tokens = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        gap = text[pos:m.start()]
        assert not gap or gap.isspace(), f"untokenized text {gap!r}"
        tokens.append(RawToken(m.group(), m.start(), m.end()))
        pos = m.end()
    return tokens


def _is_boundary(text: str, tokens: List[RawToken], i: int) -> Tuple[bool, int]:
    """Decide whether a sentence ends after the terminator at ``tokens[i]``.

    Returns the decision and the index of the last token belonging to the
    sentence (closing quotes and brackets stay with the sentence they close).
    """
    j = i
    while (j + 1 < len(tokens) and tokens[j + 1].surface in _CLOSERS
           and tokens[j + 1].start == tokens[j].end):
        j += 1
    if j + 1 >= len(tokens):
        return False, j
    nxt = tokens[j + 1]
    gap = text[tokens[j].end:nxt.start]
    if not gap:
        return False, j
    if not nxt.surface[0].isupper():
        return False, j
    if tokens[i].surface == "." and i > 0:
        prev = tokens[i - 1]
        if prev.end == tokens[i].start:
            word = prev.surface
            if word.lower() in ABBREVIATIONS:
                return False, j
            # initials: "A. Einstein", "U.S. President"
            if len(word) == 1 and word.isalpha() and word.isupper():
                return False, j
    return True, j


def segment(text: str, tokens: List[RawToken]) -> List[Span]:
    """Group tokens into sentences; returns half-open token-index ranges."""
    sentences: List[Span] = []
    start = 0
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        end_here = -1
        if tok.surface in SENTENCE_FINAL:
            is_end, last = _is_boundary(text, tokens, i)
            if is_end:
                end_here = last
            i = last
        if end_here < 0 and i + 1 < n and _BLANK_LINE.search(text, tokens[i].end, tokens[i + 1].start):
            end_here = i
        if end_here >= 0:
            sentences.append((start, end_here + 1))
            start = end_here + 1
        i += 1
    if start < n:
        sentences.append((start, n))
    return sentences


def tokenize(text: str) -> Tuple[List[RawToken], List[Span]]:
    """Tokenize NFC-normalized ``text`` and split it into sentences."""
    if not text or not text.strip():
        raise EmptyInputError("input text is empty or whitespace only")
    text = normalize(text)
    tokens = split_tokens(text)
    return tokens, segment(text, tokens)
