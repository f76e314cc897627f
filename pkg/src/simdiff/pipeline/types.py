from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import Tuple

from ..errors import EmptyInputError

Span = Tuple[int, int]  # half-open token-index range


class Pos(str, enum.Enum):
    NOUN = "NOUN"
    PROPN = "PROPN"
    VERB = "VERB"
    ADJ = "ADJ"
    DET = "DET"
    ADP = "ADP"
    PRON = "PRON"
    NUM = "NUM"
    PUNCT = "PUNCT"
    OTHER = "OTHER"


class SourceKind(str, enum.Enum):
    FILE = "file"
    GUTENBERG = "gutenberg"
    WIKIPEDIA = "wikipedia"


@dataclass(frozen=True)
class RawDocument:
    """A document as fetched, before any processing.

    ``text`` is stored NFC-normalized; token offsets refer to this form.
    """

    id: str
    text: str
    source: SourceKind = SourceKind.FILE

    def __post_init__(self):
        if not self.text or not self.text.strip():
            raise EmptyInputError(f"document {self.id!r} is empty")
        object.__setattr__(self, "text", unicodedata.normalize("NFC", self.text))
        object.__setattr__(self, "source", SourceKind(self.source))


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: Pos
    start: int
    end: int
    sentence_index: int

    @property
    def char_span(self) -> Span:
        return (self.start, self.end)


@dataclass(frozen=True)
class ProcessedDocument:
    id: str
    tokens: Tuple[Token, ...]
    sentences: Tuple[Span, ...]
    noun_chunks: Tuple[Span, ...] = field(default=())
    entities: Tuple[Span, ...] = field(default=())
