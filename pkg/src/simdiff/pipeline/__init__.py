"""Deterministic text pipeline: tokenize, tag, lemmatize, chunk, find entities."""
from __future__ import annotations

from typing import Collection, List, Mapping, Optional, Tuple

from .chunker import detect_entities, extract_noun_chunks, load_gazetteer
from .lemmatizer import lemmatize, load_exceptions
from .tagger import pos_tag, tag_word
from .tokenizer import tokenize
from .types import Pos, ProcessedDocument, RawDocument, SourceKind, Span, Token

__all__ = [
    "Pos", "ProcessedDocument", "RawDocument", "SourceKind", "Span", "Token",
    "detect_entities", "extract_noun_chunks", "lemmatize", "lemma_of_word",
    "load_exceptions", "load_gazetteer", "pos_tag", "process", "tag_word",
    "tokenize",
]


def lemma_of_word(word: str, exceptions: Optional[Mapping[str, str]] = None) -> str:
    """Lemma of a lowercase word seen without context (frequency lists)."""
    word = word.lower()
    return lemmatize(word, tag_word(word), exceptions)


def _vocabularies(surfaces: List[str], sentences: List[Span]):
    """Words seen lowercase anywhere, and words capitalized mid-sentence."""
    lowercase = set()
    midcap = set()
    for start, end in sentences:
        for i in range(start, end):
            s = surfaces[i]
            if s[:1].islower():
                lowercase.add(s)
            elif s[:1].isupper() and i > start:
                midcap.add(s.lower())
    return lowercase, midcap - lowercase


def process(raw: RawDocument,
            gazetteer: Optional[Collection[Tuple[str, ...]]] = None,
            lemma_exceptions: Optional[Mapping[str, str]] = None) -> ProcessedDocument:
    """Run the full pipeline over one document."""
    raw_tokens, sentences = tokenize(raw.text)
    surfaces = [t.surface for t in raw_tokens]
    lowercase_vocab, proper_vocab = _vocabularies(surfaces, sentences)

    tokens: List[Token] = []
    chunks: List[Span] = []
    entities: List[Span] = []
    for s_idx, (start, end) in enumerate(sentences):
        words = surfaces[start:end]
        tags = pos_tag(words, sentence_initial=True, proper_vocab=proper_vocab)
        for k, (rt, tag) in enumerate(zip(raw_tokens[start:end], tags)):
            tokens.append(Token(
                surface=rt.surface,
                lemma=lemmatize(rt.surface, tag, lemma_exceptions),
                pos=tag,
                start=rt.start,
                end=rt.end,
                sentence_index=s_idx,
            ))
        chunks.extend((start + a, start + b) for a, b in extract_noun_chunks(tags))
        entities.extend(
            (start + a, start + b)
            for a, b in detect_entities(words, tags, lowercase_vocab, gazetteer)
        )
    return ProcessedDocument(
        id=raw.id,
        tokens=tuple(tokens),
        sentences=tuple(sentences),
        noun_chunks=tuple(chunks),
        entities=tuple(entities),
    )
