"""Tag-pattern noun chunker and capitalization-run entity detector."""
from __future__ import annotations

import re
from typing import AbstractSet, Collection, List, Optional, Sequence, Tuple

from .types import Pos, Span

_TAG_CHARS = {Pos.DET: "D", Pos.ADJ: "A", Pos.NOUN: "N", Pos.PROPN: "P"}
# (DET)? (ADJ|NOUN|PROPN)* (NOUN|PROPN); greedy, leftmost, non-overlapping
_CHUNK_RE = re.compile(r"D?[ANP]*[NP]")


def extract_noun_chunks(tags: Sequence[Pos]) -> List[Span]:
    """Return noun-chunk spans as half-open indices into ``tags``."""
    encoded = "".join(_TAG_CHARS.get(Pos(t), "x") for t in tags)
    return [m.span() for m in _CHUNK_RE.finditer(encoded)]


def load_gazetteer(path) -> List[Tuple[str, ...]]:
    """One entity per line; each entry is stored as a lowercase word tuple."""
    from .tokenizer import split_tokens

    entries = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                entries.add(tuple(t.surface.lower() for t in split_tokens(line)))
    return sorted(entries, key=lambda e: (-len(e), e))


def detect_entities(words: Sequence[str], tags: Sequence[Pos],
                    lowercase_vocab: AbstractSet[str] = frozenset(),
                    gazetteer: Optional[Collection[Tuple[str, ...]]] = None,
                    sentence_initial: bool = True) -> List[Span]:
    """Return named-entity spans for one tagged sentence.

    Entities are maximal runs of PROPN tokens.  A lone sentence-initial token
    whose lowercase form occurs elsewhere in the document is not an entity.
    Gazetteer phrases (lowercase word tuples) are marked as entities too and
    merged with adjacent runs.
    """
    n = len(words)
    marked = [Pos(t) is Pos.PROPN for t in tags]

    if gazetteer:
        lowered = [w.lower() for w in words]
        i = 0
        while i < n:
            for entry in gazetteer:
                k = len(entry)
                if k and tuple(lowered[i:i + k]) == tuple(entry):
                    for j in range(i, i + k):
                        marked[j] = True
                    i += k - 1
                    break
            i += 1

    spans = []
    i = 0
    while i < n:
        if not marked[i]:
            i += 1
            continue
        j = i
        while j < n and marked[j]:
            j += 1
        spans.append((i, j))
        i = j

    if spans and sentence_initial and spans[0] == (0, 1):
        if words[0].lower() in lowercase_vocab and not _in_gazetteer(words[0], gazetteer):
            spans = spans[1:]
    return spans


def _in_gazetteer(word: str, gazetteer) -> bool:
    return bool(gazetteer) and (word.lower(),) in set(gazetteer)
