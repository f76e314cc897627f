"""Per-document word n-gram tables over lemmas."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Set, Tuple

from .errors import OrderError
from .pipeline import Pos, ProcessedDocument, Span

NGram = Tuple[str, ...]
ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class NGramFlags:
    is_entity: bool = False
    is_noun_chunk: bool = False

    def __or__(self, other: "NGramFlags") -> "NGramFlags":
        return NGramFlags(self.is_entity or other.is_entity,
                          self.is_noun_chunk or other.is_noun_chunk)


@dataclass(frozen=True)
class NGramTable:
    doc_id: str
    n: int
    counts: Mapping[NGram, int]
    flags: Mapping[NGram, NGramFlags] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", MappingProxyType(dict(self.counts)))
        object.__setattr__(self, "flags", MappingProxyType(dict(self.flags)))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def relative_frequency(self, gram: NGram) -> float:
        return self.counts[gram] / self.total

    def flags_for(self, gram: NGram) -> NGramFlags:
        return self.flags.get(gram, NGramFlags())

    def __len__(self):
        return len(self.counts)

    def __contains__(self, gram):
        return gram in self.counts


def check_order(n: int) -> int:
    if n not in ORDERS:
        raise OrderError(f"n-gram order must be one of {ORDERS}, got {n!r}")
    return n


def _inside(first: int, last: int, spans: Sequence[Span]) -> bool:
    return any(s <= first and last < e for s, e in spans)


def _by_sentence(doc: ProcessedDocument, spans: Sequence[Span]) -> Dict[int, List[Span]]:
    buckets: Dict[int, List[Span]] = {}
    for s, e in spans:
        buckets.setdefault(doc.tokens[s].sentence_index, []).append((s, e))
    return buckets


def extract_ngrams(doc: ProcessedDocument, n: int) -> NGramTable:
    """Count lemma n-grams inside sentences, skipping punctuation tokens.

    An n-gram is flagged as an entity (noun chunk) when at least one of its
    occurrences lies inside, or exactly on, an entity (noun-chunk) span.
    """
    check_order(n)
    counts: Counter = Counter()
    flags: Dict[NGram, NGramFlags] = {}
    tokens = doc.tokens
    ent_spans = _by_sentence(doc, doc.entities)
    chunk_spans = _by_sentence(doc, doc.noun_chunks)
    for s_idx, (start, end) in enumerate(doc.sentences):
        ents = ent_spans.get(s_idx, [])
        chunks = chunk_spans.get(s_idx, [])
        idx = [i for i in range(start, end) if tokens[i].pos is not Pos.PUNCT]
        for k in range(len(idx) - n + 1):
            first, last = idx[k], idx[k + n - 1]
            gram = tuple(tokens[i].lemma for i in idx[k:k + n])
            counts[gram] += 1
            f = NGramFlags(_inside(first, last, ents), _inside(first, last, chunks))
            flags[gram] = flags[gram] | f if gram in flags else f
    return NGramTable(doc.id, n, counts, flags)


def common_ngrams(t1: NGramTable, t2: NGramTable) -> Set[NGram]:
    if t1.n != t2.n:
        raise OrderError(f"cannot intersect tables of order {t1.n} and {t2.n}")
    return set(t1.counts).intersection(t2.counts)
