"""Scoring schemes for common n-grams.

Every scheme maps the relative frequencies of an n-gram in the two documents
(``f1``, ``f2``) and its English baseline frequency (``fe``) to a
non-negative weight.  Frequencies are dimensionless, in (0, 1].
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import List

from .errors import WeightDomainError
from .freqdict import FrequencyDictionary
from .ngrams import NGram, NGramTable, common_ngrams

DEFAULT_NF = 1e6
ENTITY_PRESENCE = 0.5
CHUNK_PRESENCE = 0.5


class SchemeKind(str, enum.Enum):
    BASIC = "basic"
    LOG = "log"
    THRESHOLD = "threshold"
    FINAL = "final"


def _check(f1: float, f2: float, fe: float) -> None:
    for name, v in (("f1", f1), ("f2", f2), ("fe", fe)):
        if not (0.0 < v <= 1.0):
            raise WeightDomainError(f"{name}={v!r} is outside (0, 1]")


def weight_basic(f1: float, f2: float, fe: float) -> float:
    _check(f1, f2, fe)
    return (f1 - fe) ** 2 * (f2 - fe) ** 2


def weight_log(f1: float, f2: float, fe: float, clamp: bool = True) -> float:
    """Entropy-style weight; negative values (both below baseline) clamp to 0."""
    _check(f1, f2, fe)
    raw = f1 * math.log(f1 / fe) + f2 * math.log(f2 / fe)
    return max(raw, 0.0) if clamp else raw


def weight_threshold(f1: float, f2: float, fe: float) -> float:
    """Zero when English uses the n-gram more than either document does."""
    _check(f1, f2, fe)
    threshold = min(f1, f2, fe)
    if fe > threshold:
        return 0.0
    return math.log(f1 + 1.0) * math.exp(f2) / (math.sqrt(fe) + 1.0)


def base_multiplier(is_entity: bool, is_noun_chunk: bool,
                    entity_presence: float = ENTITY_PRESENCE,
                    chunk_presence: float = CHUNK_PRESENCE) -> float:
    e = entity_presence if is_entity else 0.0
    c = chunk_presence if is_noun_chunk else 0.0
    return 1.0 + 0.5 * (e + c)


def weight_final(f1: float, f2: float, fe: float, is_entity: bool = False,
                 is_noun_chunk: bool = False, nf: float = DEFAULT_NF,
                 entity_presence: float = ENTITY_PRESENCE,
                 chunk_presence: float = CHUNK_PRESENCE) -> float:
    _check(f1, f2, fe)
    if not nf > 0:
        raise WeightDomainError(f"normalization factor must be positive, got {nf!r}")
    d1 = (f1 - fe) ** 2 * nf
    d2 = (f2 - fe) ** 2 * nf
    return (d1 + d2) * base_multiplier(is_entity, is_noun_chunk,
                                       entity_presence, chunk_presence)


@dataclass(frozen=True)
class WeightScheme:
    kind: SchemeKind = SchemeKind.FINAL
    nf: float = DEFAULT_NF
    entity_presence: float = ENTITY_PRESENCE
    chunk_presence: float = CHUNK_PRESENCE

    def __post_init__(self):
        object.__setattr__(self, "kind", SchemeKind(self.kind))
        if not self.nf > 0:
            raise WeightDomainError(f"normalization factor must be positive, got {self.nf!r}")

    def score(self, f1: float, f2: float, fe: float,
              is_entity: bool = False, is_noun_chunk: bool = False) -> float:
        if self.kind is SchemeKind.BASIC:
            return weight_basic(f1, f2, fe)
        if self.kind is SchemeKind.LOG:
            return weight_log(f1, f2, fe)
        if self.kind is SchemeKind.THRESHOLD:
            return weight_threshold(f1, f2, fe)
        return weight_final(f1, f2, fe, is_entity, is_noun_chunk, self.nf,
                            self.entity_presence, self.chunk_presence)

    def describe(self) -> dict:
        return {
            "kind": self.kind.value,
            "nf": self.nf,
            "entity_presence": self.entity_presence,
            "chunk_presence": self.chunk_presence,
            "log_base": "e",
        }


@dataclass(frozen=True)
class WeightedNGram:
    gram: NGram
    f1: float
    f2: float
    fe: float
    is_entity: bool
    is_noun_chunk: bool
    weight: float

    @property
    def text(self) -> str:
        return " ".join(self.gram)


def rank(items: List[WeightedNGram]) -> List[WeightedNGram]:
    """Sort by descending weight, ties broken by the lemma sequence."""
    return sorted(items, key=lambda w: (-w.weight, w.gram))


def score_common(t1: NGramTable, t2: NGramTable, dictionary: FrequencyDictionary,
                 scheme: WeightScheme) -> List[WeightedNGram]:
    scored = []
    for gram in common_ngrams(t1, t2):
        f1 = t1.relative_frequency(gram)
        f2 = t2.relative_frequency(gram)
        fe = dictionary.baseline(gram)
        flags = t1.flags_for(gram) | t2.flags_for(gram)
        weight = scheme.score(f1, f2, fe, flags.is_entity, flags.is_noun_chunk)
        scored.append(WeightedNGram(gram, f1, f2, fe, flags.is_entity,
                                    flags.is_noun_chunk, weight))
    return rank(scored)
