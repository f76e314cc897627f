"""English baseline frequencies for n-grams.

The dictionary file is UTF-8 text with one ``token<TAB>count`` entry per
line; lines starting with ``#`` are comments.  Tokens are lemmatized on load
and duplicate lemmas are merged by summing counts.
"""
from __future__ import annotations

import enum
import hashlib
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Optional, Sequence, Union

from .errors import (DictError, DictFileNotFoundError, DictParseError,
                     DictTooSmallError, EmptyCorpusError)
from ._io import atomic_write
from .pipeline import lemma_of_word, tokenize
from .pipeline.tagger import is_punct

MIN_ENTRIES = 1000
DEFAULT_EPSILON = 1e-9
DEFAULT_DICT_NAME = "en_freq.tsv"


class Composition(str, enum.Enum):
    PRODUCT = "product"  # independence baseline
    MIN = "min"

    @classmethod
    def parse(cls, value) -> "Composition":
        if isinstance(value, cls):
            return value
        aliases = {"independence_product": "product", "min_unigram": "min"}
        return cls(aliases.get(value, value))


@dataclass(frozen=True)
class FrequencyDictionary:
    unigram_freq: Mapping[str, float]
    epsilon_floor: float = DEFAULT_EPSILON
    composition: Composition = Composition.PRODUCT
    path: Optional[str] = None
    sha256: Optional[str] = None
    entries: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "unigram_freq", MappingProxyType(dict(self.unigram_freq)))
        object.__setattr__(self, "composition", Composition.parse(self.composition))
        if not self.epsilon_floor > 0:
            raise DictError(f"epsilon floor must be positive, got {self.epsilon_floor}")
        if self.unigram_freq:
            lowest = min(self.unigram_freq.values())
            if self.epsilon_floor > lowest:
                raise DictError(
                    f"epsilon floor {self.epsilon_floor:g} exceeds the smallest "
                    f"stored frequency {lowest:g}")

    @classmethod
    def from_counts(cls, counts: Mapping[str, int], **kwargs) -> "FrequencyDictionary":
        """Normalize raw counts (keys taken as lemmas) into a dictionary."""
        total = sum(counts.values())
        freqs = {k: c / total for k, c in counts.items() if c > 0}
        return cls(freqs, entries=len(freqs), **kwargs)

    def unigram(self, lemma: str) -> float:
        return max(self.unigram_freq.get(lemma, 0.0), self.epsilon_floor)

    def baseline(self, gram: Sequence[str]) -> float:
        factors = [self.unigram(w) for w in gram]
        if len(factors) == 1:
            return factors[0]
        if self.composition is Composition.MIN:
            return min(factors)
        return math.prod(factors)

    def describe(self) -> dict:
        return {
            "path": self.path,
            "sha256": self.sha256,
            "entries": len(self.unigram_freq),
            "composition": self.composition.value,
            "epsilon_floor": self.epsilon_floor,
            "level": "lemma",
        }


def baseline_freq(gram: Sequence[str], d: FrequencyDictionary) -> float:
    """Baseline frequency f_e of an n-gram; always strictly positive."""
    return d.baseline(gram)


def default_dictionary_path() -> Path:
    return Path(str(resources.files("simdiff") / "data" / DEFAULT_DICT_NAME))


def _parse(path: Path) -> Counter:
    counts: Counter = Counter()
    rows = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DictParseError(path, lineno, "expected 'token<TAB>count'")
            token, raw = parts[0].strip(), parts[1].strip()
            if not token:
                raise DictParseError(path, lineno, "empty token")
            try:
                count = int(raw)
            except ValueError:
                raise DictParseError(path, lineno, f"count {raw!r} is not an integer") from None
            if count < 0:
                raise DictParseError(path, lineno, "negative count")
            rows += 1
            counts[lemma_of_word(token)] += count
    if rows < MIN_ENTRIES:
        raise DictTooSmallError(
            f"{path}: {rows} entries; a baseline needs at least {MIN_ENTRIES}")
    return counts


def load_dictionary(path: Union[str, os.PathLike, None] = None,
                    epsilon_floor: float = DEFAULT_EPSILON,
                    composition: Union[str, Composition] = Composition.PRODUCT
                    ) -> FrequencyDictionary:
    """Load a frequency list; ``path=None`` loads the bundled default list."""
    path = Path(path) if path is not None else default_dictionary_path()
    if not path.is_file():
        raise DictFileNotFoundError(f"dictionary file not found: {path}")
    try:
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        counts = _parse(path)
    except UnicodeDecodeError as exc:
        raise DictError(f"{path}: not valid UTF-8 ({exc})") from None
    if sum(counts.values()) == 0:
        raise DictError(f"{path}: all counts are zero")
    return FrequencyDictionary.from_counts(
        counts, epsilon_floor=epsilon_floor, composition=composition,
        path=str(path), sha256=digest)


def count_text(text: str) -> Counter:
    """Context-free lemma counts of the words in ``text``."""
    tokens, _ = tokenize(text)
    return Counter(lemma_of_word(t.surface) for t in tokens if not is_punct(t.surface))


def count_corpus(corpus_dir: Union[str, os.PathLike]) -> Counter:
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise EmptyCorpusError(f"{corpus_dir} is not a directory")
    counts: Counter = Counter()
    for p in sorted(corpus_dir.rglob("*")):
        if not p.is_file():
            continue
        text = p.read_text(encoding="utf-8")
        if text.strip():
            counts.update(count_text(text))
    if not counts:
        raise EmptyCorpusError(f"no text found under {corpus_dir}")
    return counts


def format_counts(counts: Mapping[str, int]) -> str:
    lines = ["# token\tcount"]
    for token, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
        lines.append(f"{token}\t{count}")
    return "\n".join(lines) + "\n"


def build_dictionary(corpus_dir: Union[str, os.PathLike],
                     out_path: Union[str, os.PathLike]) -> Counter:
    """Count lemmas over every file in ``corpus_dir`` and write a frequency list."""
    counts = count_corpus(corpus_dir)
    atomic_write(out_path, format_counts(counts))
    return counts
