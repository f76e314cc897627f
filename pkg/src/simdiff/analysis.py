"""Common n-gram analysis of two processed documents."""
from __future__ import annotations

from datetime import datetime, timezone
from typing import Iterable

from . import __version__
from .freqdict import FrequencyDictionary
from .ngrams import ORDERS, check_order, extract_ngrams
from .pipeline import ProcessedDocument
from .report import AnalysisReport
from .weighting import WeightScheme, score_common


def compare(doc1: ProcessedDocument, doc2: ProcessedDocument,
            dictionary: FrequencyDictionary, scheme: WeightScheme = WeightScheme(),
            orders: Iterable[int] = ORDERS) -> AnalysisReport:
    """Find the n-grams the two documents share and rank them by weight."""
    orders = sorted({check_order(n) for n in orders})
    per_n = {}
    for n in orders:
        t1 = extract_ngrams(doc1, n)
        t2 = extract_ngrams(doc2, n)
        per_n[n] = score_common(t1, t2, dictionary, scheme)
    metadata = {
        "tool_version": __version__,
        "dictionary": dictionary.describe(),
        "composition": dictionary.composition.value,
        "nf": scheme.nf,
        "clamp_rule": "negative log-scheme weights are clamped to 0",
        "threshold_rule": "weight is 0 when fe > min(f1, f2)",
        "frequency_units": "relative frequency in (0, 1]",
        "ngram_rules": "lemmas; punctuation skipped; no sentence crossing",
        "flag_rule": "flag set when an occurrence lies inside or on a span",
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    return AnalysisReport(doc1.id, doc2.id, scheme.describe(), per_n, metadata)
