"""Deterministic report fixtures shared by report, renderer and golden tests."""
import random

from simdiff.report import AnalysisReport
from simdiff.weighting import WeightedNGram, rank

TRIGRAM_ITEMS = [
    (("general", "theory", "relativity"), 0.004, 0.002, 1e-11, False, True),
    (("hebrew", "university", "of"), 0.001, 0.003, 2e-12, True, True),
    (("american", "philosophical", "society"), 0.001, 0.001, 5e-13, True, True),
]


def trigram_report():
    items = [WeightedNGram(g, f1, f2, fe, e, c, round((f1 ** 2 + f2 ** 2) * 1e6 * (1 + 0.25 * (e + c)), 6))
             for g, f1, f2, fe, e, c in TRIGRAM_ITEMS]
    meta = {"tool_version": "0.1.0", "composition": "product", "nf": 1e6,
            "timestamp": "2025-01-01T00:00:00+00:00"}
    scheme = {"kind": "final", "nf": 1e6, "entity_presence": 0.5,
              "chunk_presence": 0.5, "log_base": "e"}
    return AnalysisReport("Albert Einstein", "Stephen Hawking", scheme, {3: rank(items)}, meta)


WORDS = ("theory universe energy relativity physics paper scientific university "
         "divorce music time state family quantum black hole nobel prize gravity "
         "light wave field particle star galaxy cosmology radiation mass space "
         "equation lecture professor student award medal society royal academy "
         "institute cambridge princeton berlin zurich london caltech jerusalem "
         "violin piano book child marriage").split()


def fifty_term_report(seed=0):
    rng = random.Random(seed)
    items = [WeightedNGram((w,), 0.01, 0.01, 1e-5, False, True, round(rng.uniform(1, 400), 3))
             for w in WORDS[:50]]
    return AnalysisReport("a", "b", {"kind": "final"}, {1: rank(items)}, {})
