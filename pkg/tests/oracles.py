"""Slow, obviously-correct reference implementations used only by tests."""
from collections import Counter
from fractions import Fraction
from itertools import product

import mpmath


def brute_force_ngrams(tokens, n):
    """Recount n-grams from (lemma, is_punct, sentence_index) triples.

    Walks every start position and grows the window token by token, skipping
    punctuation and giving up at a sentence change.
    """
    counts = Counter()
    for i, (lemma, punct, sent) in enumerate(tokens):
        if punct:
            continue
        window = [lemma]
        j = i + 1
        while len(window) < n and j < len(tokens):
            l2, p2, s2 = tokens[j]
            if s2 != sent:
                break
            if not p2:
                window.append(l2)
            j += 1
        if len(window) == n:
            counts[tuple(window)] += 1
    return counts


def brute_force_chunks(tags):
    """Longest match of DET? (ADJ|NOUN|PROPN)* (NOUN|PROPN), left to right."""
    def matches(seq):
        if not seq or seq[-1] not in ("NOUN", "PROPN"):
            return False
        body = seq[1:] if seq[0] == "DET" else seq
        return bool(body) and all(t in ("ADJ", "NOUN", "PROPN") for t in body)

    spans = []
    i = 0
    while i < len(tags):
        best = None
        for j in range(len(tags), i, -1):
            if matches(tags[i:j]):
                best = j
                break
        if best is None:
            i += 1
        else:
            spans.append((i, best))
            i = best
    return spans


def exact_basic(f1, f2, fe):
    f1, f2, fe = map(Fraction, (f1, f2, fe))
    return (f1 - fe) ** 2 * (f2 - fe) ** 2


def exact_final(f1, f2, fe, entity, chunk, nf):
    f1, f2, fe, nf = map(Fraction, (f1, f2, fe, nf))
    mult = 1 + Fraction(1, 2) * ((Fraction(1, 2) if entity else 0) + (Fraction(1, 2) if chunk else 0))
    return ((f1 - fe) ** 2 * nf + (f2 - fe) ** 2 * nf) * mult


def precise_log(f1, f2, fe):
    with mpmath.workdps(40):
        f1, f2, fe = (mpmath.mpf(repr(v)) for v in (f1, f2, fe))
        return f1 * mpmath.log(f1 / fe) + f2 * mpmath.log(f2 / fe)


def precise_threshold(f1, f2, fe):
    with mpmath.workdps(40):
        a, b, e = (mpmath.mpf(repr(v)) for v in (f1, f2, fe))
        if e > min(a, b, e):
            return mpmath.mpf(0)
        return mpmath.log(a + 1) * mpmath.exp(b) / (mpmath.sqrt(e) + 1)


def all_tag_sequences(alphabet, max_len):
    for k in range(1, max_len + 1):
        yield from product(alphabet, repeat=k)
