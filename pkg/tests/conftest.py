import random

import pytest

from simdiff.freqdict import load_dictionary


def write_dictionary(path, counts, filler=1000):
    """Write a frequency list padded with filler rows to pass the size check."""
    lines = ["# test dictionary"]
    lines += [f"{tok}\t{c}" for tok, c in counts.items()]
    lines += [f"filler{i:05d}\t1" for i in range(filler)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def make_dict_file(tmp_path):
    def make(counts, filler=1000, name="dict.tsv"):
        return write_dictionary(tmp_path / name, counts, filler)
    return make


@pytest.fixture(scope="session")
def english():
    return load_dictionary()


def random_text(rng: random.Random, n_tokens: int, vocab=None) -> str:
    """Random prose with punctuation, capitals and sentence breaks."""
    vocab = vocab or ["alpha", "beta", "gamma", "delta", "theory", "black", "hole",
                      "energy", "the", "of", "physics", "star", "light", "Einstein",
                      "Hawking", "quantum", "field", "wave", "time", "mass"]
    out = []
    start = True
    for _ in range(n_tokens):
        w = rng.choice(vocab)
        if start:
            w = w[0].upper() + w[1:]
            start = False
        out.append(w)
        r = rng.random()
        if r < 0.08:
            out[-1] += rng.choice([".", "!", "?"])
            start = True
        elif r < 0.14:
            out[-1] += rng.choice([",", ";", ":"])
        elif r < 0.16:
            out.append(rng.choice(["-", "(", ")", '"']))
    return " ".join(out)
