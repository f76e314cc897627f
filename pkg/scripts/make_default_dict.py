"""Regenerate src/simdiff/data/en_freq.tsv from the wordfreq English list.

Requires the optional ``wordfreq`` package.  Counts are frequencies scaled to
occurrences per billion words.
"""
import argparse
from pathlib import Path

import wordfreq
from importlib.metadata import version

HEADER = """\
# English word frequencies, occurrences per billion words.
# Derived from wordfreq {version} (https://github.com/rspeer/wordfreq),
# data licensed CC BY-SA 4.0.  Regenerate with scripts/make_default_dict.py.
"""


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=40000)
    parser.add_argument("-o", "--output", type=Path,
                        default=Path(__file__).resolve().parents[1] / "src/simdiff/data/en_freq.tsv")
    args = parser.parse_args()

    lines = [HEADER.format(version=version("wordfreq")).rstrip("\n")]
    for word in wordfreq.top_n_list("en", args.size):
        if not word.isalpha():
            continue
        count = round(wordfreq.word_frequency(word, "en") * 1e9)
        if count > 0:
            lines.append(f"{word}\t{count}")
    args.output.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 1} entries to {args.output}")


if __name__ == "__main__":
    main()
