"""``simdiff`` command line.

    simdiff compare SOURCE1 SOURCE2 [--json F] [--csv F] [--svg F] ...
    simdiff dict build CORPUS_DIR -o dict.tsv
    simdiff fetch SOURCE -o out.txt

Sources are ``wiki:Title``, ``gutenberg:ID`` or a local path.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from ._io import atomic_write
from .analysis import compare
from .errors import (CacheWriteError, DictError, EmptyCorpusError,
                     MarkerNotFoundError, NetworkError, NGramError, NotFoundError,
                     PipelineError, ReportError, SimdiffError, SourceError,
                     WeightDomainError)
from .freqdict import DEFAULT_EPSILON, Composition, build_dictionary, load_dictionary
from .ingest import SourceSpec, Transport, fetch
from .pipeline import load_exceptions, load_gazetteer, process
from .report import to_csv, to_json
from .weighting import DEFAULT_NF, SchemeKind, WeightScheme
from .wordcloud import render_wordcloud

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2

# (exception class, exit code, stage label); first match wins
ERROR_CODES: List[Tuple[type, int, str]] = [
    (SourceError, 3, "input"),
    (NotFoundError, 4, "fetch"),
    (NetworkError, 5, "fetch"),
    (CacheWriteError, 6, "cache"),
    (MarkerNotFoundError, 7, "gutenberg"),
    (EmptyCorpusError, 8, "corpus"),
    (DictError, 9, "dictionary"),
    (PipelineError, 10, "pipeline"),
    (NGramError, 11, "ngrams"),
    (WeightDomainError, 12, "weighting"),
    (ReportError, 13, "report"),
]
EXIT_OUTPUT = 14
DEFAULT_CACHE_ENV = "SIMDIFF_CACHE_DIR"


@dataclass
class RunConfig:
    source1: SourceSpec
    source2: SourceSpec
    dict_path: Optional[Path] = None
    scheme: SchemeKind = SchemeKind.FINAL
    nf: float = DEFAULT_NF
    composition: Composition = Composition.PRODUCT
    epsilon_floor: float = DEFAULT_EPSILON
    orders: Tuple[int, ...] = (1, 2, 3)
    top_k: int = 50
    json_path: Optional[Path] = None
    csv_path: Optional[Path] = None
    svg_path: Optional[Path] = None
    seed: int = 0
    width: int = 800
    height: int = 600
    entity_presence: float = 0.5
    chunk_presence: float = 0.5
    gazetteer: Optional[Path] = None
    lemma_exceptions: Optional[Path] = None
    stdout_table: bool = field(default=False)

    def __post_init__(self):
        if not self.orders:
            raise ValueError("at least one n-gram order is required")
        if self.top_k < 1:
            raise ValueError("--top-k must be at least 1")
        if not (self.json_path or self.csv_path or self.svg_path):
            self.stdout_table = True


def per_order_path(path: Path, n: int, orders: Sequence[int]) -> Path:
    """``out.csv`` -> ``out.n2.csv`` when several orders share one path."""
    text = str(path)
    if "{n}" in text:
        return Path(text.replace("{n}", str(n)))
    if len(orders) == 1:
        return path
    return path.with_name(f"{path.stem}.n{n}{path.suffix}")


def cmd_compare(config: RunConfig, transport: Optional[Transport] = None,
                out=None) -> int:
    out = out or sys.stdout
    dictionary = load_dictionary(config.dict_path, config.epsilon_floor, config.composition)
    gazetteer = load_gazetteer(config.gazetteer) if config.gazetteer else None
    exceptions = load_exceptions(config.lemma_exceptions) if config.lemma_exceptions else None
    raw1 = fetch(config.source1, transport)
    raw2 = fetch(config.source2, transport)
    doc1 = process(raw1, gazetteer, exceptions)
    doc2 = process(raw2, gazetteer, exceptions)
    scheme = WeightScheme(config.scheme, config.nf, config.entity_presence,
                          config.chunk_presence)
    report = compare(doc1, doc2, dictionary, scheme, config.orders)

    # render everything before writing anything
    outputs: Dict[Path, bytes] = {}
    if config.json_path:
        outputs[config.json_path] = to_json(report)
    for n in sorted(report.per_n):
        if config.csv_path:
            outputs[per_order_path(config.csv_path, n, config.orders)] = to_csv(report, n)
        if config.svg_path and report.per_n[n]:
            outputs[per_order_path(config.svg_path, n, config.orders)] = render_wordcloud(
                report, n, config.top_k, config.width, config.height, config.seed)
    try:
        for path, data in outputs.items():
            atomic_write(path, data)
    except OSError as exc:
        print(f"simdiff: output: {exc}", file=sys.stderr)
        return EXIT_OUTPUT

    if config.stdout_table:
        for n in sorted(report.per_n):
            print(f"# top {n}-grams: {report.doc1_id} vs {report.doc2_id} "
                  f"(scheme={scheme.kind.value})", file=out)
            for w in report.top(n, config.top_k):
                flags = ("E" if w.is_entity else "-") + ("C" if w.is_noun_chunk else "-")
                print(f"{w.weight:14.6g}  {flags}  {w.text}", file=out)
    return EXIT_OK


def cmd_dict_build(corpus_dir, out_path) -> int:
    counts = build_dictionary(corpus_dir, out_path)
    print(f"wrote {len(counts)} entries to {out_path}", file=sys.stderr)
    return EXIT_OK


def cmd_fetch(spec: SourceSpec, out_path, transport: Optional[Transport] = None) -> int:
    doc = fetch(spec, transport)
    atomic_write(out_path, doc.text)
    return EXIT_OK


def _orders(value: str) -> Tuple[int, ...]:
    try:
        orders = tuple(sorted({int(v) for v in value.split(",") if v.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order list {value!r}") from None
    if not orders or any(n not in (1, 2, 3) for n in orders):
        raise argparse.ArgumentTypeError("orders must be drawn from 1,2,3")
    return orders


def _positive(value: str) -> float:
    v = float(value)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simdiff",
        description="Explainable similarity between two documents via weighted common n-grams.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--cache-dir", type=Path,
                        default=Path(os.environ.get(DEFAULT_CACHE_ENV, "cache")),
                        help="cache for fetched documents (default: ./cache or $%s)" % DEFAULT_CACHE_ENV)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="rank the n-grams two documents share")
    p.add_argument("source1")
    p.add_argument("source2")
    p.add_argument("--dict", dest="dict_path", type=Path,
                   help="frequency list (token<TAB>count); default: bundled English list")
    p.add_argument("--scheme", choices=[k.value for k in SchemeKind], default="final")
    p.add_argument("--nf", type=_positive, default=DEFAULT_NF, help="normalization factor (final scheme)")
    p.add_argument("--composition", choices=["product", "min"], default="product",
                   help="baseline rule for multi-word n-grams")
    p.add_argument("--epsilon", type=_positive, default=DEFAULT_EPSILON,
                   help="baseline frequency for out-of-vocabulary words")
    p.add_argument("--n", dest="orders", type=_orders, default=(1, 2, 3), help="e.g. 1,2,3")
    p.add_argument("--top-k", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_path", type=Path)
    p.add_argument("--csv", dest="csv_path", type=Path,
                   help="one file per order; '{n}' in the name is replaced by the order")
    p.add_argument("--svg", dest="svg_path", type=Path,
                   help="word cloud; one file per order like --csv")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--entity-presence", type=float, default=0.5)
    p.add_argument("--chunk-presence", type=float, default=0.5)
    p.add_argument("--gazetteer", type=Path, help="extra entity names, one per line")
    p.add_argument("--lemma-exceptions", type=Path, help="surface<TAB>lemma overrides")

    d = sub.add_parser("dict", help="frequency dictionary tools")
    dsub = d.add_subparsers(dest="dict_command", required=True)
    b = dsub.add_parser("build", help="count lemmas over a directory of text files")
    b.add_argument("corpus_dir", type=Path)
    b.add_argument("-o", "--output", type=Path, required=True)

    f = sub.add_parser("fetch", help="download and clean a source document")
    f.add_argument("source")
    f.add_argument("-o", "--output", type=Path, required=True)
    return parser


def _dispatch(args, transport) -> int:
    if args.command == "compare":
        try:
            config = RunConfig(
                source1=SourceSpec.parse(args.source1, args.cache_dir),
                source2=SourceSpec.parse(args.source2, args.cache_dir),
                dict_path=args.dict_path, scheme=SchemeKind(args.scheme), nf=args.nf,
                composition=Composition(args.composition), epsilon_floor=args.epsilon,
                orders=args.orders, top_k=args.top_k, json_path=args.json_path,
                csv_path=args.csv_path, svg_path=args.svg_path, seed=args.seed,
                width=args.width, height=args.height,
                entity_presence=args.entity_presence, chunk_presence=args.chunk_presence,
                gazetteer=args.gazetteer, lemma_exceptions=args.lemma_exceptions)
        except ValueError as exc:
            if isinstance(exc, SimdiffError):
                raise
            print(f"simdiff: usage: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return cmd_compare(config, transport)
    if args.command == "dict":
        return cmd_dict_build(args.corpus_dir, args.output)
    return cmd_fetch(SourceSpec.parse(args.source, args.cache_dir), args.output, transport)


def main(argv: Optional[Sequence[str]] = None, transport: Optional[Transport] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, transport)
    except SimdiffError as exc:
        for cls, code, stage in ERROR_CODES:
            if isinstance(exc, cls):
                print(f"simdiff: {stage}: {exc}", file=sys.stderr)
                return code
        print(f"simdiff: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED
    except OSError as exc:
        print(f"simdiff: io: {exc}", file=sys.stderr)
        return EXIT_OUTPUT


if __name__ == "__main__":
    sys.exit(main())
