"""Analysis reports and their JSON / CSV serializations."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List

from .errors import MissingOrderError, ReportError
from .weighting import WeightedNGram

CSV_HEADER = ("ngram", "f1", "f2", "fe", "entity", "noun_chunk", "weight")


@dataclass
class AnalysisReport:
    doc1_id: str
    doc2_id: str
    scheme: Dict[str, object]
    per_n: Dict[int, List[WeightedNGram]]
    metadata: Dict[str, object] = field(default_factory=dict)

    def top(self, n: int, k: int) -> List[WeightedNGram]:
        return self.ngrams(n)[:k]

    def ngrams(self, n: int) -> List[WeightedNGram]:
        try:
            return self.per_n[n]
        except KeyError:
            raise MissingOrderError(f"report has no {n}-gram results") from None

    def without_timestamp(self) -> "AnalysisReport":
        meta = {k: v for k, v in self.metadata.items() if k != "timestamp"}
        return AnalysisReport(self.doc1_id, self.doc2_id, dict(self.scheme),
                              dict(self.per_n), meta)


def _gram_to_dict(w: WeightedNGram) -> dict:
    return {
        "ngram": list(w.gram),
        "f1": w.f1,
        "f2": w.f2,
        "fe": w.fe,
        "entity": w.is_entity,
        "noun_chunk": w.is_noun_chunk,
        "weight": w.weight,
    }


def to_json(report: AnalysisReport) -> bytes:
    doc = {
        "doc1_id": report.doc1_id,
        "doc2_id": report.doc2_id,
        "scheme": report.scheme,
        "metadata": report.metadata,
        "per_n": {str(n): [_gram_to_dict(w) for w in report.per_n[n]]
                  for n in sorted(report.per_n)},
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def from_json(data) -> AnalysisReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
        per_n = {
            int(n): [
                WeightedNGram(tuple(g["ngram"]), g["f1"], g["f2"], g["fe"],
                              g["entity"], g["noun_chunk"], g["weight"])
                for g in items
            ]
            for n, items in doc["per_n"].items()
        }
        return AnalysisReport(doc["doc1_id"], doc["doc2_id"], doc["scheme"],
                              per_n, doc.get("metadata", {}))
    except (KeyError, TypeError, ValueError) as exc:
        raise ReportError(f"malformed report JSON: {exc}") from None


def to_csv(report: AnalysisReport, n: int) -> bytes:
    rows = report.ngrams(n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for w in rows:
        writer.writerow([w.text, repr(w.f1), repr(w.f2), repr(w.fe),
                         str(w.is_entity).lower(), str(w.is_noun_chunk).lower(),
                         repr(w.weight)])
    return buf.getvalue().encode("utf-8")
