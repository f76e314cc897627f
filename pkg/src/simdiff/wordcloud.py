"""Deterministic SVG word clouds.

Font size grows with the square root of the weight.  Terms are placed in
rank order along an Archimedean spiral from the canvas center; a term that
cannot be placed without overlapping an earlier one is dropped.

Each ``<text>`` element carries ``textLength`` with
``lengthAdjust="spacingAndGlyphs"``, so its rendered box is exactly
``textLength`` wide and ``font-size`` tall around the (x, y) center.
"""
from __future__ import annotations

import math
import random
from typing import List, NamedTuple, Optional
from xml.sax.saxutils import escape, quoteattr

from .errors import EmptyReportError, ReportError
from .report import AnalysisReport

CHAR_WIDTH = 0.6  # advance width of a monospace glyph, in em
FONT_FAMILY = "DejaVu Sans Mono, monospace"
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22")


class Box(NamedTuple):
    x0: float
    y0: float
    x1: float
    y1: float

    def overlaps(self, other: "Box") -> bool:
        return (self.x0 < other.x1 and other.x0 < self.x1
                and self.y0 < other.y1 and other.y0 < self.y1)


class Placement(NamedTuple):
    text: str
    weight: float
    font_size: float
    width: float
    x: float
    y: float

    @property
    def box(self) -> Box:
        return box_of(self.x, self.y, self.width, self.font_size)


def box_of(x: float, y: float, width: float, height: float) -> Box:
    return Box(x - width / 2, y - height / 2, x + width / 2, y + height / 2)


def text_width(text: str, font_size: float) -> float:
    return round(len(text) * CHAR_WIDTH * font_size, 2)


def font_sizes(weights: List[float], max_font: float, min_font: float) -> List[float]:
    top = max(weights)
    if top <= 0:
        return [round(max_font, 2)] * len(weights)
    return [round(max(min_font, max_font * math.sqrt(max(w, 0.0) / top)), 2)
            for w in weights]


def auto_max_font(terms: List[str], weights: List[float], canvas_w: float,
                  canvas_h: float, fill: float = 0.45) -> float:
    """Largest font at which the summed glyph boxes cover ``fill`` of the canvas."""
    top = max(weights)
    rel = [max(w, 0.0) / top if top > 0 else 1.0 for w in weights]
    area_per_font2 = sum(CHAR_WIDTH * len(t) * r for t, r in zip(terms, rel))
    if area_per_font2 <= 0:
        return canvas_h / 5
    return min(canvas_h / 5, math.sqrt(fill * canvas_w * canvas_h / area_per_font2))


def layout(terms: List[str], weights: List[float], canvas_w: float, canvas_h: float,
           seed: int = 0, max_font: Optional[float] = None, min_font: float = 8.0,
           arc_step: float = 3.0, spacing: float = 2.0):
    """Place terms; returns (placements, number dropped)."""
    if max_font is None:
        max_font = auto_max_font(terms, weights, canvas_w, canvas_h)
    # shrink uniformly if the heaviest term could never fit
    longest_first = max(len(terms[0]), 1)
    scale = min(1.0, 0.95 * canvas_w / (CHAR_WIDTH * longest_first * max_font),
                0.95 * canvas_h / max_font)
    max_font *= scale
    min_font = min(min_font, max_font)
    sizes = font_sizes(weights, max_font, min_font)

    rng = random.Random(seed)
    cx, cy = canvas_w / 2, canvas_h / 2
    aspect = canvas_h / canvas_w
    r_max = math.hypot(canvas_w, canvas_h) / 2
    placed: List[Placement] = []
    dropped = 0
    for term, weight, size in zip(terms, weights, sizes):
        width = text_width(term, size)
        phase = rng.uniform(0, 2 * math.pi)
        t = 0.0
        spot = None
        while spacing * t <= r_max:
            r = spacing * t
            x = round(cx + r * math.cos(t + phase), 2)
            y = round(cy + r * aspect * math.sin(t + phase), 2)
            box = box_of(x, y, width, size)
            if (box.x0 >= 0 and box.y0 >= 0 and box.x1 <= canvas_w and box.y1 <= canvas_h
                    and not any(box.overlaps(p.box) for p in placed)):
                spot = (x, y)
                break
            t += max(0.05, arc_step / max(r, 1.0))
        if spot is None:
            dropped += 1
            continue
        placed.append(Placement(term, weight, size, width, *spot))
    return placed, dropped


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _comment(text: str) -> str:
    while "--" in text:
        text = text.replace("--", "-")
    return escape(text)


def render_wordcloud(report: AnalysisReport, n: int, top_k: int = 50,
                     canvas_w: int = 800, canvas_h: int = 600, seed: int = 0,
                     max_font: Optional[float] = None, min_font: float = 8.0) -> bytes:
    """Render the ``top_k`` heaviest ``n``-grams of ``report`` as SVG bytes."""
    if top_k < 1:
        raise ReportError(f"top_k must be at least 1, got {top_k}")
    if canvas_w <= 0 or canvas_h <= 0:
        raise ReportError("canvas dimensions must be positive")
    items = report.top(n, top_k)
    if not items:
        raise EmptyReportError(f"no {n}-grams to place")

    placed, dropped = layout([w.text for w in items], [w.weight for w in items],
                             canvas_w, canvas_h, seed, max_font, min_font)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{canvas_w}" height="{canvas_h}" viewBox="0 0 {canvas_w} {canvas_h}">',
        f"<!-- {_comment(report.doc1_id)} vs {_comment(report.doc2_id)}, n={n}, "
        f"placed={len(placed)}, dropped={dropped} -->",
        f'<rect width="{canvas_w}" height="{canvas_h}" fill="white"/>',
    ]
    for i, p in enumerate(placed):
        out.append(
            f"<g><title>{escape(p.text)}: {p.weight!r}</title>"
            f'<text x="{_num(p.x)}" y="{_num(p.y)}" font-size="{_num(p.font_size)}" '
            f'textLength="{_num(p.width)}" lengthAdjust="spacingAndGlyphs" '
            f'text-anchor="middle" dominant-baseline="central" '
            f"font-family={quoteattr(FONT_FAMILY)} fill=\"{PALETTE[i % len(PALETTE)]}\">"
            f"{escape(p.text)}</text></g>"
        )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
