"""Fetch and clean source documents.

Remote sources are fetched through a *transport*: any callable taking a URL
and returning ``(status_code, body_bytes)``.  Tests pass a stub; the default
uses :mod:`urllib`.  Responses are cleaned and cached under
``<cache_dir>/<kind>/<sanitized-locator>.txt``; a cached copy is always
served without touching the transport.
"""
from __future__ import annotations

import json
import os
import re
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Tuple

from ._io import atomic_write
from .errors import (CacheWriteError, MarkerNotFoundError, NetworkError,
                     NotFoundError, SourceError)
from .pipeline import RawDocument, SourceKind
from .pipeline.tokenizer import normalize

Transport = Callable[[str], Tuple[int, bytes]]

WIKI_BASE_ENV = "SIMDIFF_BASE_URL_WIKI"
GUTENBERG_BASE_ENV = "SIMDIFF_BASE_URL_GUTENBERG"
DEFAULT_WIKI_BASE = "https://en.wikipedia.org"
DEFAULT_GUTENBERG_BASE = "https://www.gutenberg.org"
USER_AGENT = "simdiff/0.1 (document similarity research tool)"

_START_RE = re.compile(r"^\*{3}\s*START OF (?:THE |THIS )?PROJECT GUTENBERG.*$",
                       re.MULTILINE | re.IGNORECASE)
_END_RE = re.compile(r"^\*{3}\s*END OF (?:THE |THIS )?PROJECT GUTENBERG.*$",
                     re.MULTILINE | re.IGNORECASE)


@dataclass(frozen=True)
class SourceSpec:
    kind: SourceKind
    locator: str
    cache_dir: Optional[Path] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SourceKind(self.kind))
        if not self.locator or not self.locator.strip():
            raise SourceError("empty source locator")
        if self.kind is SourceKind.GUTENBERG:
            if not self.locator.isdigit() or int(self.locator) <= 0:
                raise SourceError(f"Gutenberg id must be a positive integer, got {self.locator!r}")
        if self.cache_dir is not None:
            object.__setattr__(self, "cache_dir", Path(self.cache_dir))

    @classmethod
    def parse(cls, text: str, cache_dir=None) -> "SourceSpec":
        """Parse ``wiki:Title``, ``gutenberg:2600``, ``file:path`` or a bare path."""
        prefixes = {"wiki": SourceKind.WIKIPEDIA, "wikipedia": SourceKind.WIKIPEDIA,
                    "gutenberg": SourceKind.GUTENBERG, "pg": SourceKind.GUTENBERG,
                    "file": SourceKind.FILE}
        head, sep, rest = text.partition(":")
        if sep and head.lower() in prefixes:
            return cls(prefixes[head.lower()], rest, cache_dir)
        return cls(SourceKind.FILE, text, cache_dir)

    @property
    def doc_id(self) -> str:
        if self.kind is SourceKind.FILE:
            return Path(self.locator).stem
        if self.kind is SourceKind.GUTENBERG:
            return f"pg{self.locator}"
        return self.locator.replace("_", " ")


def strip_gutenberg(raw_text: str, passthrough: bool = False) -> str:
    """Return the e-text body between the START and END marker lines.

    Text without markers raises :class:`MarkerNotFoundError` unless
    ``passthrough`` is set, in which case it is returned stripped.
    """
    start = _START_RE.search(raw_text)
    end = _END_RE.search(raw_text, start.end() if start else 0)
    if not start or not end:
        if passthrough:
            return raw_text.strip()
        raise MarkerNotFoundError("Project Gutenberg START/END markers not found")
    return raw_text[start.end():end.start()].strip()


_HEADER_RE = re.compile(r"^\s*(={2,})\s*(.*?)\s*\1\s*$", re.MULTILINE)
_REF_RE = re.compile(r"\[(?:\d+|[a-z]|citation needed|note \d+|clarification needed)\]",
                     re.IGNORECASE)


def clean_wikipedia(text: str) -> str:
    """Turn a plain-text extract into paragraphs; headers become plain lines."""
    text = text.replace("\r\n", "\n")
    text = _HEADER_RE.sub(lambda m: f"\n\n{m.group(2)}\n\n", text)
    text = _REF_RE.sub("", text)
    text = re.sub(r"[ \t]+\n", "\n", text)
    text = re.sub(r"\n{3,}", "\n\n", text)
    return text.strip() + "\n"


def sanitize_locator(locator: str) -> str:
    name = re.sub(r"[^\w.-]+", "_", locator.strip(), flags=re.UNICODE).strip("._")
    return name or "_"


def cache_path(spec: SourceSpec) -> Path:
    assert spec.cache_dir is not None
    return spec.cache_dir / spec.kind.value / f"{sanitize_locator(spec.locator)}.txt"


def urllib_transport(url: str, timeout: float = 30.0) -> Tuple[int, bytes]:
    request = urllib.request.Request(url, headers={"User-Agent": USER_AGENT})
    try:
        with urllib.request.urlopen(request, timeout=timeout) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read() or b""
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"GET {url} failed: {exc}") from None


def wikipedia_url(title: str, base: Optional[str] = None) -> str:
    base = (base or os.environ.get(WIKI_BASE_ENV) or DEFAULT_WIKI_BASE).rstrip("/")
    query = urllib.parse.urlencode({
        "action": "query", "prop": "extracts", "explaintext": "1",
        "exsectionformat": "wiki", "redirects": "1", "format": "json",
        "formatversion": "2", "titles": title,
    })
    return f"{base}/w/api.php?{query}"


def gutenberg_url(ebook_id: str, base: Optional[str] = None) -> str:
    base = (base or os.environ.get(GUTENBERG_BASE_ENV) or DEFAULT_GUTENBERG_BASE).rstrip("/")
    return f"{base}/cache/epub/{ebook_id}/pg{ebook_id}.txt"


def _get(transport: Transport, url: str, what: str) -> bytes:
    try:
        status, body = transport(url)
    except NetworkError:
        raise
    except OSError as exc:
        raise NetworkError(f"GET {url} failed: {exc}") from None
    if status == 404:
        raise NotFoundError(f"{what} not found")
    if status != 200:
        raise NetworkError(f"GET {url} returned HTTP {status}")
    return body


def _fetch_wikipedia(title: str, transport: Transport) -> str:
    body = _get(transport, wikipedia_url(title), f"Wikipedia article {title!r}")
    try:
        pages = json.loads(body.decode("utf-8"))["query"]["pages"]
    except (ValueError, KeyError, TypeError) as exc:
        raise NetworkError(f"unexpected Wikipedia response: {exc}") from None
    if isinstance(pages, dict):
        pages = list(pages.values())
    page = pages[0] if pages else {}
    if page.get("missing") is not None or page.get("invalid") is not None or not page.get("extract"):
        raise NotFoundError(f"Wikipedia article {title!r} not found")
    return clean_wikipedia(page["extract"])


def _fetch_gutenberg(ebook_id: str, transport: Transport) -> str:
    body = _get(transport, gutenberg_url(ebook_id), f"Gutenberg e-text {ebook_id}")
    text = body.decode("utf-8-sig", errors="replace").replace("\r\n", "\n")
    return strip_gutenberg(text) + "\n"


def fetch(spec: SourceSpec, transport: Optional[Transport] = None) -> RawDocument:
    """Load the document described by ``spec``.

    Local files are read directly.  Remote kinds are served from the cache
    when present, otherwise fetched, cleaned and cached.
    """
    if spec.kind is SourceKind.FILE:
        try:
            text = Path(spec.locator).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise SourceError(f"cannot read {spec.locator}: {exc}") from None
        return RawDocument(spec.doc_id, text, SourceKind.FILE)

    cached = cache_path(spec) if spec.cache_dir is not None else None
    if cached is not None and cached.is_file():
        return RawDocument(spec.doc_id, cached.read_text(encoding="utf-8"), spec.kind)

    transport = transport or urllib_transport
    if spec.kind is SourceKind.WIKIPEDIA:
        text = _fetch_wikipedia(spec.locator, transport)
    else:
        text = _fetch_gutenberg(spec.locator, transport)
    text = normalize(text)

    if cached is not None:
        try:
            atomic_write(cached, text)
        except OSError as exc:
            raise CacheWriteError(f"cannot write cache file {cached}: {exc}") from None
    return RawDocument(spec.doc_id, text, spec.kind)
