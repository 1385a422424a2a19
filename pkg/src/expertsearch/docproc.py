"""Publication text cleaning, language detection, tokenization, and n-grams.

All operations are pure functions over plain UTF-8 text; they are safe to
run data-parallel per document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Collection, Iterable

from .model import LangCode

#: Fraction of the text (by character count) counted as the "tail" in which
#: a references heading is honored. Guards against headings quoted mid-paper.
REFERENCE_TAIL_FRACTION = 0.4

_HEADING_RE = re.compile(
    r"^\s*(references|bibliography|literatur|literaturverzeichnis)\s*:?\s*$",
    re.IGNORECASE,
)
_EMAIL_RE = re.compile(r"[A-Za-z0-9._%+\-]+@[A-Za-z0-9.\-]+\.[A-Za-z]{2,}")
_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
# Token characters: letters/digits (underscore excluded); hyphens only word-internal.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-+[^\W_]+)*")

MIN_TOKEN_LENGTH = 2

LANGUAGE_SCORE_FLOOR = 0.05
LANGUAGE_SCORE_MARGIN = 0.01


@dataclass(frozen=True)
class Token:
    text: str
    position: int


@dataclass(frozen=True)
class Bigram:
    first: str
    second: str


def _reference_cut_offset(text: str) -> int | None:
    """Start offset of the last references heading in the final tail, if any."""
    threshold = len(text) * (1.0 - REFERENCE_TAIL_FRACTION)
    best: int | None = None
    offset = 0
    for line in text.splitlines(keepends=True):
        if offset >= threshold and _HEADING_RE.match(line.rstrip("\r\n")):
            best = offset
        offset += len(line)
    return best


def strip_references(text: str) -> str:
    """Drop the references section from extracted paper text.

    A line consisting solely of a references heading (references,
    bibliography, literatur, literaturverzeichnis; optional trailing
    colon) that starts within the final 40% of the text truncates the
    text from that line on; the latest such heading wins. Applied to a
    fixpoint so the result is idempotent even when truncation moves an
    earlier heading into the tail window.
    """
    result = text
    while True:
        cut = _reference_cut_offset(result)
        if cut is None:
            return result
        result = result[:cut].rstrip()


def scrub_pii(text: str) -> str:
    """Remove email addresses and URLs, then collapse whitespace.

    Each maximal match of the email pattern (local@domain.tld) or URL
    pattern (http/https scheme or www. prefix, up to whitespace) becomes
    a single space. Idempotent; the output matches neither pattern.
    """
    cleaned = _EMAIL_RE.sub(" ", text)
    cleaned = _URL_RE.sub(" ", cleaned)
    return re.sub(r"\s+", " ", cleaned).strip()


def tokenize(text: str) -> list[Token]:
    """Lowercase tokens split on anything that is not a letter, digit, or hyphen.

    Hyphens are kept only word-internally and tokens shorter than two
    characters are dropped; positions are assigned sequentially over the
    kept tokens.
    """
    tokens: list[Token] = []
    for match in _TOKEN_RE.finditer(text.lower()):
        word = match.group(0)
        if len(word) < MIN_TOKEN_LENGTH:
            continue
        tokens.append(Token(word, len(tokens)))
    return tokens


def token_texts(text: str) -> list[str]:
    return [token.text for token in tokenize(text)]


@lru_cache(maxsize=None)
def load_stopwords(lang: str) -> frozenset[str]:
    """Bundled stopword list for a language code; one token per line, # comments."""
    data = resources.files("expertsearch.data").joinpath(f"stopwords_{lang}.txt").read_text("utf-8")
    words = set()
    for line in data.splitlines():
        entry = line.strip()
        if entry and not entry.startswith("#"):
            words.add(entry)
    return frozenset(words)


@lru_cache(maxsize=1)
def all_stopwords() -> frozenset[str]:
    """Union of every bundled stopword list; used for language-agnostic filtering."""
    return load_stopwords("en") | load_stopwords("de")


def detect_language(text: str) -> LangCode:
    """Stopword-ratio language detection over the bundled English/German lists.

    Returns the argmax language when its ratio reaches 0.05 and the two
    scores differ by more than 0.01; `und` otherwise (including for an
    empty token stream).
    """
    tokens = token_texts(text)
    if not tokens:
        return LangCode.UND
    scores = {}
    for lang in (LangCode.EN, LangCode.DE):
        stopwords = load_stopwords(lang.value)
        scores[lang] = sum(1 for tok in tokens if tok in stopwords) / len(tokens)
    best = max(scores, key=lambda lang: scores[lang])
    if scores[best] >= LANGUAGE_SCORE_FLOOR and abs(scores[LangCode.EN] - scores[LangCode.DE]) > LANGUAGE_SCORE_MARGIN:
        return best
    return LangCode.UND


def bigrams(tokens: Iterable[Token], stopwords: Collection[str] = frozenset()) -> list[Bigram]:
    """Adjacent token pairs in position order.

    Pairs whose first or second part is a stopword are excluded.
    """
    ordered = list(tokens)
    return [
        Bigram(first.text, second.text)
        for first, second in zip(ordered, ordered[1:])
        if first.text not in stopwords and second.text not in stopwords
    ]


def clean_text(text: str) -> str:
    """Full cleaning pipeline applied to extracted publication text."""
    return scrub_pii(strip_references(text))
