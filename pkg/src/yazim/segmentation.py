"""Sentence splitting and offset-carrying tokenization.

Offsets are counted in Unicode code points so that span arithmetic stays
independent of the UTF-8 byte length of Turkish characters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .phonology import turkish_lower

_DATA_DIR = Path(__file__).resolve().parent / "data"

# Maximal runs of letters/digits, allowing word-internal apostrophes and
# hyphens so proper-noun suffixation ("Ayşe'de") stays one token.
_WORD_RE = re.compile(r"[^\W_]+(?:['’ʼ\-][^\W_]+)*", re.UNICODE)

_TERMINATORS = ".!?…"


@dataclass
class Token:
    surface: str
    start: int
    end: int
    sentence_index: int = 0

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"empty token span ({self.start}, {self.end})")


@dataclass
class SentenceSpan:
    start: int
    end: int
    tokens: list[Token] = field(default_factory=list)


def load_abbreviations(path: str | Path | None = None) -> frozenset[str]:
    """Abbreviation guard list, one per line, compared lowercase with dot."""
    p = Path(path) if path else _DATA_DIR / "abbreviations.txt"
    abbrevs = set()
    for line in p.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            abbrevs.add(turkish_lower(line))
    return frozenset(abbrevs)


_DEFAULT_ABBREVS: frozenset[str] | None = None


def _abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVS
    if _DEFAULT_ABBREVS is None:
        _DEFAULT_ABBREVS = load_abbreviations()
    return _DEFAULT_ABBREVS


def _word_before(text: str, idx: int) -> str:
    """The word immediately preceding position `idx`, including `idx` itself."""
    j = idx
    while j > 0 and not text[j - 1].isspace():
        j -= 1
    return text[j : idx + 1]


def split_sentences(
    text: str, abbreviations: frozenset[str] | None = None
) -> list[SentenceSpan]:
    """Split `text` into sentence spans covering every non-whitespace char.

    Boundaries fall after '.', '!', '?' or '…' runs followed by whitespace
    and an uppercase letter or digit, unless the preceding word is a known
    abbreviation. Newline runs are hard boundaries.
    """
    if abbreviations is None:
        abbreviations = _abbreviations()

    cuts = [0]
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            j = i
            while j < n and text[j] in "\r\n":
                j += 1
            cuts.append(j)
            i = j
            continue
        if ch in _TERMINATORS:
            j = i
            while j + 1 < n and text[j + 1] in _TERMINATORS:
                j += 1
            k = j + 1
            if k < n and text[k].isspace():
                m = k
                while m < n and text[m].isspace():
                    m += 1
                if m < n and (text[m].isupper() or text[m].isdigit()):
                    word = turkish_lower(_word_before(text, i))
                    if not (ch == "." and word in abbreviations):
                        cuts.append(m)
            i = j + 1
            continue
        i += 1
    cuts.append(n)

    spans: list[SentenceSpan] = []
    for a, b in zip(cuts, cuts[1:]):
        chunk = text[a:b]
        lead = len(chunk) - len(chunk.lstrip())
        trail = len(chunk) - len(chunk.rstrip())
        start, end = a + lead, b - trail
        if start < end:
            spans.append(SentenceSpan(start=start, end=end))
    return spans


def tokenize(sentence: SentenceSpan, text: str) -> list[Token]:
    """Tokens of one sentence: word runs plus single-char punctuation tokens."""
    tokens: list[Token] = []
    i = sentence.start
    while i < sentence.end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _WORD_RE.match(text, i, sentence.end)
        if m:
            tokens.append(Token(m.group(), m.start(), m.end()))
            i = m.end()
        else:
            tokens.append(Token(ch, i, i + 1))
            i += 1
    return tokens


def segment(
    text: str, abbreviations: frozenset[str] | None = None
) -> list[SentenceSpan]:
    """Sentence spans with their tokens populated and indexed."""
    sentences = split_sentences(text, abbreviations)
    for idx, sent in enumerate(sentences):
        sent.tokens = tokenize(sent, text)
        for tok in sent.tokens:
            tok.sentence_index = idx
    return sentences
