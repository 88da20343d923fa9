"""Writing-rule violation detection and correction over token sequences.

Detection assigns a rule id to a span of one or two adjacent tokens;
correction rewrites the span with the rule's reverse transformation.
The default tagger is deterministic and lexicon/pattern driven, kept
precision-first: a rule fires only on closed-class or lexicon-backed
evidence. It sits behind a small interface so a learned tagger can be
swapped in without touching the rest of the pipeline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

from .lexicons import LexiconSet
from .phonology import (
    VOWELS,
    capitalize_first,
    harmonize_de,
    harmonize_fourfold,
    turkish_lower,
    turkish_upper,
)
from .segmentation import SentenceSpan, Token, segment

GRAMMAR_STAGE = "grammar"
SPELL_STAGE = "spell"

_LETTERS = "a-zçğıöşüâîû"
_SUFFIX_RE = re.compile(f"^[{_LETTERS}]*$")
_VOWEL_SUFFIX_RE = re.compile(f"^[aeıioöuü][{_LETTERS}]*$")

# Hosts of a fused "de/da" conjunction: bare dative or possessive+dative.
_DE_HOST_ENDINGS = ("ına", "ine", "una", "üne", "na", "ne", "a", "e")

# Finite-verb endings that license a fused "ki" split.
_KI_VERB_ENDINGS = (
    "mış", "miş", "muş", "müş",
    "dı", "di", "du", "dü",
    "tı", "ti", "tu", "tü",
    "yor", "acak", "ecek", "sa", "se",
)
_KI_AORIST_RE = re.compile(r"[aeıioöuü]r$")

# Inflected light verb forms (etmek/edilmek/eylemek/olmak/olunmak family).
_LIGHT_VERB_BASES = (
    "edebildi", "edebilir", "edebiliyor", "edecek", "edelim", "edemedi",
    "edemez", "eden", "eder", "ederek", "edilecek", "edildi", "edilen",
    "edilir", "ediliyor", "edilme", "edilmek", "edilmiş", "edin", "ediniz",
    "edip", "ediyor", "et", "etme", "etmedi", "etmek", "etmekte", "etmekten",
    "etmeli", "etmemiş", "etmese", "etmesin", "etmeye", "etmeyecek",
    "etmeyi", "etmez", "etmiş", "etmiyor", "etse", "etseydi", "etsin",
    "etti", "eyle", "eyledi", "eylemek", "eylemiş", "eyler", "eyleyen",
    "olabildi", "olabilir", "olabiliyor", "olacak", "olalım", "olamadı",
    "olamaz", "olan", "olarak", "oldu", "olma", "olmadı", "olmak",
    "olmakta", "olmalı", "olmamış", "olmasa", "olmasın", "olmaya",
    "olmayacak", "olmayı", "olmaz", "olmuş", "olmuyor", "olsa", "olsaydı",
    "olsun", "olunacak", "olunan", "olundu", "olunmak", "olunmuş", "olunur",
    "olunuyor", "olup", "olur", "oluyor",
)
# Person/tense tail after a full base: -m, -n, -k, -z, -sın/-siniz, -ım/-yız,
# -lar, -dı/-ydı, -ymış, -dır and their chained combinations.
_PERSON_TAIL_RE = re.compile(
    r"^(?:[mnkz]|s[ıiuü]n(?:[ıiuü]z)?|y?[ıiuü][mz]|l[ae]r|y?d[ıiuü]|ym[ıiuü]ş|d[ıiuü]r)*$"
)

# Auxiliary verbs that fuse with a converb (rule: adjacent compound verbs).
# The auxiliary must carry real inflection: a bare converb like "gele" or
# "kalka" signals a reduplication ("gide gele"), which stays separate.
_COMPOUND_AUX_RE = re.compile(
    rf"^(?:bil|ver|kal|dur|gel|yaz)"
    rf"(?:$"
    rf"|[ae]n(?:[ıie]|l[ae]r[ıie]?)?$"
    rf"|(?:[dt][ıiuü]|m[ıiuü]ş|m[ae]k|[ıiuü]yor|[aeıiuü]r|[ae]c[ae]k"
    rf"|[ıiuü]p|[ae]r[ae]k|s[ae]|m[ae]l[ıi]|[ae]bil)[{_LETTERS}]*$)"
)

# Question particle patterns. A: tense-marked stem + particle (+ person).
_QUES_PERSON = r"(?:y[ıiuü]m|s[ıiuü]n[ıiuü]z|s[ıiuü]n|y[ıiuü]z|lar|ler|d[ıiuü]r|yd[ıiuü]|ym[ıiuü]ş)"
_QUES_A_RE = re.compile(
    rf"^(?P<stem>[{_LETTERS}]{{2,}}?(?:[ıiuü]yor|m[ıiuü]ş|acak|ecek|makta|mekte|mal[ıi]|mel[ıi]))"
    rf"(?P<prt>m[ıiuü])(?P<per>{_QUES_PERSON})?$"
)
# Bare aorist stems need an explicit person to avoid nouns like "platformu".
_QUES_A2_RE = re.compile(
    rf"^(?P<stem>[{_LETTERS}]{{2,}}[aeıioöuü]r)(?P<prt>m[ıiuü])(?P<per>{_QUES_PERSON})$"
)
# B: past stem with person before the particle ("gördün mü").
_QUES_B_RE = re.compile(
    rf"^(?P<stem>[{_LETTERS}]{{2,}}?[dt][ıiuü](?:n[ıiuü]z|n|k|lar|ler))"
    rf"(?P<prt>m[ıiuü])(?P<per>yd[ıiuü]|ym[ıiuü]ş)?$"
)


class EngineError(Exception):
    """A detection could not be transformed; carries rule id and span."""

    def __init__(self, message: str, rule_id: int, span: tuple[int, int]):
        super().__init__(f"{message} (rule {rule_id}, span {span})")
        self.rule_id = rule_id
        self.span = span


@dataclass(frozen=True)
class Detection:
    span_start: int
    span_end: int
    rule_id: int
    token_indices: tuple[int, ...]


@dataclass(frozen=True)
class Correction:
    span_start: int
    span_end: int
    replacement: str
    rule_id: int
    stage: str = GRAMMAR_STAGE


class Tagger(Protocol):
    """Swap point for the detection model: token sequence in, detections out."""

    def tag(self, tokens: Sequence[Token], text: str) -> list[Detection]: ...


def _is_upper(ch: str) -> bool:
    return ch != turkish_lower(ch)


def _match_casing(replacement: str, original_first: str) -> str:
    if _is_upper(original_first):
        return capitalize_first(replacement)
    return replacement


def _light_verb_form(word: str) -> bool:
    for base in _LIGHT_VERB_BASES:
        if word.startswith(base) and _PERSON_TAIL_RE.match(word[len(base) :]):
            return True
    return False


class RuleLexiconTagger:
    """Deterministic lexicon/pattern tagger over one sentence's tokens."""

    def __init__(self, lexicons: LexiconSet, disabled_rules: Iterable[int] = ()):
        self.lexicons = lexicons
        self.disabled_rules = frozenset(disabled_rules)

    def tag(self, tokens: Sequence[Token], text: str) -> list[Detection]:
        candidates: list[Detection] = []
        for i, token in enumerate(tokens):
            candidates.extend(self._single_token(i, token))
            if i + 1 < len(tokens):
                nxt = tokens[i + 1]
                gap = text[token.end : nxt.start]
                if gap and gap.isspace():
                    candidates.extend(self._token_pair(i, token, nxt))
        return _resolve(
            [c for c in candidates if c.rule_id not in self.disabled_rules]
        )

    # -- single-token rules ------------------------------------------------

    def _single_token(self, i: int, token: Token) -> Iterable[Detection]:
        surface = token.surface
        lowered = turkish_lower(surface)

        def det(rule_id: int) -> Detection:
            return Detection(token.start, token.end, rule_id, (i,))

        if "'" in surface or "’" in surface:
            if self._de_apostrophe(lowered):
                yield det(1)
            return

        if not _SUFFIX_RE.match(lowered):
            return

        if self._de_fused(lowered):
            yield det(1)
        if self._ki_fused(lowered):
            yield det(7)
        if self._foreign_stem(lowered):
            yield det(9)
        if self._haplology_unreduced(lowered):
            yield det(13)
        if self._light_verb_fused_wrongly(lowered):
            yield det(17)
        if self._question_fused(lowered):
            yield det(102)
        if self._reduplication_fused(lowered):
            yield det(103)
        if self._adverb_reduced(lowered):
            yield det(104)

    def _de_apostrophe(self, lowered: str) -> bool:
        host, _, tail = lowered.rpartition("’" if "’" in lowered else "'")
        if tail not in ("de", "da") or not host:
            return False
        if not any(c in VOWELS for c in host):
            return False
        return tail == harmonize_de(host)

    def _de_fused(self, lowered: str) -> bool:
        if len(lowered) < 3 or lowered[-2:] not in ("de", "da"):
            return False
        host = lowered[:-2]
        if not any(c in VOWELS for c in host):
            return False
        if lowered[-2:] != harmonize_de(host):
            return False
        if host in self.lexicons.de_pronouns:
            return True
        if lowered in self.lexicons.de_locative_exceptions:
            return False
        # Suffix-pattern hosts need at least two characters ("ada" is the
        # dative of "ad", not "a" plus a conjunction).
        return len(host) >= 2 and host.endswith(_DE_HOST_ENDINGS)

    def _ki_fused(self, lowered: str) -> bool:
        if len(lowered) < 4 or not lowered.endswith("ki"):
            return False
        if lowered in self.lexicons.ki_exceptions:
            return False
        host = lowered[:-2]
        if host in self.lexicons.ki_hosts:
            return True
        if len(host) < 3:  # a two-char "verb" before ki is noise, not a clause
            return False
        return host.endswith(_KI_VERB_ENDINGS) or bool(_KI_AORIST_RE.search(host))

    def _foreign_stem(self, lowered: str) -> bool:
        return self._foreign_split(lowered) is not None

    def _foreign_split(self, lowered: str) -> tuple[str, str] | None:
        for stem in self.lexicons._sorted_foreign:
            if lowered.startswith(stem):
                tail = lowered[len(stem) :]
                if _SUFFIX_RE.match(tail):
                    return stem, tail
        return None

    def _haplology_unreduced(self, lowered: str) -> bool:
        return self._haplology_split(lowered) is not None

    def _haplology_split(self, lowered: str) -> tuple[str, str] | None:
        for stem in self.lexicons._sorted_haplology:
            if lowered.startswith(stem):
                tail = lowered[len(stem) :]
                if tail and _VOWEL_SUFFIX_RE.match(tail):
                    return stem, tail
        return None

    def _light_verb_fused_wrongly(self, lowered: str) -> bool:
        return self._light_verb_split(lowered) is not None

    def _light_verb_split(self, lowered: str) -> tuple[str, str] | None:
        for noun in self.lexicons._sorted_sep_nouns:
            if lowered.startswith(noun):
                tail = lowered[len(noun) :]
                if tail and _light_verb_form(tail):
                    return noun, tail
        return None

    def _question_fused(self, lowered: str) -> bool:
        return self._question_split(lowered) is not None

    def _question_split(self, lowered: str) -> tuple[str, str] | None:
        for host in sorted(self.lexicons.ques_hosts, key=len, reverse=True):
            if lowered.startswith(host):
                rest = lowered[len(host) :]
                m = re.match(rf"^(m[ıiuü])({_QUES_PERSON})?$", rest)
                if m and m.group(1)[1] == harmonize_fourfold(host):
                    return host, rest
        for pattern in (_QUES_A_RE, _QUES_A2_RE, _QUES_B_RE):
            m = pattern.match(lowered)
            if m and m.group("prt")[1] == harmonize_fourfold(m.group("stem")):
                return m.group("stem"), lowered[len(m.group("stem")) :]
        return None

    def _reduplication_fused(self, lowered: str) -> bool:
        if len(lowered) < 6 or len(lowered) % 2:
            return False
        half = lowered[: len(lowered) // 2]
        return half == lowered[len(lowered) // 2 :] and half in self.lexicons.redup_words

    def _adverb_reduced(self, lowered: str) -> bool:
        return self._adverb_split(lowered) is not None

    def _adverb_split(self, lowered: str) -> tuple[str, str] | None:
        for stem in self.lexicons._sorted_adverbs:
            if lowered.startswith(stem):
                tail = lowered[len(stem) :]
                if _SUFFIX_RE.match(tail):
                    return stem, tail
        return None

    # -- two-token rules ---------------------------------------------------

    def _token_pair(self, i: int, first: Token, second: Token) -> Iterable[Detection]:
        f = turkish_lower(first.surface)
        s = turkish_lower(second.surface)

        def det(rule_id: int) -> Detection:
            return Detection(first.start, second.end, rule_id, (i, i + 1))

        if (f, s) in self.lexicons.pronoun_pairs:
            yield det(22)
        if f in self.lexicons.converbs and _COMPOUND_AUX_RE.match(s):
            yield det(20)
        if f in self.lexicons.light_verb_adj and _light_verb_form(s):
            yield det(101)


def _resolve(candidates: list[Detection]) -> list[Detection]:
    """Non-overlapping winners: smaller rule id first, then leftmost-longest."""
    ordered = sorted(
        candidates,
        key=lambda d: (d.rule_id, d.span_start, -(d.span_end - d.span_start)),
    )
    chosen: list[Detection] = []
    for cand in ordered:
        if all(
            cand.span_end <= c.span_start or cand.span_start >= c.span_end
            for c in chosen
        ):
            chosen.append(cand)
    return sorted(chosen, key=lambda d: d.span_start)


def detect(
    tokens: Sequence[Token], lexicons: LexiconSet, text: str | None = None
) -> list[Detection]:
    """Detections for one sentence's tokens, non-overlapping and ordered."""
    if text is None:
        # Reconstruct enough context for adjacency checks from spans.
        end = max((t.end for t in tokens), default=0)
        buf = [" "] * end
        for t in tokens:
            buf[t.start : t.end] = t.surface
        text = "".join(buf)
    return RuleLexiconTagger(lexicons).tag(tokens, text)


def correct(
    detection: Detection, tokens: Sequence[Token], lexicons: LexiconSet
) -> Correction:
    """Realize the reverse transformation for one detection."""
    tagger = RuleLexiconTagger(lexicons)
    idx = detection.token_indices
    first = tokens[idx[0]]
    surface = first.surface
    lowered = turkish_lower(surface)
    rule = detection.rule_id
    replacement: str | None = None

    if rule == 1:
        if "'" in surface or "’" in surface:
            host = surface.rpartition("’" if "’" in surface else "'")[0]
        else:
            host = surface[:-2]
        replacement = f"{host} {harmonize_de(host)}"
    elif rule == 7:
        replacement = f"{surface[:-2]} ki"
    elif rule == 9:
        split = tagger._foreign_split(lowered)
        if split:
            stem, _ = split
            replacement = _match_casing(
                lexicons.foreign_pairs[stem] + surface[len(stem) :], surface[0]
            )
    elif rule == 13:
        split = tagger._haplology_split(lowered)
        if split:
            stem, _ = split
            replacement = _match_casing(
                lexicons.haplology[stem].reduced + surface[len(stem) :], surface[0]
            )
    elif rule == 17:
        split = tagger._light_verb_split(lowered)
        if split:
            noun, tail = split
            replacement = _match_casing(f"{noun} {tail}", surface[0])
    elif rule == 102:
        split = tagger._question_split(lowered)
        if split:
            stem, tail = split
            replacement = _match_casing(f"{stem} {tail}", surface[0])
    elif rule == 103:
        half = surface[: len(surface) // 2]
        replacement = f"{half} {turkish_lower(surface[len(surface) // 2 :])}"
    elif rule == 104:
        split = tagger._adverb_split(lowered)
        if split:
            stem, _ = split
            replacement = _match_casing(
                lexicons.adverb_pairs[stem] + surface[len(stem) :], surface[0]
            )
    elif rule in (20, 22, 101):
        second = tokens[idx[1]]
        s_lower = turkish_lower(second.surface)
        if rule == 20:
            replacement = _match_casing(lowered + s_lower, surface[0])
        elif rule == 22:
            joined = lexicons.pronoun_pairs.get((lowered, s_lower))
            if joined:
                replacement = _match_casing(joined, surface[0])
        else:
            entry = lexicons.light_verb_adj.get(lowered)
            if entry:
                replacement = _match_casing(entry[0] + s_lower, surface[0])

    span = (detection.span_start, detection.span_end)
    if replacement is None:
        raise EngineError("rule cannot transform span", rule, span)
    return Correction(
        span_start=detection.span_start,
        span_end=detection.span_end,
        replacement=replacement,
        rule_id=rule,
        stage=GRAMMAR_STAGE,
    )


def run_grammar_pass(
    text: str,
    lexicons: LexiconSet,
    tagger: Tagger | None = None,
    sentences: list[SentenceSpan] | None = None,
) -> list[Correction]:
    """detect → correct across all sentences; sorted, non-overlapping."""
    if tagger is None:
        tagger = RuleLexiconTagger(lexicons)
    if sentences is None:
        sentences = segment(text)
    corrections: list[Correction] = []
    for sentence in sentences:
        for detection in tagger.tag(sentence.tokens, text):
            correction = correct(detection, sentence.tokens, lexicons)
            original = text[correction.span_start : correction.span_end]
            if correction.replacement != original:
                corrections.append(correction)
    return corrections
