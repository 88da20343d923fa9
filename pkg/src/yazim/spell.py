"""Spelling repair: proper-noun capitalization, then typo normalization.

Runs only over tokens the grammar pass left untouched. Typo candidates are
generated within unweighted Damerau-Levenshtein distance 2 and ranked by a
weighted cost model in which diacritic-pair substitutions and dropped-vowel
insertions (the two dominant Turkish typing errors) are cheap. A correction
is emitted only for a uniquely minimal candidate strictly below threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .catalog import SPELL_RULE_ID
from .grammar import SPELL_STAGE, Correction
from .phonology import ALPHABET, VOWELS, capitalize_first, turkish_lower
from .segmentation import Token, segment

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_WORDLIST_PATH = _DATA_DIR / "wordlist.txt"
DEFAULT_GAZETTEER_PATH = _DATA_DIR / "gazetteer.txt"
DEFAULT_COSTS_PATH = _DATA_DIR / "spell_costs.conf"

# Both members of each pair differ only by a Turkish diacritic.
DIACRITIC_PAIRS = frozenset(
    {("ı", "i"), ("i", "ı"), ("s", "ş"), ("ş", "s"), ("c", "ç"), ("ç", "c"),
     ("g", "ğ"), ("ğ", "g"), ("o", "ö"), ("ö", "o"), ("u", "ü"), ("ü", "u")}
)


@dataclass(frozen=True)
class SpellCosts:
    substitution: float = 1.0
    diacritic_substitution: float = 0.4
    transposition: float = 0.7
    insertion: float = 1.0
    vowel_insertion: float = 0.5
    deletion: float = 1.0
    threshold: float = 1.5
    min_length: int = 3
    max_token_length: int = 24

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SpellCosts":
        p = Path(path) if path else DEFAULT_COSTS_PATH
        known = {f.name for f in fields(cls)}
        values: dict[str, float | int] = {}
        for line in p.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, raw = line.partition("=")
            key = key.strip()
            raw = raw.strip()
            if key not in known:
                raise ValueError(f"unknown cost key {key!r} in {p}")
            if key in ("min_length", "max_token_length"):
                values[key] = int(raw)
            else:
                values[key] = float(raw)
        costs = cls(**values)
        if any(
            c <= 0
            for c in (
                costs.substitution, costs.diacritic_substitution, costs.transposition,
                costs.insertion, costs.vowel_insertion, costs.deletion,
            )
        ):
            raise ValueError("edit costs must be positive")
        if costs.diacritic_substitution >= costs.substitution:
            raise ValueError("diacritic substitutions must cost less than default")
        return costs


def weighted_distance(source: str, target: str, costs: SpellCosts) -> float:
    """Weighted restricted Damerau-Levenshtein distance from source to target."""
    n, m = len(source), len(target)
    dist = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][0] = dist[i - 1][0] + costs.deletion
    for j in range(1, m + 1):
        ch = target[j - 1]
        dist[0][j] = dist[0][j - 1] + (
            costs.vowel_insertion if ch in VOWELS else costs.insertion
        )
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            s_ch, t_ch = source[i - 1], target[j - 1]
            if s_ch == t_ch:
                sub = 0.0
            elif (s_ch, t_ch) in DIACRITIC_PAIRS:
                sub = costs.diacritic_substitution
            else:
                sub = costs.substitution
            ins = costs.vowel_insertion if t_ch in VOWELS else costs.insertion
            best = min(
                dist[i - 1][j - 1] + sub,
                dist[i - 1][j] + costs.deletion,
                dist[i][j - 1] + ins,
            )
            if (
                i > 1
                and j > 1
                and s_ch == target[j - 2]
                and source[i - 2] == t_ch
                and s_ch != t_ch
            ):
                best = min(best, dist[i - 2][j - 2] + costs.transposition)
            dist[i][j] = best
    return dist[n][m]


class SpellLexicon:
    """Wordlist + gazetteer + cost model, immutable after load."""

    def __init__(
        self,
        words: frozenset[str],
        gazetteer: dict[str, str],
        costs: SpellCosts | None = None,
    ):
        self.words = words
        self.gazetteer = gazetteer  # turkish-lowercase form -> canonical casing
        self.costs = costs or SpellCosts()
        self._cache: dict[str, str | None] = {}
        for canon in gazetteer.values():
            first = canon[:1]
            if first and first == turkish_lower(first):
                raise ValueError(f"gazetteer entry not capitalized: {canon!r}")

    @classmethod
    def load(
        cls,
        wordlist_path: str | Path | None = None,
        gazetteer_path: str | Path | None = None,
        costs_path: str | Path | None = None,
    ) -> "SpellLexicon":
        wp = Path(wordlist_path) if wordlist_path else DEFAULT_WORDLIST_PATH
        gp = Path(gazetteer_path) if gazetteer_path else DEFAULT_GAZETTEER_PATH
        words = frozenset(
            line.strip()
            for line in wp.read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.startswith("#")
        )
        gazetteer: dict[str, str] = {}
        for line in gp.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                gazetteer[turkish_lower(line)] = line
        return cls(words, gazetteer, SpellCosts.load(costs_path))

    def known(self, lowered: str) -> bool:
        return lowered in self.words or lowered in self.gazetteer

    # -- candidate generation ------------------------------------------------

    def _edits1(self, word: str) -> set[str]:
        splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
        deletes = [left + right[1:] for left, right in splits if right]
        transposes = [
            left + right[1] + right[0] + right[2:]
            for left, right in splits
            if len(right) > 1
        ]
        replaces = [
            left + ch + right[1:] for left, right in splits if right for ch in ALPHABET
        ]
        inserts = [left + ch + right for left, right in splits for ch in ALPHABET]
        return set(deletes + transposes + replaces + inserts)

    def _candidates(self, lowered: str) -> set[str]:
        edits1 = self._edits1(lowered)
        found = {e for e in edits1 if e in self.words}
        for e1 in edits1:
            for e2 in self._edits1(e1):
                if e2 in self.words:
                    found.add(e2)
        return found

    def best_correction(self, lowered: str) -> str | None:
        """Uniquely minimal in-lexicon candidate strictly below threshold."""
        if lowered in self._cache:
            return self._cache[lowered]
        costs = self.costs
        scored: list[tuple[float, str]] = []
        for cand in self._candidates(lowered):
            cost = weighted_distance(lowered, cand, costs)
            if cost < costs.threshold:
                scored.append((cost, cand))
        result: str | None = None
        if scored:
            scored.sort()
            best_cost = scored[0][0]
            tied = [c for cost, c in scored if abs(cost - best_cost) < 1e-9]
            if len(tied) == 1:
                result = tied[0]
        self._cache[lowered] = result
        return result


def _split_apostrophe(surface: str) -> tuple[str, str]:
    for mark in ("'", "’"):
        if mark in surface:
            stem, _, tail = surface.partition(mark)
            return stem, mark + tail
    return surface, ""


def _is_word(token: Token) -> bool:
    return any(ch.isalpha() for ch in token.surface)


def capitalize_proper_nouns(
    tokens: list[Token], lexicon: SpellLexicon
) -> list[Correction]:
    """Restore gazetteer casing for proper nouns typed with a wrong first
    letter; apostrophe-attached suffixes are carried over verbatim. Tokens
    whose lowercase form is also a common word are left alone."""
    corrections: list[Correction] = []
    for token in tokens:
        if not _is_word(token):
            continue
        stem, suffix = _split_apostrophe(token.surface)
        lowered = turkish_lower(stem)
        canon = lexicon.gazetteer.get(lowered)
        if canon is None or lowered in lexicon.words:
            continue
        if stem != canon and stem[:1] != canon[:1]:
            corrections.append(
                Correction(
                    span_start=token.start,
                    span_end=token.end,
                    replacement=canon + suffix,
                    rule_id=SPELL_RULE_ID,
                    stage=SPELL_STAGE,
                )
            )
    return corrections


def normalize_typos(tokens: list[Token], lexicon: SpellLexicon) -> list[Correction]:
    """Repair out-of-lexicon tokens with a uniquely minimal cheap candidate."""
    costs = lexicon.costs
    corrections: list[Correction] = []
    for token in tokens:
        surface = token.surface
        if not _is_word(token):
            continue
        if any(m in surface for m in ("'", "’", "-")) or any(
            ch.isdigit() for ch in surface
        ):
            continue
        if not (costs.min_length <= len(surface) <= costs.max_token_length):
            continue
        lowered = turkish_lower(surface)
        if lexicon.known(lowered):
            continue
        candidate = lexicon.best_correction(lowered)
        if candidate is None:
            continue
        replacement = (
            capitalize_first(candidate)
            if surface[0] != turkish_lower(surface[0])
            else candidate
        )
        if replacement != surface:
            corrections.append(
                Correction(
                    span_start=token.start,
                    span_end=token.end,
                    replacement=replacement,
                    rule_id=SPELL_RULE_ID,
                    stage=SPELL_STAGE,
                )
            )
    return corrections


def run_spell_pass(
    text: str,
    grammar_corrections: list[Correction],
    lexicon: SpellLexicon,
    sentences=None,
) -> list[Correction]:
    """Capitalization then typo repair over tokens untouched by grammar."""
    if sentences is None:
        sentences = segment(text)
    occupied = [(c.span_start, c.span_end) for c in grammar_corrections]

    def untouched(token: Token) -> bool:
        return all(token.end <= s or token.start >= e for s, e in occupied)

    tokens = [t for sent in sentences for t in sent.tokens if untouched(t)]
    corrections = capitalize_proper_nouns(tokens, lexicon)
    capitalized = {(c.span_start, c.span_end) for c in corrections}
    remaining = [t for t in tokens if (t.start, t.end) not in capitalized]
    corrections.extend(normalize_typos(remaining, lexicon))
    return sorted(corrections, key=lambda c: c.span_start)
