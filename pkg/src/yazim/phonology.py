"""Turkish phonology helpers shared by the grammar and spelling engines.

Covers the small set of alternations the correction rules rely on:
vowel harmony for the separated "de/da" conjunction, haplology (vowel
drop in bisyllabic stems), final-consonant voicing, and locale-correct
casing with the dotted/dotless i distinction.
"""

FRONT_VOWELS = frozenset("eiöü")
BACK_VOWELS = frozenset("aıou")
VOWELS = FRONT_VOWELS | BACK_VOWELS

# Core 29-letter alphabet, used for spelling candidate generation too.
ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyz"

_LOWER_MAP = {"İ": "i", "I": "ı"}
_UPPER_MAP = {"i": "İ", "ı": "I"}


def turkish_lower(word: str) -> str:
    """Lowercase with Turkish casing: İ→i and I→ı."""
    return "".join(_LOWER_MAP.get(c, c) for c in word).lower()


def turkish_upper(word: str) -> str:
    """Uppercase with Turkish casing: i→İ and ı→I."""
    return "".join(_UPPER_MAP.get(c, c) for c in word).upper()


def turkish_case_fold(word: str, direction: str) -> str:
    """Fold `word` to "lower" or "upper" using Turkish casing rules."""
    if direction == "lower":
        return turkish_lower(word)
    if direction == "upper":
        return turkish_upper(word)
    raise ValueError(f"unknown casing direction: {direction!r}")


def capitalize_first(word: str) -> str:
    """Uppercase only the first letter, Turkish-aware; rest unchanged."""
    if not word:
        return word
    return turkish_upper(word[0]) + word[1:]


def lower_first(word: str) -> str:
    if not word:
        return word
    return turkish_lower(word[0]) + word[1:]


def last_vowel(word: str) -> str | None:
    """Rightmost Turkish vowel of `word` after lowercasing, or None."""
    for ch in reversed(turkish_lower(word)):
        if ch in VOWELS:
            return ch
    return None


def is_back(vowel: str) -> bool:
    return vowel in BACK_VOWELS


def harmonize_de(host: str) -> str:
    """Surface form of the separated conjunction after `host`: "de" or "da".

    The conjunction follows the host's backness only; unlike the locative
    suffix it never surfaces as "te/ta".
    """
    v = last_vowel(host)
    if v is None:
        raise ValueError(f"cannot harmonize conjunction: {host!r} has no vowel")
    return "da" if is_back(v) else "de"


_FOURFOLD = {
    "a": "ı", "ı": "ı",
    "e": "i", "i": "i",
    "o": "u", "u": "u",
    "ö": "ü", "ü": "ü",
}


def harmonize_fourfold(host: str) -> str:
    """High-vowel harmony class (ı/i/u/ü) selected by the host's last vowel.

    Decides the vowel of the question particle mı/mi/mu/mü.
    """
    v = last_vowel(host)
    if v is None:
        raise ValueError(f"cannot harmonize particle: {host!r} has no vowel")
    return _FOURFOLD[v]


def drop_haplology_vowel(stem: str) -> str:
    """Remove the final-syllable vowel of a bisyllabic stem (ağız → ağz).

    The caller guarantees the stem is in the haplology lexicon; this only
    checks that a droppable vowel exists (non-final, with an earlier vowel).
    """
    lowered = turkish_lower(stem)
    idx = None
    for i in range(len(lowered) - 1, -1, -1):
        if lowered[i] in VOWELS:
            idx = i
            break
    if idx is None or idx == len(stem) - 1:
        raise ValueError(f"no droppable final-syllable vowel in {stem!r}")
    if not any(c in VOWELS for c in lowered[:idx]):
        raise ValueError(f"{stem!r} is not bisyllabic")
    return stem[:idx] + stem[idx + 1 :]


_VOICING = {"p": "b", "ç": "c", "t": "d"}


def voice_final_consonant(word: str) -> str:
    """Voice the final consonant: p→b, ç→c, t→d, k→ğ (k→g after n)."""
    if not word:
        raise ValueError("empty word has no final consonant")
    final = word[-1]
    if final in _VOICING:
        return word[:-1] + _VOICING[final]
    if final == "k":
        prev = word[-2] if len(word) > 1 else ""
        return word[:-1] + ("g" if prev == "n" else "ğ")
    raise ValueError(f"{word!r} does not end in a voiceable consonant")
