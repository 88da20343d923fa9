"""Loading of the per-rule lexicon files that drive the grammar engine.

Each rule family has one UTF-8 TSV file in the lexicon directory, named by
its mnemonic. Files are either pair-shaped (corrupted → canonical), flagged
stems, or plain guard lists. A `version` file stamps the whole set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .phonology import harmonize_de, harmonize_fourfold

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_LEXICON_DIR = _DATA_DIR / "lexicons"


class LexiconError(Exception):
    """Missing or malformed lexicon file."""


def _rows(path: Path, columns: int) -> list[list[str]]:
    if not path.exists():
        raise LexiconError(f"lexicon file not found: {path}")
    rows = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != columns:
            raise LexiconError(
                f"{path.name} line {lineno}: expected {columns} columns, got {len(cols)}"
            )
        rows.append(cols)
    return rows


@dataclass(frozen=True)
class HaplologyEntry:
    stem: str
    reduced: str
    mode: str  # "drop" or "voice"


@dataclass
class LexiconSet:
    version: str
    de_pronouns: frozenset[str]
    de_hosts: list[tuple[str, str]]  # (host, class) incl. round-trip material
    de_locative_exceptions: frozenset[str]
    ki_exceptions: frozenset[str]
    ki_hosts: frozenset[str]
    ki_examples: list[tuple[str, str]]
    ques_hosts: frozenset[str]
    ques_examples: list[tuple[str, str]]
    foreign_pairs: dict[str, str]
    haplology: dict[str, HaplologyEntry]
    light_verb_sep: dict[str, str]  # noun -> sample auxiliary infinitive
    light_verb_adj: dict[str, tuple[str, str]]  # noun -> (fused stem, sample aux)
    converbs: dict[str, str]  # converb -> sample auxiliary
    pronoun_pairs: dict[tuple[str, str], str]
    redup_words: frozenset[str]
    adverb_pairs: dict[str, str]
    _sorted_foreign: list[str] = field(default_factory=list, repr=False)
    _sorted_haplology: list[str] = field(default_factory=list, repr=False)
    _sorted_adverbs: list[str] = field(default_factory=list, repr=False)
    _sorted_sep_nouns: list[str] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        # Longest-first so that prefix matching picks the most specific stem.
        self._sorted_foreign = sorted(self.foreign_pairs, key=len, reverse=True)
        self._sorted_haplology = sorted(self.haplology, key=len, reverse=True)
        self._sorted_adverbs = sorted(self.adverb_pairs, key=len, reverse=True)
        self._sorted_sep_nouns = sorted(self.light_verb_sep, key=len, reverse=True)

    def roundtrip_pairs(self) -> list[tuple[int, str, str]]:
        """(rule_id, corrupted, canonical) for every correctable lexicon entry.

        Corruption applies each rule's forward transformation (fusing a
        clitic, joining or splitting the pair, restoring the raw stem), so
        running the engine over the corrupted side must recover the
        canonical side exactly.
        """
        pairs: list[tuple[int, str, str]] = []
        for host, cls in self.de_hosts:
            particle = harmonize_de(host)
            canonical = f"{host} {particle}"
            if cls == "proper":
                corrupted = f"{host}'{particle}"
            else:
                corrupted = host + particle
            pairs.append((1, corrupted, canonical))
        for host in sorted(self.ki_hosts):
            pairs.append((7, host + "ki", f"{host} ki"))
        pairs.extend((7, bad, good) for bad, good in self.ki_examples)
        for bad, good in sorted(self.foreign_pairs.items()):
            pairs.append((9, bad, good))
        for entry in self.haplology.values():
            suffix = harmonize_fourfold(entry.stem)
            pairs.append((13, entry.stem + suffix, entry.reduced + suffix))
        for noun, aux in sorted(self.light_verb_sep.items()):
            pairs.append((17, noun + aux, f"{noun} {aux}"))
        for converb, aux in sorted(self.converbs.items()):
            pairs.append((20, f"{converb} {aux}", converb + aux))
        for (first, second), joined in sorted(self.pronoun_pairs.items()):
            pairs.append((22, f"{first} {second}", joined))
        for noun, (fused, aux) in sorted(self.light_verb_adj.items()):
            pairs.append((101, f"{noun} {aux}", fused + aux))
        for host in sorted(self.ques_hosts):
            particle = "m" + harmonize_fourfold(host)
            pairs.append((102, host + particle, f"{host} {particle}"))
        pairs.extend((102, bad, good) for bad, good in self.ques_examples)
        for word in sorted(self.redup_words):
            pairs.append((103, word + word, f"{word} {word}"))
        for bad, good in sorted(self.adverb_pairs.items()):
            pairs.append((104, bad, good))
        return pairs


def load_lexicons(directory: str | Path | None = None) -> LexiconSet:
    d = Path(directory) if directory else DEFAULT_LEXICON_DIR
    if not d.is_dir():
        raise LexiconError(f"lexicon directory not found: {d}")
    version_file = d / "version"
    version = (
        version_file.read_text(encoding="utf-8").strip() if version_file.exists() else "0"
    )

    de_rows = _rows(d / "conj_de_hosts.tsv", 2)
    return LexiconSet(
        version=version,
        de_pronouns=frozenset(h for h, cls in de_rows if cls == "pronoun"),
        de_hosts=[(h, cls) for h, cls in de_rows],
        de_locative_exceptions=frozenset(
            r[0] for r in _rows(d / "conj_de_locative_exceptions.tsv", 1)
        ),
        ki_exceptions=frozenset(r[0] for r in _rows(d / "conj_ki_exceptions.tsv", 1)),
        ki_hosts=frozenset(r[0] for r in _rows(d / "conj_ki_hosts.tsv", 1)),
        ki_examples=[(r[0], r[1]) for r in _rows(d / "conj_ki_examples.tsv", 2)],
        ques_hosts=frozenset(r[0] for r in _rows(d / "ques_hosts.tsv", 1)),
        ques_examples=[(r[0], r[1]) for r in _rows(d / "ques_examples.tsv", 2)],
        foreign_pairs={r[0]: r[1] for r in _rows(d / "foreign_pairs.tsv", 2)},
        haplology={
            r[0]: HaplologyEntry(r[0], r[1], r[2])
            for r in _rows(d / "haplology_stems.tsv", 3)
        },
        light_verb_sep={r[0]: r[1] for r in _rows(d / "light_verb_sep.tsv", 2)},
        light_verb_adj={r[0]: (r[1], r[2]) for r in _rows(d / "light_verb_adj.tsv", 3)},
        converbs={r[0]: r[1] for r in _rows(d / "compound_converbs.tsv", 2)},
        pronoun_pairs={
            tuple(r[0].split(" ", 1)): r[1] for r in _rows(d / "pronoun_pairs.tsv", 2)
        },
        redup_words=frozenset(r[0] for r in _rows(d / "redup_words.tsv", 1)),
        adverb_pairs={r[0]: r[1] for r in _rows(d / "adverb_restore.tsv", 2)},
    )
