"""The correction pipeline shared by the service, the CLI and the harness:
segmentation, grammar pass, spell pass, annotation merge."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .annotate import AnnotatedDocument, merge_and_offset
from .catalog import RuleCatalog, load_catalog
from .grammar import RuleLexiconTagger, Tagger, run_grammar_pass
from .lexicons import LexiconSet, load_lexicons
from .segmentation import segment
from .spell import SpellLexicon, run_spell_pass


@dataclass
class Pipeline:
    catalog: RuleCatalog
    lexicons: LexiconSet
    spell_lexicon: SpellLexicon
    tagger: Tagger | None = None

    @property
    def engine_version(self) -> str:
        return __version__

    @property
    def lexicon_version(self) -> str:
        return self.lexicons.version

    def correct(self, text: str) -> AnnotatedDocument:
        sentences = segment(text)
        grammar = run_grammar_pass(
            text, self.lexicons, tagger=self.tagger, sentences=sentences
        )
        spelling = run_spell_pass(text, grammar, self.spell_lexicon, sentences=sentences)
        corrections = sorted(grammar + spelling, key=lambda c: c.span_start)
        return merge_and_offset(text, corrections, self.catalog)


def load_pipeline(
    catalog_path: str | Path | None = None,
    lexicon_dir: str | Path | None = None,
    wordlist_path: str | Path | None = None,
    gazetteer_path: str | Path | None = None,
    costs_path: str | Path | None = None,
    disabled_rules: tuple[int, ...] = (),
) -> Pipeline:
    """Pipeline over the bundled data unless paths are overridden."""
    lexicons = load_lexicons(lexicon_dir)
    tagger = RuleLexiconTagger(lexicons, disabled_rules) if disabled_rules else None
    return Pipeline(
        catalog=load_catalog(catalog_path),
        lexicons=lexicons,
        spell_lexicon=SpellLexicon.load(wordlist_path, gazetteer_path, costs_path),
        tagger=tagger,
    )
