import pytest

from yazim.catalog import load_catalog
from yazim.lexicons import load_lexicons
from yazim.pipeline import Pipeline, load_pipeline
from yazim.spell import SpellLexicon


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicons()


@pytest.fixture(scope="session")
def spell_lexicon():
    return SpellLexicon.load()


@pytest.fixture(scope="session")
def pipeline(catalog, lexicons, spell_lexicon) -> Pipeline:
    return Pipeline(catalog=catalog, lexicons=lexicons, spell_lexicon=spell_lexicon)


@pytest.fixture()
def fresh_pipeline() -> Pipeline:
    return load_pipeline()
