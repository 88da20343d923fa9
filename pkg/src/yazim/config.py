"""Runtime configuration from environment variables or a key=value file.

Recognized keys: PORT, STORE_PATH, LEXICON_DIR, CATALOG_PATH, WORDLIST_PATH,
GAZETTEER_PATH, SPELL_COSTS_PATH, MAX_INPUT_CHARS, ALLOWED_ORIGIN.
Environment variables override file entries; unset keys fall back to the
bundled data and local defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8000
    store_path: Path = Path("yazim_store.log")
    lexicon_dir: Path | None = None
    catalog_path: Path | None = None
    wordlist_path: Path | None = None
    gazetteer_path: Path | None = None
    spell_costs_path: Path | None = None
    max_input_chars: int = 100_000
    allowed_origin: str = "*"


def _read_config_file(path: Path) -> dict[str, str]:
    values: dict[str, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        values[key.strip().upper()] = value.strip()
    return values


def load_config(config_file: str | Path | None = None, **overrides) -> ServiceConfig:
    values: dict[str, str] = {}
    if config_file:
        values.update(_read_config_file(Path(config_file)))
    for key in (
        "PORT",
        "STORE_PATH",
        "LEXICON_DIR",
        "CATALOG_PATH",
        "WORDLIST_PATH",
        "GAZETTEER_PATH",
        "SPELL_COSTS_PATH",
        "MAX_INPUT_CHARS",
        "ALLOWED_ORIGIN",
    ):
        if key in os.environ:
            values[key] = os.environ[key]

    def path_or_none(key: str) -> Path | None:
        return Path(values[key]) if key in values else None

    config = ServiceConfig(
        port=int(values.get("PORT", 8000)),
        store_path=Path(values.get("STORE_PATH", "yazim_store.log")),
        lexicon_dir=path_or_none("LEXICON_DIR"),
        catalog_path=path_or_none("CATALOG_PATH"),
        wordlist_path=path_or_none("WORDLIST_PATH"),
        gazetteer_path=path_or_none("GAZETTEER_PATH"),
        spell_costs_path=path_or_none("SPELL_COSTS_PATH"),
        max_input_chars=int(values.get("MAX_INPUT_CHARS", 100_000)),
        allowed_origin=values.get("ALLOWED_ORIGIN", "*"),
    )
    if overrides:
        from dataclasses import replace

        config = replace(config, **overrides)
    return config
