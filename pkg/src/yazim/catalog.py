"""Machine-readable catalog of the writing rules the engine can correct.

Each rule carries an id, a mnemonic, a category, bilingual explanations,
a display color, and a before/after example. The engine, the renderer,
the API and the UI all resolve rule metadata through this catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_CATALOG_PATH = _DATA_DIR / "rules.tsv"

# Fixed display palette; every category maps to exactly one of these.
PALETTE = frozenset(
    {
        "red",
        "navy",
        "purple",
        "pink",
        "blue",
        "turquoise",
        "orange",
        "green",
        "brown",
        "teal",
        "gray",
    }
)

SPELL_RULE_ID = 200


class CatalogError(Exception):
    """Malformed catalog file."""


class RuleNotFoundError(LookupError):
    """Lookup for a rule id or mnemonic that is not in the catalog."""


@dataclass(frozen=True)
class RuleSpec:
    rule_id: int
    mnemonic: str
    category: str
    color: str
    description_tr: str
    description_en: str
    example_before: str
    example_after: str


_COLUMNS = [f.name for f in fields(RuleSpec)]


class RuleCatalog:
    def __init__(self, rules: list[RuleSpec], version: str = "1"):
        self.rules = list(rules)
        self.version = version
        self._by_id = {r.rule_id: r for r in self.rules}
        self._by_mnemonic = {r.mnemonic: r for r in self.rules}

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RuleCatalog)
            and self.rules == other.rules
            and self.version == other.version
        )

    def get(self, rule_id: int) -> RuleSpec:
        try:
            return self._by_id[rule_id]
        except KeyError:
            raise RuleNotFoundError(f"no rule with id {rule_id}") from None

    def get_by_mnemonic(self, mnemonic: str) -> RuleSpec:
        try:
            return self._by_mnemonic[mnemonic]
        except KeyError:
            raise RuleNotFoundError(f"no rule with mnemonic {mnemonic!r}") from None

    def __contains__(self, rule_id: int) -> bool:
        return rule_id in self._by_id

    def to_dicts(self) -> list[dict]:
        return [
            {name: getattr(rule, name) for name in _COLUMNS} for rule in self.rules
        ]


def describe(catalog: RuleCatalog, rule_id: int) -> RuleSpec:
    """The RuleSpec for `rule_id`; raises RuleNotFoundError when absent."""
    return catalog.get(rule_id)


def load_catalog(path: str | Path | None = None) -> RuleCatalog:
    """Load the tab-separated rule catalog.

    Format: one rule per line with the columns rule_id, mnemonic, category,
    color, description_tr, description_en, example_before, example_after.
    Lines starting with '#' are comments; the first may carry `version=`.
    """
    p = Path(path) if path else DEFAULT_CATALOG_PATH
    if not p.exists():
        raise CatalogError(f"catalog file not found: {p}")

    rules: list[RuleSpec] = []
    seen_ids: dict[int, int] = {}
    seen_mnemonics: dict[str, int] = {}
    category_colors: dict[str, str] = {}
    version = "1"

    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            if "version=" in line:
                version = line.split("version=", 1)[1].strip()
            continue
        cols = line.split("\t")
        if len(cols) != len(_COLUMNS):
            raise CatalogError(
                f"line {lineno}: expected {len(_COLUMNS)} columns, got {len(cols)}"
            )
        try:
            rule_id = int(cols[0])
        except ValueError:
            raise CatalogError(f"line {lineno}: rule_id {cols[0]!r} is not an integer")
        if rule_id <= 0:
            raise CatalogError(f"line {lineno}: rule_id must be positive")
        mnemonic, category, color = cols[1], cols[2], cols[3]
        if rule_id in seen_ids:
            raise CatalogError(
                f"line {lineno}: duplicate rule_id {rule_id} "
                f"(first seen on line {seen_ids[rule_id]})"
            )
        if not mnemonic:
            raise CatalogError(f"line {lineno}: empty mnemonic")
        if mnemonic in seen_mnemonics:
            raise CatalogError(
                f"line {lineno}: duplicate mnemonic {mnemonic!r} "
                f"(first seen on line {seen_mnemonics[mnemonic]})"
            )
        if color not in PALETTE:
            raise CatalogError(f"line {lineno}: unknown color {color!r}")
        if category in category_colors and category_colors[category] != color:
            raise CatalogError(
                f"line {lineno}: category {category!r} already uses color "
                f"{category_colors[category]!r}"
            )
        if cols[6] == cols[7]:
            raise CatalogError(f"line {lineno}: example_before equals example_after")
        seen_ids[rule_id] = lineno
        seen_mnemonics[mnemonic] = lineno
        category_colors[category] = color
        rules.append(
            RuleSpec(
                rule_id=rule_id,
                mnemonic=mnemonic,
                category=category,
                color=color,
                description_tr=cols[4],
                description_en=cols[5],
                example_before=cols[6],
                example_after=cols[7],
            )
        )
    return RuleCatalog(rules, version=version)


def dump_catalog(catalog: RuleCatalog) -> str:
    """Serialize a catalog back to its tab-separated format."""
    lines = [f"# version={catalog.version}", "# " + "\t".join(_COLUMNS)]
    for rule in catalog.rules:
        lines.append("\t".join(str(getattr(rule, name)) for name in _COLUMNS))
    return "\n".join(lines) + "\n"
