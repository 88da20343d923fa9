import pytest

from yazim.catalog import (
    CatalogError,
    RuleNotFoundError,
    describe,
    dump_catalog,
    load_catalog,
)

CORE_CATEGORY_COLORS = {
    "-DE/-DA": "red",
    "-KI": "navy",
    "FOREIGN": "purple",
    "BISYL": "pink",
    "LIGHT VERB": "blue",
    "COMPOUND": "turquoise",
    "SINGLE": "orange",
}


class TestLoad:
    def test_default_catalog_loads(self, catalog):
        assert len(catalog) >= 11

    def test_rule_1(self, catalog):
        rule = catalog.get(1)
        assert rule.mnemonic == "CONJ_DE_SEP"
        assert rule.description_en == "Conjunction “-de/-da” is written separately."
        assert rule.color == "red"
        assert (rule.example_before, rule.example_after) == ("oğlunada", "oğluna da")

    def test_rule_22(self, catalog):
        rule = catalog.get(22)
        assert rule.mnemonic == "PRONOUN_EXC"
        assert rule.color == "orange"
        assert (rule.example_before, rule.example_after) == ("hiç bir", "hiçbir")

    def test_reference_rows_present(self, catalog):
        expected = {
            1: "CONJ_DE_SEP", 7: "CONJ_KI_SEP", 9: "FOREIGN_R1",
            13: "BISYLL_HAPL_VOW", 17: "LIGHT_VERB_SEP", 20: "COMP_VERB_ADJ",
            22: "PRONOUN_EXC", 101: "LIGHT_VERB_ADJ", 102: "QUES_CLITIC_SEP",
            103: "REDUP_SEP", 104: "ADV_VOWEL_RESTORE", 200: "SPELL",
        }
        for rule_id, mnemonic in expected.items():
            assert catalog.get(rule_id).mnemonic == mnemonic
            assert catalog.get_by_mnemonic(mnemonic).rule_id == rule_id

    def test_category_colors(self, catalog):
        for rule in catalog:
            if rule.category in CORE_CATEGORY_COLORS:
                assert rule.color == CORE_CATEGORY_COLORS[rule.category]

    def test_examples_differ(self, catalog):
        for rule in catalog:
            assert rule.example_before != rule.example_after

    def test_missing_file(self, tmp_path):
        with pytest.raises(CatalogError, match="not found"):
            load_catalog(tmp_path / "nope.tsv")

    def test_duplicate_rule_id_names_lines(self, tmp_path):
        p = tmp_path / "dup.tsv"
        row = "7\tA{n}\tCAT\tred\tt\te\tx\ty"
        p.write_text(row.format(n=1) + "\n" + row.format(n=2) + "\n", encoding="utf-8")
        with pytest.raises(CatalogError, match=r"line 2.*line 1"):
            load_catalog(p)

    def test_duplicate_mnemonic(self, tmp_path):
        p = tmp_path / "dup.tsv"
        p.write_text(
            "1\tSAME\tCAT\tred\tt\te\tx\ty\n2\tSAME\tCAT\tred\tt\te\tx\ty\n",
            encoding="utf-8",
        )
        with pytest.raises(CatalogError, match="duplicate mnemonic"):
            load_catalog(p)

    def test_unknown_color(self, tmp_path):
        p = tmp_path / "color.tsv"
        p.write_text("1\tA\tCAT\tmagenta-ish\tt\te\tx\ty\n", encoding="utf-8")
        with pytest.raises(CatalogError, match="unknown color"):
            load_catalog(p)

    def test_category_color_conflict(self, tmp_path):
        p = tmp_path / "cat.tsv"
        p.write_text(
            "1\tA\tCAT\tred\tt\te\tx\ty\n2\tB\tCAT\tblue\tt\te\tx\ty\n",
            encoding="utf-8",
        )
        with pytest.raises(CatalogError, match="already uses color"):
            load_catalog(p)


class TestDescribe:
    def test_haplology_description(self, catalog):
        assert "undergo haplology" in describe(catalog, 13).description_en

    def test_light_verb_row(self, catalog):
        rule = describe(catalog, 17)
        assert rule.category == "LIGHT VERB"
        assert rule.color == "blue"

    def test_unknown_id(self, catalog):
        with pytest.raises(RuleNotFoundError):
            describe(catalog, 999)


class TestRoundTrip:
    def test_dump_and_reload_identical(self, catalog, tmp_path):
        p = tmp_path / "roundtrip.tsv"
        p.write_text(dump_catalog(catalog), encoding="utf-8")
        assert load_catalog(p) == catalog


class TestEngineIntegration:
    def test_every_emitted_rule_id_resolves(self, catalog, lexicons):
        for rule_id, _, _ in lexicons.roundtrip_pairs():
            describe(catalog, rule_id)
