import pytest

from yazim.evaluation import (
    UNCHANGED,
    build_corpus,
    classify_outcome,
    is_wrong_change,
    load_scenario,
    run_scenario,
    run_timing,
)
from yazim.pipeline import load_pipeline

ROW2_INPUT = "Onu baban görmeden hemen ortadan kayıp et."
ROW2_FIXED = "Onu baban görmeden hemen ortadan kaybet."
ROW9_INPUT = "Sanki uyurgezer biri gibi çarşıyı baştan başa adımladı."
ROW5_INPUT = "Bir takım ansiklopediye dünyanın parasını ödedim."
ROW5_OUTPUT = "Birtakım ansiklopediye dünyanın parasını ödedim."


class TestClassifyOutcome:
    def test_true_positive(self):
        assert classify_outcome(ROW2_INPUT, ROW2_FIXED, ROW2_FIXED) == 1

    def test_true_negative(self):
        assert classify_outcome(ROW9_INPUT, UNCHANGED, UNCHANGED) == 2

    def test_false_positive(self):
        assert classify_outcome(ROW5_INPUT, ROW5_OUTPUT, UNCHANGED) == 3

    def test_false_negative(self):
        assert classify_outcome("hatalı giriş", "hatalı giriş", "düzgün giriş") == 4

    def test_wrong_change_binned_as_4_and_flagged(self):
        case = classify_outcome("giriş bir", "çıkış iki", "giriş üç")
        assert case == 4
        assert is_wrong_change("giriş bir", "çıkış iki", "giriş üç")
        assert not is_wrong_change(ROW2_INPUT, ROW2_FIXED, ROW2_FIXED)

    def test_total_and_deterministic(self):
        texts = ("a", "b", "c")
        for output in texts:
            for truth in texts:
                first = classify_outcome("a", output, truth)
                assert first in (1, 2, 3, 4)
                assert classify_outcome("a", output, truth) == first


class TestScenario:
    def test_bundled_scenario_has_ten_items(self):
        items = load_scenario()
        assert len(items) == 10
        assert [i.expected_case for i in items] == [4, 1, 1, 1, 3, 1, 1, 1, 2, 1]

    def test_full_match_on_reference_build(self, pipeline):
        report = run_scenario(pipeline)
        assert report.case_vector == (4, 1, 1, 1, 3, 1, 1, 1, 2, 1)
        assert report.counts == {"tp": 7, "tn": 1, "fp": 1, "fn": 1}
        assert report.all_match
        assert not any(o.wrong_change for o in report.items)

    def test_disabled_rule_flags_mismatch(self):
        degraded = load_pipeline(disabled_rules=(103,))
        report = run_scenario(degraded)
        row6 = report.items[5]
        assert "karakara" in row6.item.input
        assert row6.actual_case == 4
        assert not row6.case_match
        assert not report.all_match

    def test_report_serializes(self, pipeline):
        report = run_scenario(pipeline)
        payload = report.to_dict()
        assert len(payload["items"]) == 10
        assert payload["counts"]["tp"] == 7


class TestCorpus:
    def test_deterministic_for_seed(self):
        assert build_corpus(500, seed=9) == build_corpus(500, seed=9)

    def test_different_seeds_differ(self):
        assert build_corpus(500, seed=1) != build_corpus(500, seed=2)

    def test_word_count_reached(self):
        text = build_corpus(1000, seed=3)
        assert len(text.split()) >= 1000


class TestTiming:
    def test_rows_and_correlation(self, pipeline):
        report = run_timing(pipeline, [200, 400, 800], seed=5, repeats=1)
        assert [r.words >= s for r, s in zip(report.rows, [200, 400, 800])]
        assert all(r.elapsed_ms > 0 for r in report.rows)
        assert -1.0 <= report.pearson_r <= 1.0

    def test_sizes_must_ascend(self, pipeline):
        with pytest.raises(ValueError):
            run_timing(pipeline, [400, 200], repeats=1)

    def test_loopback_http_mode(self, pipeline):
        report = run_timing(pipeline, [100, 200], seed=5, repeats=1, via_http=True)
        assert len(report.rows) == 2
        assert all(r.elapsed_ms > 0 for r in report.rows)

    def test_linear_over_six_sizes_with_independent_pearson(self, pipeline):
        sizes = [500, 1000, 2000, 4000, 8000, 12000]
        report = run_timing(pipeline, sizes, seed=11, repeats=2)
        assert len(report.rows) == 6
        # Oracle: Pearson r from its definition, independent of statistics.
        xs = [float(r.words) for r in report.rows]
        ys = [r.elapsed_ms for r in report.rows]
        n = len(xs)
        mx, my = sum(xs) / n, sum(ys) / n
        cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
        sx = sum((x - mx) ** 2 for x in xs) ** 0.5
        sy = sum((y - my) ** 2 for y in ys) ** 0.5
        oracle_r = cov / (sx * sy)
        assert report.pearson_r == pytest.approx(oracle_r, abs=1e-9)
        assert report.pearson_r >= 0.95
