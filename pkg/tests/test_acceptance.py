"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line (run with `pytest tests/test_acceptance.py -v -s` to see them live).

Tolerances are pinned here: string comparisons are exact, the scenario must
reproduce the expected outcome vector, timing bounds are 1 s / 5 s / 90 s,
and the latency-vs-words correlation threshold is 0.95.
"""

import json
import random
import string
import subprocess
import sys
import threading
import time
from contextlib import contextmanager

import pytest
from fastapi.testclient import TestClient

from yazim.annotate import merge_and_offset, strip_markup, to_markup, to_plain
from yazim.config import ServiceConfig
from yazim.evaluation import run_scenario, run_timing
from yazim.grammar import Correction, run_grammar_pass
from yazim.phonology import turkish_lower
from yazim.service import create_app
from yazim.spell import run_spell_pass
from yazim.store import Store

from .oracles import apply_corrections_sequential


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE FAIL: {name}")
        raise
    print(f"ACCEPTANCE PASS: {name}")


# One sentence per core catalog rule: (sentence, corrected, rule_id).
CORE_RULE_CASES = [
    ("Durumu oğlunada bildirdi.", "Durumu oğluna da bildirdi.", 1),
    ("Bugün öyle çok yorulmuşki hemen yattı.", "Bugün öyle çok yorulmuş ki hemen yattı.", 7),
    ("O gıram altın aldı.", "O gram altın aldı.", 9),
    ("Çocuğun ağızı açık kaldı.", "Çocuğun ağzı açık kaldı.", 13),
    ("Durumu size arzetmek istiyorum.", "Durumu size arz etmek istiyorum.", 17),
    ("Böyle gide durmak olmaz.", "Böyle gidedurmak olmaz.", 20),
    ("Artık hiç bir şey eskisi gibi olmayacak.", "Artık hiçbir şey eskisi gibi olmayacak.", 22),
]

EXPECTED_CASE_VECTOR = (4, 1, 1, 1, 3, 1, 1, 1, 2, 1)


def test_core_rule_reproduction(pipeline):
    with criterion("seven core rule example pairs reproduce exactly, tagged, in < 1 s"):
        started = time.perf_counter()
        for sentence, expected, rule_id in CORE_RULE_CASES:
            doc = pipeline.correct(sentence)
            assert to_plain(doc) == expected, sentence
            assert [a.rule_id for a in doc.annotations] == [rule_id], sentence
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"took {elapsed:.2f}s"


def test_scenario_reproduction(pipeline):
    with criterion(
        "10-sentence scenario outputs match, case vector (4,1,1,1,3,1,1,1,2,1), < 5 s"
    ):
        started = time.perf_counter()
        report = run_scenario(pipeline)
        elapsed = time.perf_counter() - started
        for outcome in report.items:
            assert outcome.output_match, outcome.item.input
        assert report.case_vector == EXPECTED_CASE_VECTOR
        assert report.counts == {"tp": 7, "tn": 1, "fp": 1, "fn": 1}
        assert elapsed < 5.0, f"took {elapsed:.2f}s"


def test_sec_behavior(pipeline, spell_lexicon):
    with criterion(
        "SEC fixes yapmk/istiyrum/ankara; 10k in-lexicon words, 0 false corrections"
    ):
        assert to_plain(pipeline.correct("yapmk")) == "yapmak"
        assert (
            to_plain(pipeline.correct("Tatil yapmak istiyrum fakat çalışmaya devam etmem şart."))
            == "Tatil yapmak istiyorum fakat çalışmaya devam etmem şart."
        )
        assert to_plain(pipeline.correct("ankara")) == "Ankara"

        rng = random.Random(1234)
        sample = rng.sample(sorted(spell_lexicon.words), 10_000)
        corrections = run_spell_pass(" ".join(sample), [], spell_lexicon)
        assert corrections == [], f"{len(corrections)} false corrections"


def test_offset_property_suite(catalog):
    with criterion("offset invariants over >= 1000 randomized documents, 100%"):
        rng = random.Random(99)
        alphabet = string.ascii_letters + "çğıöşüÇĞİÖŞÜ .,\n"
        replacement_alphabet = string.ascii_lowercase + "çğıöşü "
        checked = 0
        for _ in range(1000):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 120)))
            corrections = []
            pos = 0
            while pos < len(text):
                start = pos + rng.randint(0, 10)
                end = start + rng.randint(1, 8)
                if end > len(text):
                    break
                if "\n" in text[start:end]:
                    pos = end + 1
                    continue
                replacement = "".join(
                    rng.choice(replacement_alphabet) for _ in range(rng.randint(0, 9))
                )
                if replacement != text[start:end]:
                    corrections.append(Correction(start, end, replacement, 200, "spell"))
                pos = end + rng.randint(1, 6)
            doc = merge_and_offset(text, corrections, catalog)
            expected = apply_corrections_sequential(
                text, [(c.span_start, c.span_end, c.replacement) for c in corrections]
            )
            assert doc.corrected == expected
            for ann in doc.annotations:
                assert doc.corrected[ann.out_start : ann.out_end] == ann.replacement
                assert doc.original[ann.in_start : ann.in_end] == ann.original_text
            assert strip_markup(to_markup(doc)).split() == doc.corrected.split()
            checked += 1
        assert checked >= 1000


def test_reverse_transformation_roundtrip(lexicons):
    with criterion("forward-corrupt then correct recovers every lexicon entry, 100%"):
        pairs = lexicons.roundtrip_pairs()
        assert len(pairs) >= 150
        failures = []
        for rule_id, corrupted, canonical in pairs:
            corrections = run_grammar_pass(corrupted, lexicons)
            recovered = apply_corrections_sequential(
                corrupted,
                [(c.span_start, c.span_end, c.replacement) for c in corrections],
            )
            if recovered != canonical:
                failures.append((rule_id, corrupted, recovered, canonical))
        assert failures == []


def test_timing(pipeline):
    with criterion("14k words in < 90 s and latency-words Pearson r >= 0.95"):
        report = run_timing(pipeline, [1000, 2000, 4000, 8000, 14000], seed=2024)
        final = report.rows[-1]
        assert final.words >= 14_000
        assert final.elapsed_ms < 90_000, f"{final.elapsed_ms:.0f} ms"
        assert report.pearson_r >= 0.95, f"r={report.pearson_r:.4f}"


def test_concurrency(pipeline, tmp_path):
    with criterion(
        "10 simultaneous requests match single-threaded output; 10 unique sessions"
    ):
        texts = [case[0] for case in CORE_RULE_CASES] + [
            "Bu projeyi yapmk istiyormusun?",
            "İçerde kimsenin olmadığını gördü ve bağırmaya başladı.",
            "Düştüğü bu durumdan kurtulmak için karakara düşünüyordu.",
        ]
        assert len(texts) == 10
        expected = {t: to_plain(pipeline.correct(t)) for t in texts}

        store = Store(tmp_path / "store.log")
        app = create_app(
            ServiceConfig(store_path=tmp_path / "store.log"),
            pipeline=pipeline,
            store=store,
        )
        client = TestClient(app)
        results: dict[str, dict] = {}
        errors: list[Exception] = []

        def call(text: str):
            try:
                results[text] = client.post("/api/correct", json={"text": text}).json()
            except Exception as exc:  # pragma: no cover
                errors.append(exc)

        threads = [threading.Thread(target=call, args=(t,)) for t in texts]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert errors == []
        assert len(results) == 10
        for text, body in results.items():
            assert body["corrected"] == expected[text], text
        session_ids = [body["session_id"] for body in results.values()]
        assert len(set(session_ids)) == 10
        assert len(store.list_sessions()) == 10


READBACK_SNIPPET = """
import json, sys
from yazim.store import Store
store = Store(sys.argv[1])
sessions = {s.session_id: s.to_dict() for s in store.list_sessions()}
feedback = [f.to_dict() for f in store.list_feedback()]
print(json.dumps({"sessions": sessions, "feedback": feedback},
                 ensure_ascii=False, sort_keys=True))
"""


def test_persistence_roundtrip(pipeline, tmp_path):
    with criterion("records survive a process restart byte-identically"):
        store_path = tmp_path / "store.log"
        store = Store(store_path)
        doc = pipeline.correct("Bu projeyi yapmk istiyormusun?")
        session_id = store.save_session(doc, to_markup(doc), source="web")
        store.attach_correction_feedback(session_id, "Bu projeyi yapmak istiyor musun?")
        store.save_general_feedback("Harika araç!")
        before = json.dumps(
            {
                "sessions": {s.session_id: s.to_dict() for s in store.list_sessions()},
                "feedback": [f.to_dict() for f in store.list_feedback()],
            },
            ensure_ascii=False,
            sort_keys=True,
        )

        readback = subprocess.run(
            [sys.executable, "-c", READBACK_SNIPPET, str(store_path)],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert readback.returncode == 0, readback.stderr
        assert readback.stdout.strip().encode("utf-8") == before.encode("utf-8")

        after = json.loads(readback.stdout)
        session = after["sessions"][session_id]
        assert session["correction_feedback"] == "Bu projeyi yapmak istiyor musun?"
        assert after["feedback"][0]["message"] == "Harika araç!"
