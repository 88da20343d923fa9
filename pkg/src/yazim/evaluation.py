"""Scenario evaluation and the timing benchmark.

The scenario file carries inputs, the expected system output, the ground
truth, and the expected outcome case. Outcomes follow the four-way split:
1 the system fixed a real error, 2 it correctly left a clean sentence
alone, 3 it changed a clean sentence, 4 it missed an error. A change that
is itself wrong has no case of its own; it is binned as 4 and flagged.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path

from .annotate import to_plain
from .pipeline import Pipeline

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_SCENARIO_PATH = _DATA_DIR / "scenario.tsv"
DEFAULT_CORPUS_PATH = _DATA_DIR / "reference_sentences.txt"

UNCHANGED = "UNCHANGED"

CASE_TRUE_POSITIVE = 1
CASE_TRUE_NEGATIVE = 2
CASE_FALSE_POSITIVE = 3
CASE_FALSE_NEGATIVE = 4


@dataclass(frozen=True)
class ScenarioItem:
    input: str
    expected_system_output: str
    ground_truth: str
    expected_case: int


@dataclass
class ItemOutcome:
    item: ScenarioItem
    actual_output: str
    actual_case: int
    wrong_change: bool
    output_match: bool
    case_match: bool

    def to_dict(self) -> dict:
        return {
            "input": self.item.input,
            "expected_output": self.item.expected_system_output,
            "actual_output": self.actual_output,
            "expected_case": self.item.expected_case,
            "actual_case": self.actual_case,
            "wrong_change": self.wrong_change,
            "output_match": self.output_match,
            "case_match": self.case_match,
        }


@dataclass
class OutcomeReport:
    items: list[ItemOutcome] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        cases = [o.actual_case for o in self.items]
        return {
            "tp": cases.count(CASE_TRUE_POSITIVE),
            "tn": cases.count(CASE_TRUE_NEGATIVE),
            "fp": cases.count(CASE_FALSE_POSITIVE),
            "fn": cases.count(CASE_FALSE_NEGATIVE),
        }

    @property
    def case_vector(self) -> tuple[int, ...]:
        return tuple(o.actual_case for o in self.items)

    @property
    def all_match(self) -> bool:
        return all(o.output_match and o.case_match for o in self.items)

    def to_dict(self) -> dict:
        return {
            "items": [o.to_dict() for o in self.items],
            "counts": self.counts,
            "case_vector": list(self.case_vector),
            "all_match": self.all_match,
        }


def load_scenario(path: str | Path | None = None) -> list[ScenarioItem]:
    p = Path(path) if path else DEFAULT_SCENARIO_PATH
    items: list[ScenarioItem] = []
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        if not raw.strip() or raw.startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 4:
            raise ValueError(f"scenario line {lineno}: expected 4 columns")
        case = int(cols[3])
        if case not in (1, 2, 3, 4):
            raise ValueError(f"scenario line {lineno}: case must be 1-4")
        items.append(ScenarioItem(cols[0], cols[1], cols[2], case))
    return items


def classify_outcome(input_text: str, system_output: str, ground_truth: str) -> int:
    """Outcome case per the four-way protocol; see module docstring."""
    if system_output == UNCHANGED:
        system_output = input_text
    if ground_truth == UNCHANGED:
        ground_truth = input_text
    changed = system_output != input_text
    error_exists = ground_truth != input_text
    if changed and system_output == ground_truth:
        return CASE_TRUE_POSITIVE
    if not changed and not error_exists:
        return CASE_TRUE_NEGATIVE
    if changed and not error_exists:
        return CASE_FALSE_POSITIVE
    return CASE_FALSE_NEGATIVE


def is_wrong_change(input_text: str, system_output: str, ground_truth: str) -> bool:
    """The combination outside the four cases: changed, but not to the truth."""
    if system_output == UNCHANGED:
        system_output = input_text
    if ground_truth == UNCHANGED:
        ground_truth = input_text
    return (
        system_output != input_text
        and ground_truth != input_text
        and system_output != ground_truth
    )


def run_scenario(
    pipeline: Pipeline, scenario_path: str | Path | None = None
) -> OutcomeReport:
    """Run the full pipeline over every scenario item and score outcomes."""
    report = OutcomeReport()
    for item in load_scenario(scenario_path):
        actual = to_plain(pipeline.correct(item.input))
        expected = (
            item.input
            if item.expected_system_output == UNCHANGED
            else item.expected_system_output
        )
        case = classify_outcome(item.input, actual, item.ground_truth)
        report.items.append(
            ItemOutcome(
                item=item,
                actual_output=actual,
                actual_case=case,
                wrong_change=is_wrong_change(item.input, actual, item.ground_truth),
                output_match=actual == expected,
                case_match=case == item.expected_case,
            )
        )
    return report


def build_corpus(
    word_count: int, seed: int, corpus_path: str | Path | None = None
) -> str:
    """Deterministic synthetic document of roughly `word_count` words,
    sampled from the reference sentences."""
    p = Path(corpus_path) if corpus_path else DEFAULT_CORPUS_PATH
    sentences = [
        line.strip()
        for line in p.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    rng = random.Random(seed)
    picked: list[str] = []
    words = 0
    while words < word_count:
        sentence = rng.choice(sentences)
        picked.append(sentence)
        words += len(sentence.split())
        if len(picked) % 12 == 0:
            picked.append("\n")
    return " ".join(picked).replace(" \n ", "\n")


@dataclass
class TimingRow:
    words: int
    elapsed_ms: float


@dataclass
class TimingReport:
    rows: list[TimingRow]
    pearson_r: float

    def to_dict(self) -> dict:
        return {
            "rows": [{"words": r.words, "elapsed_ms": r.elapsed_ms} for r in self.rows],
            "pearson_r": self.pearson_r,
        }


def run_timing(
    pipeline: Pipeline,
    sizes: list[int],
    seed: int = 20_24,
    repeats: int = 3,
    corpus_path: str | Path | None = None,
    via_http: bool = False,
) -> TimingReport:
    """Wall-clock the full pipeline per corpus size; sizes must ascend.

    With via_http the measurement runs end-to-end over loopback HTTP
    against a temporary in-process server, so it includes serialization
    and transport on top of the in-process pipeline number.
    """
    if sorted(sizes) != list(sizes) or any(s <= 0 for s in sizes):
        raise ValueError("sizes must be positive and ascending")
    if via_http:
        with _LoopbackServer(pipeline) as call:
            return _measure(call, sizes, seed, repeats, corpus_path)
    return _measure(pipeline.correct, sizes, seed, repeats, corpus_path)


def _measure(call, sizes, seed, repeats, corpus_path) -> TimingReport:
    rows: list[TimingRow] = []
    for size in sizes:
        text = build_corpus(size, seed, corpus_path)
        words = len(text.split())
        best = float("inf")
        for _ in range(max(1, repeats)):
            started = time.perf_counter()
            call(text)
            best = min(best, (time.perf_counter() - started) * 1000.0)
        rows.append(TimingRow(words=words, elapsed_ms=best))
    if len(rows) >= 2:
        r = statistics.correlation(
            [float(r.words) for r in rows], [r.elapsed_ms for r in rows]
        )
    else:
        r = 1.0
    return TimingReport(rows=rows, pearson_r=r)


class _LoopbackServer:
    """Temporary uvicorn server on an ephemeral local port."""

    def __enter__(self):
        import json
        import socket
        import tempfile
        import threading
        import urllib.request

        import uvicorn

        from .config import ServiceConfig
        from .service import create_app

        self._tmp = tempfile.TemporaryDirectory()
        with socket.socket() as probe:
            probe.bind(("127.0.0.1", 0))
            port = probe.getsockname()[1]
        app = create_app(
            ServiceConfig(store_path=Path(self._tmp.name) / "store.log"),
            pipeline=self._pipeline,
        )
        self._server = uvicorn.Server(
            uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
        )
        self._thread = threading.Thread(target=self._server.run, daemon=True)
        self._thread.start()
        deadline = time.time() + 30
        while not self._server.started:
            if time.time() > deadline:
                raise RuntimeError("loopback server did not start")
            time.sleep(0.02)
        url = f"http://127.0.0.1:{port}/api/correct"

        def call(text: str) -> None:
            body = json.dumps({"text": text}).encode("utf-8")
            request = urllib.request.Request(
                url, data=body, headers={"Content-Type": "application/json"}
            )
            with urllib.request.urlopen(request, timeout=300) as response:
                response.read()

        return call

    def __init__(self, pipeline: Pipeline):
        self._pipeline = pipeline

    def __exit__(self, *exc) -> None:
        self._server.should_exit = True
        self._thread.join(timeout=10)
        self._tmp.cleanup()
