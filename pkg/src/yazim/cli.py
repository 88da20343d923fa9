"""Command-line front door: one-shot correction, service launcher,
scenario evaluation and the timing benchmark.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 engine error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .annotate import to_markup, to_plain
from .config import load_config
from .pipeline import load_pipeline

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_ENGINE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="yazim", description="Turkish proofreading toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--catalog", type=Path, default=None, help="rule catalog TSV")
        p.add_argument("--lexicons", type=Path, default=None, help="lexicon directory")
        p.add_argument("--wordlist", type=Path, default=None)
        p.add_argument("--gazetteer", type=Path, default=None)

    p_correct = sub.add_parser("correct", help="correct a file or stdin")
    p_correct.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    p_correct.add_argument(
        "--format", choices=("text", "json", "html"), default="text"
    )
    add_data_flags(p_correct)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--store", type=Path, default=None, help="store file path")
    p_serve.add_argument("--origin", default=None, help="allowed CORS origin")
    add_data_flags(p_serve)

    p_eval = sub.add_parser("eval", help="run the user-scenario evaluation")
    p_eval.add_argument("--scenario", type=Path, default=None)
    add_data_flags(p_eval)

    p_bench = sub.add_parser("bench", help="time the pipeline over synthetic sizes")
    p_bench.add_argument(
        "--sizes", default="1000,2000,4000,8000,14000",
        help="comma-separated word counts",
    )
    p_bench.add_argument("--seed", type=int, default=2024)
    p_bench.add_argument(
        "--http", action="store_true",
        help="measure end-to-end over loopback HTTP instead of in-process",
    )
    add_data_flags(p_bench)

    return parser


def _pipeline_from(args) -> "Pipeline":
    return load_pipeline(
        catalog_path=args.catalog,
        lexicon_dir=args.lexicons,
        wordlist_path=args.wordlist,
        gazetteer_path=args.gazetteer,
    )


def cmd_correct(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"yazim: cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_IO
    try:
        pipeline = _pipeline_from(args)
        doc = pipeline.correct(text)
    except Exception as exc:
        print(f"yazim: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    if args.format == "text":
        sys.stdout.write(to_plain(doc))
    elif args.format == "html":
        sys.stdout.write(to_markup(doc) + "\n")
    else:
        payload = doc.to_dict()
        payload["engine_version"] = pipeline.engine_version
        payload["lexicon_version"] = pipeline.lexicon_version
        json.dump(payload, sys.stdout, ensure_ascii=False, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    overrides = {}
    if args.port is not None:
        overrides["port"] = args.port
    if args.store is not None:
        overrides["store_path"] = args.store
    if args.origin is not None:
        overrides["allowed_origin"] = args.origin
    if args.catalog is not None:
        overrides["catalog_path"] = args.catalog
    if args.lexicons is not None:
        overrides["lexicon_dir"] = args.lexicons
    if args.wordlist is not None:
        overrides["wordlist_path"] = args.wordlist
    if args.gazetteer is not None:
        overrides["gazetteer_path"] = args.gazetteer
    config = load_config(**overrides)
    app = create_app(config)
    try:
        uvicorn.run(app, host=args.host, port=config.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"yazim: cannot serve on port {config.port}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_eval(args) -> int:
    from .evaluation import run_scenario

    try:
        pipeline = _pipeline_from(args)
        report = run_scenario(pipeline, args.scenario)
    except Exception as exc:
        print(f"yazim: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    json.dump(report.to_dict(), sys.stdout, ensure_ascii=False, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    from .evaluation import run_timing

    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        print("yazim: --sizes must be comma-separated integers", file=sys.stderr)
        return EXIT_USAGE
    try:
        pipeline = _pipeline_from(args)
        report = run_timing(pipeline, sizes, seed=args.seed, via_http=args.http)
    except Exception as exc:
        print(f"yazim: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    print("words,millis")
    for row in report.rows:
        print(f"{row.words},{row.elapsed_ms:.1f}")
    print(f"# pearson_r={report.pearson_r:.4f}", file=sys.stderr)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "correct": cmd_correct,
        "serve": cmd_serve,
        "eval": cmd_eval,
        "bench": cmd_bench,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
