"""Turkish proofreading engine: writing-rule corrections, spelling repair,
annotated output, persistence, HTTP service and CLI."""

__version__ = "0.1.0"
