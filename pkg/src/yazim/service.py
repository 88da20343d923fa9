"""HTTP service around the correction pipeline.

Endpoints:
  POST /api/correct                  run the pipeline, persist a session
  POST /api/sessions/{id}/feedback   attach "still erroneous" user text
  POST /api/feedback                 store general feedback
  GET  /api/feedback                 list stored general feedback
  GET  /api/rules                    rule catalog with colors and texts
  GET  /api/sessions/{id}            retrieve a stored session
  GET  /health                       liveness + versions

The engine is shared immutably across requests; store writes serialize
in the store itself. Persistence failures never fail the correction
response; they are reported in a warnings field.
"""

from __future__ import annotations

import logging
import time

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .annotate import to_markup, to_plain
from .config import ServiceConfig, load_config
from .pipeline import Pipeline, load_pipeline
from .store import (
    FeedbackValidationError,
    SessionNotFoundError,
    Store,
    StoreError,
)

log = logging.getLogger(__name__)


class CorrectRequest(BaseModel):
    text: str
    source: str = "api"


class SessionFeedbackRequest(BaseModel):
    corrected_text: str


class GeneralFeedbackRequest(BaseModel):
    message: str


def create_app(
    config: ServiceConfig | None = None,
    pipeline: Pipeline | None = None,
    store: Store | None = None,
) -> FastAPI:
    config = config or load_config()
    pipeline = pipeline or load_pipeline(
        catalog_path=config.catalog_path,
        lexicon_dir=config.lexicon_dir,
        wordlist_path=config.wordlist_path,
        gazetteer_path=config.gazetteer_path,
        costs_path=config.spell_costs_path,
    )
    store = store or Store(config.store_path)

    app = FastAPI(title="yazim", version=pipeline.engine_version)
    app.state.pipeline = pipeline
    app.state.store = store
    app.state.config = config
    if config.allowed_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.allowed_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.post("/api/correct")
    def handle_correct(request: CorrectRequest) -> dict:
        if len(request.text) > config.max_input_chars:
            raise HTTPException(
                status_code=413,
                detail=f"input exceeds {config.max_input_chars} characters",
            )
        started = time.perf_counter()
        try:
            doc = pipeline.correct(request.text)
            markup = to_markup(doc)
        except Exception:
            log.exception("pipeline failure")
            raise HTTPException(status_code=500, detail="internal error")
        elapsed_ms = (time.perf_counter() - started) * 1000.0

        warnings: list[str] = []
        session_id = None
        source = request.source if request.source in ("web", "api", "cli") else "api"
        annotation_doc = doc.to_dict()
        annotation_doc["engine_version"] = pipeline.engine_version
        annotation_doc["lexicon_version"] = pipeline.lexicon_version
        try:
            session_id = store.save_session(annotation_doc, markup, source=source)
        except StoreError as exc:
            log.error("persistence failed: %s", exc)
            warnings.append("persistence_failed")

        response = {
            "session_id": session_id,
            "original": doc.original,
            "corrected": to_plain(doc),
            "markup": markup,
            "annotations": [a.to_dict() for a in doc.annotations],
            "engine_version": pipeline.engine_version,
            "lexicon_version": pipeline.lexicon_version,
            "elapsed_ms": elapsed_ms,
        }
        if warnings:
            response["warnings"] = warnings
        return response

    @app.post("/api/sessions/{session_id}/feedback")
    def handle_correction_feedback(session_id: str, request: SessionFeedbackRequest) -> dict:
        try:
            store.attach_correction_feedback(session_id, request.corrected_text)
        except SessionNotFoundError:
            raise HTTPException(status_code=404, detail="session not found")
        except FeedbackValidationError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except StoreError:
            raise HTTPException(status_code=500, detail="persistence failed")
        return {"session_id": session_id, "status": "ok"}

    @app.post("/api/feedback")
    def handle_general_feedback(request: GeneralFeedbackRequest) -> dict:
        try:
            feedback_id = store.save_general_feedback(request.message)
        except FeedbackValidationError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except StoreError:
            raise HTTPException(status_code=500, detail="persistence failed")
        return {"feedback_id": feedback_id, "status": "ok"}

    @app.get("/api/feedback")
    def list_general_feedback() -> dict:
        return {"feedback": [f.to_dict() for f in store.list_feedback()]}

    @app.get("/api/rules")
    def get_rules() -> dict:
        return {
            "version": pipeline.catalog.version,
            "rules": pipeline.catalog.to_dicts(),
        }

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        try:
            return store.get_session(session_id).to_dict()
        except SessionNotFoundError:
            raise HTTPException(status_code=404, detail="session not found")

    @app.get("/health")
    def health() -> dict:
        return {
            "status": "ok",
            "engine_version": pipeline.engine_version,
            "lexicon_version": pipeline.lexicon_version,
        }

    return app
