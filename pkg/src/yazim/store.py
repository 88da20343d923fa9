"""File-backed persistence for correction sessions and user feedback.

The store is a single append-only log of length-prefixed JSON records plus
an in-memory index rebuilt on open. Sessions are immutable except for the
correction-feedback field, which is recorded as a follow-up patch record;
the reader applies the latest patch. Appends serialize through one lock.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

_LENGTH_DIGITS = 10


class StoreError(Exception):
    """Persistence failure (I/O or corrupt log)."""


class SessionNotFoundError(LookupError):
    pass


class FeedbackValidationError(ValueError):
    pass


@dataclass
class CorrectionSession:
    session_id: str
    original: str
    corrected: str
    tagged_markup: str
    annotation_doc: dict
    created_at: str
    source: str = "api"
    correction_feedback: str | None = None

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "original": self.original,
            "corrected": self.corrected,
            "tagged_markup": self.tagged_markup,
            "annotation_doc": self.annotation_doc,
            "created_at": self.created_at,
            "source": self.source,
            "correction_feedback": self.correction_feedback,
        }


@dataclass
class GeneralFeedback:
    feedback_id: str
    message: str
    created_at: str

    def to_dict(self) -> dict:
        return {
            "feedback_id": self.feedback_id,
            "message": self.message,
            "created_at": self.created_at,
        }


def _new_id() -> str:
    return secrets.token_hex(16)


def _check_consistency(doc: dict, markup: str) -> None:
    from .annotate import strip_markup

    corrected = doc.get("corrected", "")
    for ann in doc.get("annotations", []):
        if corrected[ann["out_start"] : ann["out_end"]] != ann["replacement"]:
            raise StoreError("annotation document inconsistent with corrected text")
    stripped = strip_markup(markup)
    if stripped.split() != corrected.split():
        raise StoreError("markup inconsistent with corrected text")


class Store:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.RLock()
        self._sessions: dict[str, CorrectionSession] = {}
        self._session_order: list[str] = []
        self._feedback: dict[str, GeneralFeedback] = {}
        self._feedback_order: list[str] = []
        self._last_ts = 0.0
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            if self.path.exists():
                self._replay()
            else:
                self.path.touch()
        except OSError as exc:
            raise StoreError(f"cannot open store at {self.path}: {exc}") from exc

    # -- log plumbing --------------------------------------------------------

    def _replay(self) -> None:
        data = self.path.read_bytes()
        pos = 0
        while pos < len(data):
            header = data[pos : pos + _LENGTH_DIGITS + 1]
            if len(header) < _LENGTH_DIGITS + 1:
                raise StoreError(f"truncated record header at byte {pos}")
            try:
                length = int(header[:_LENGTH_DIGITS])
            except ValueError:
                raise StoreError(f"corrupt record header at byte {pos}")
            start = pos + _LENGTH_DIGITS + 1
            payload = data[start : start + length]
            if len(payload) < length:
                raise StoreError(f"truncated record payload at byte {pos}")
            self._apply(json.loads(payload.decode("utf-8")))
            pos = start + length + 1  # trailing newline

    def _apply(self, record: dict) -> None:
        kind = record.pop("kind")
        if kind == "session":
            session = CorrectionSession(**record)
            self._sessions[session.session_id] = session
            self._session_order.append(session.session_id)
        elif kind == "correction_feedback":
            session = self._sessions.get(record["session_id"])
            if session is not None:
                session.correction_feedback = record["text"]
        elif kind == "general_feedback":
            fb = GeneralFeedback(**record)
            self._feedback[fb.feedback_id] = fb
            self._feedback_order.append(fb.feedback_id)
        else:
            raise StoreError(f"unknown record kind {kind!r}")

    def _append(self, kind: str, payload: dict) -> None:
        record = {"kind": kind, **payload}
        data = json.dumps(record, ensure_ascii=False).encode("utf-8")
        line = str(len(data)).zfill(_LENGTH_DIGITS).encode() + b"\n" + data + b"\n"
        try:
            with open(self.path, "ab") as fh:
                fh.write(line)
                fh.flush()
        except OSError as exc:
            raise StoreError(f"cannot append to store: {exc}") from exc

    def _timestamp(self) -> str:
        # Monotone non-decreasing even if the wall clock steps back.
        now = time.time()
        with self._lock:
            now = max(now, self._last_ts)
            self._last_ts = now
        return (
            datetime.fromtimestamp(now, tz=timezone.utc)
            .isoformat(timespec="microseconds")
            .replace("+00:00", "Z")
        )

    # -- sessions ------------------------------------------------------------

    def save_session(self, doc, markup: str, source: str = "api") -> str:
        """Persist one correction session; returns its id."""
        payload = doc.to_dict() if hasattr(doc, "to_dict") else dict(doc)
        _check_consistency(payload, markup)
        session = CorrectionSession(
            session_id=_new_id(),
            original=payload["original"],
            corrected=payload["corrected"],
            tagged_markup=markup,
            annotation_doc=payload,
            created_at=self._timestamp(),
            source=source,
        )
        with self._lock:
            self._append("session", session.to_dict())
            self._sessions[session.session_id] = session
            self._session_order.append(session.session_id)
        return session.session_id

    def get_session(self, session_id: str) -> CorrectionSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFoundError(f"no session {session_id!r}")
        return session

    def list_sessions(self) -> list[CorrectionSession]:
        with self._lock:
            return [self._sessions[sid] for sid in self._session_order]

    def attach_correction_feedback(self, session_id: str, user_text: str) -> CorrectionSession:
        if not user_text or not user_text.strip():
            raise FeedbackValidationError("correction feedback must be nonempty")
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise SessionNotFoundError(f"no session {session_id!r}")
            self._append(
                "correction_feedback",
                {"session_id": session_id, "text": user_text, "created_at": self._timestamp()},
            )
            session.correction_feedback = user_text
            return session

    # -- general feedback ------------------------------------------------------

    def save_general_feedback(self, message: str) -> str:
        if not message or not message.strip():
            raise FeedbackValidationError("feedback message must be nonempty")
        fb = GeneralFeedback(
            feedback_id=_new_id(), message=message, created_at=self._timestamp()
        )
        with self._lock:
            self._append("general_feedback", fb.to_dict())
            self._feedback[fb.feedback_id] = fb
            self._feedback_order.append(fb.feedback_id)
        return fb.feedback_id

    def get_feedback(self, feedback_id: str) -> GeneralFeedback:
        with self._lock:
            fb = self._feedback.get(feedback_id)
        if fb is None:
            raise SessionNotFoundError(f"no feedback {feedback_id!r}")
        return fb

    def list_feedback(self) -> list[GeneralFeedback]:
        with self._lock:
            return [self._feedback[fid] for fid in self._feedback_order]
