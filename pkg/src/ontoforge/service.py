"""HTTP front door: translate -> stage -> human decision -> ontology.

Sessions live in memory; each holds an immutable ontology snapshot, its
pending stages, and one lock so commits are serialized while translations
and reads run freely on snapshots.  All axiom payloads travel as serialized
Functional Syntax strings, identical to the `.ofn` file format.
"""
from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import store
from .gateway import (
    AuthError,
    BackendConfig,
    EmptyCompletion,
    NetworkError,
    UnusableCompletion,
    ValidationOutcome,
    translate_remote,
)
from .ofs import Kind, ParseError, serialize_axiom
from .patterns import NoPatternMatch, TranslationResult, translate
from .store import (
    IllegalAccept,
    KindConflict,
    Ontology,
    StagedChange,
    StaleStage,
)


@dataclass
class PendingStage:
    staged: StagedChange
    backend: str
    pattern_id: Optional[str] = None
    rejected_lines: tuple = ()


@dataclass
class Session:
    id: str
    ontology: Ontology
    pending: dict[str, PendingStage] = field(default_factory=dict)
    config: Optional[BackendConfig] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionRegistry:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, ontology: Ontology, config: Optional[BackendConfig]) -> Session:
        session = Session(uuid.uuid4().hex, ontology, config=config)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Optional[Session]:
        with self._lock:
            return self._sessions.get(session_id)


class CreateSessionBody(BaseModel):
    ontology: Optional[str] = None


class TranslateBody(BaseModel):
    sentence: str
    backend: str = "auto"


class DecisionBody(BaseModel):
    accept: list[int]


def _error(status: int, code: str, message: str) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message})


def _stage_json(session: Session, stage_id: str, pending: PendingStage) -> dict:
    return {
        "stage_id": stage_id,
        "sentence": pending.staged.sentence,
        "base_revision": pending.staged.base_revision,
        "backend": pending.backend,
        "pattern_id": pending.pattern_id,
        "items": [
            {
                "index": index,
                "axiom": serialize_axiom(item.axiom),
                "status": item.status.value,
                "detail": item.detail,
            }
            for index, item in enumerate(pending.staged.items)
        ],
        "rejected_lines": [
            {"line": line.line, "reason": line.reason} for line in pending.rejected_lines
        ],
    }


def create_app(
    backend_config: Optional[BackendConfig] = None,
    static_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="ontoforge", version="0.1.0")
    registry = SessionRegistry()

    def get_session(session_id: str) -> Session:
        session = registry.get(session_id)
        if session is None:
            raise _error(404, "UNKNOWN_SESSION", f"no session {session_id!r}")
        return session

    @app.post("/sessions")
    def create_session(body: CreateSessionBody) -> dict:
        ontology = Ontology.empty()
        if body.ontology:
            try:
                ontology = store.load_document(body.ontology)
            except KindConflict as error:
                raise _error(400, "KIND_CONFLICT", str(error))
            except ParseError as error:
                raise _error(400, "PARSE_ERROR", str(error))
        session = registry.create(ontology, backend_config)
        return {"session_id": session.id, "revision": session.ontology.revision}

    @app.get("/sessions/{session_id}/ontology")
    def get_ontology(session_id: str) -> PlainTextResponse:
        session = get_session(session_id)
        return PlainTextResponse(store.save_document(session.ontology))

    @app.get("/sessions/{session_id}/signature")
    def get_signature(session_id: str) -> dict:
        session = get_session(session_id)
        ontology = session.ontology
        listing = store.signature_of(ontology)
        members = store.class_members(ontology)
        assertions = store.property_assertions(ontology)
        return {
            "revision": ontology.revision,
            "classes": [
                {"name": name, "members": members.get(name, [])}
                for name in listing[Kind.CLASS]
            ],
            "object_properties": [
                {
                    "name": name,
                    "assertions": [
                        {"subject": s, "object": o} for s, o in assertions.get(name, [])
                    ],
                }
                for name in listing[Kind.OBJECT_PROPERTY]
            ],
            "individuals": listing[Kind.NAMED_INDIVIDUAL],
        }

    @app.post("/sessions/{session_id}/translate")
    def translate_sentence(session_id: str, body: TranslateBody) -> dict:
        session = get_session(session_id)
        if body.backend not in ("auto", "pattern", "llm"):
            raise _error(400, "BAD_BACKEND", f"unknown backend {body.backend!r}")
        if not body.sentence.strip():
            raise _error(400, "EMPTY_SENTENCE", "sentence must be non-empty")

        def remote() -> TranslationResult:
            if session.config is None or not session.config.endpoint:
                raise _error(503, "LLM_NOT_CONFIGURED", "no completion endpoint configured")
            try:
                return translate_remote(body.sentence, session.config, session.ontology)
            except AuthError as error:
                raise _error(502, "AUTH_ERROR", str(error))
            except NetworkError as error:
                raise _error(502, "NETWORK_ERROR", str(error))
            except EmptyCompletion as error:
                raise _error(502, "EMPTY_COMPLETION", str(error))
            except UnusableCompletion as error:
                raise _error(422, "UNUSABLE_COMPLETION", str(error))

        if body.backend == "pattern":
            try:
                result = translate(body.sentence)
            except NoPatternMatch as error:
                raise _error(422, "NO_PATTERN_MATCH", str(error))
        elif body.backend == "llm":
            result = remote()
        else:
            try:
                result = translate(body.sentence)
            except NoPatternMatch as error:
                if session.config is None or not session.config.endpoint:
                    raise _error(422, "NO_PATTERN_MATCH", str(error))
                result = remote()

        staged = store.stage(session.ontology, list(result.axioms), body.sentence)
        validation: Optional[ValidationOutcome] = result.validation
        pending = PendingStage(
            staged,
            backend=result.backend.value,
            pattern_id=result.pattern_id,
            rejected_lines=validation.rejected if validation else (),
        )
        session.pending[staged.id] = pending
        return _stage_json(session, staged.id, pending)

    @app.get("/sessions/{session_id}/stages")
    def list_stages(session_id: str) -> dict:
        session = get_session(session_id)
        return {
            "stages": [
                _stage_json(session, stage_id, pending)
                for stage_id, pending in session.pending.items()
            ]
        }

    @app.post("/sessions/{session_id}/stages/{stage_id}/decision")
    def decide(session_id: str, stage_id: str, body: DecisionBody) -> dict:
        session = get_session(session_id)
        with session.lock:
            pending = session.pending.get(stage_id)
            if pending is None:
                raise _error(404, "UNKNOWN_STAGE", f"no pending stage {stage_id!r}")
            try:
                ontology, report = store.commit(session.ontology, pending.staged, body.accept)
            except IllegalAccept as error:
                raise _error(400, "ILLEGAL_ACCEPT", str(error))
            except StaleStage as error:
                raise _error(409, "STALE_STAGE", str(error))
            session.ontology = ontology
            del session.pending[stage_id]
        return {
            "added": report.added,
            "skipped_duplicates": report.skipped_duplicates,
            "rejected": report.rejected,
            "new_revision": report.new_revision,
        }

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
