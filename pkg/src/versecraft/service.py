"""HTTP face of the co-writing session store.

Thin by design: every rule about what a session may do lives in
``session.fold``; the service maps those refusals to status codes and adds
the two things HTTP needs: per-session write serialization (an asyncio
lock per session id) and optimistic concurrency (the client sends the
ordinal it believes comes next; a mismatch is a 409 and nothing is
written, so a duplicated accept cannot double-append a line).

Suggestion seeds derive from the session id and the event ordinal of the
instruction, so replaying the same instruction into the same slot yields
the same candidates while concurrent sessions stay independent.
"""
from __future__ import annotations

import asyncio
from dataclasses import dataclass

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import resources
from .generation import (
    RemoteBackend,
    RemoteConfig,
    RetrievalBackend,
    SamplingParams,
    StubBackend,
    suggest,
)
from .instructions import parse
from .seeding import derive_seed
from .session import (
    EVENT_ACCEPT,
    EVENT_EDIT,
    EVENT_FINALIZE,
    EVENT_INSTRUCTION,
    EVENT_SUGGESTIONS,
    SessionError,
    SessionState,
    SessionStore,
    analytics,
    make_suggestion_id,
)
from .synthesis import ingest_corpus


@dataclass(frozen=True)
class ServiceConfig:
    store_root: str = "sessions"
    backend: str = "stub"
    corpus_path: str | None = None
    remote: RemoteConfig | None = None
    params: SamplingParams = SamplingParams()
    cors_origins: tuple[str, ...] = ("*",)


def _build_backend(config: ServiceConfig):
    if config.backend == "stub":
        return StubBackend()
    if config.backend == "retrieval":
        if not config.corpus_path:
            raise ValueError("retrieval backend needs corpus_path")
        poems = ingest_corpus(config.corpus_path)
        lines = [line for poem in poems for line in poem.lines]
        return RetrievalBackend(lines)
    if config.backend == "remote":
        if config.remote is None:
            raise ValueError("remote backend needs a RemoteConfig")
        return RemoteBackend(config.remote)
    raise ValueError(f"unknown backend {config.backend!r}")


class CreateSessionBody(BaseModel):
    title: str = ""


class InstructionBody(BaseModel):
    text: str = Field(min_length=1)
    client_ordinal: int = Field(ge=1)


class AcceptBody(BaseModel):
    suggestion_id: str = Field(min_length=1)
    client_ordinal: int = Field(ge=1)


class DraftBody(BaseModel):
    lines: list[str]
    client_ordinal: int = Field(ge=1)


class FinalizeBody(BaseModel):
    client_ordinal: int = Field(ge=1)


def _state_view(state: SessionState) -> dict:
    accepted = set(state.accepted)
    return {
        "session_id": state.session_id,
        "title": state.title,
        "finalized": state.finalized,
        "next_ordinal": state.next_ordinal,
        "draft": list(state.draft),
        "instructions": [
            {
                "request_id": i.request_id,
                "text": i.text,
                "template_id": i.template_id,
                "arguments": list(i.arguments),
            }
            for i in state.instructions
        ],
        "suggestions": [
            {
                "suggestion_id": s.suggestion_id,
                "request_id": s.request_id,
                "text": s.text,
                "backend_id": s.backend_id,
                "passed": s.passed,
                "flags": list(s.flags),
                "accepted": s.suggestion_id in accepted,
            }
            for s in state.suggestions
        ],
        "accepted": list(state.accepted),
    }


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    store = SessionStore(config.store_root)
    backend = _build_backend(config)
    catalog = resources.default_catalog()
    app = FastAPI(title="versecraft", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    locks: dict[str, asyncio.Lock] = {}

    def lock_for(session_id: str) -> asyncio.Lock:
        if session_id not in locks:
            locks[session_id] = asyncio.Lock()
        return locks[session_id]

    def load_state(session_id: str) -> SessionState:
        if not store.exists(session_id):
            raise HTTPException(status_code=404, detail="no such session")
        return store.state(session_id)

    def require_ordinal(state: SessionState, client_ordinal: int) -> None:
        if client_ordinal != state.next_ordinal:
            raise HTTPException(
                status_code=409,
                detail={
                    "reason": "ordinal mismatch",
                    "expected": state.next_ordinal,
                    "got": client_ordinal,
                },
            )

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok", "backend": config.backend}

    @app.get("/templates")
    async def templates():
        listing = []
        for template_id in catalog.template_ids:
            forms = catalog.forms(template_id)
            listing.append(
                {
                    "template_id": template_id,
                    "kinds": list(forms[0].kinds),
                    "composite": forms[0].composite,
                    "seen": forms[0].seen,
                    "paraphrases": [f.pattern for f in forms],
                }
            )
        return {"templates": listing}

    @app.get("/sessions")
    async def list_sessions():
        sessions = []
        for session_id in store.session_ids():
            state = store.state(session_id)
            sessions.append(
                {
                    "session_id": state.session_id,
                    "title": state.title,
                    "finalized": state.finalized,
                    "lines": len(state.draft),
                }
            )
        return {"sessions": sessions}

    @app.post("/sessions", status_code=201)
    async def create_session(body: CreateSessionBody):
        state = store.create(title=body.title)
        return _state_view(state)

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        return _state_view(load_state(session_id))

    @app.post("/sessions/{session_id}/instructions")
    async def issue_instruction(session_id: str, body: InstructionBody):
        async with lock_for(session_id):
            state = load_state(session_id)
            require_ordinal(state, body.client_ordinal)
            if state.finalized:
                raise HTTPException(status_code=409, detail="session is finalized")
            instruction = parse(body.text, catalog)
            request_id = f"r{state.next_ordinal:04d}"
            seed = derive_seed(session_id, state.next_ordinal)
            call_params = config.params.with_seed(seed)
            try:
                suggestions = await asyncio.to_thread(
                    suggest,
                    backend,
                    body.text,
                    call_params,
                    instruction=instruction,
                    catalog=catalog,
                )
            except Exception as exc:
                raise HTTPException(
                    status_code=502, detail=f"backend failed: {exc}"
                ) from exc
            shown = [
                {
                    "suggestion_id": make_suggestion_id(request_id, index),
                    "text": s.text,
                    "backend_id": s.backend_id,
                    "passed": bool(s.check and s.check.ok),
                    "flags": sorted(s.check.flags) if s.check else [],
                }
                for index, s in enumerate(suggestions)
            ]
            try:
                store.append(
                    session_id,
                    EVENT_INSTRUCTION,
                    {
                        "request_id": request_id,
                        "text": body.text,
                        "template_id": (
                            instruction.template_id if instruction else None
                        ),
                        "arguments": (
                            list(instruction.arguments) if instruction else []
                        ),
                    },
                )
                store.append(
                    session_id,
                    EVENT_SUGGESTIONS,
                    {"request_id": request_id, "suggestions": shown},
                )
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            state = store.state(session_id)
            return {
                "request_id": request_id,
                "parsed": instruction.to_dict() if instruction else None,
                "suggestions": shown,
                "next_ordinal": state.next_ordinal,
            }

    @app.post("/sessions/{session_id}/accept")
    async def accept_suggestion(session_id: str, body: AcceptBody):
        async with lock_for(session_id):
            state = load_state(session_id)
            require_ordinal(state, body.client_ordinal)
            try:
                store.append(
                    session_id,
                    EVENT_ACCEPT,
                    {"suggestion_id": body.suggestion_id},
                )
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return _state_view(store.state(session_id))

    @app.put("/sessions/{session_id}/draft")
    async def edit_draft(session_id: str, body: DraftBody):
        async with lock_for(session_id):
            state = load_state(session_id)
            require_ordinal(state, body.client_ordinal)
            try:
                store.append(session_id, EVENT_EDIT, {"lines": body.lines})
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return _state_view(store.state(session_id))

    @app.post("/sessions/{session_id}/finalize")
    async def finalize(session_id: str, body: FinalizeBody):
        async with lock_for(session_id):
            state = load_state(session_id)
            require_ordinal(state, body.client_ordinal)
            try:
                store.append(session_id, EVENT_FINALIZE, {})
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return _state_view(store.state(session_id))

    @app.get("/sessions/{session_id}/analytics")
    async def session_analytics(session_id: str):
        return analytics(load_state(session_id))

    return app
