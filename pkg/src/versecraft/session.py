"""Event-sourced co-writing sessions.

A session is nothing but its append-only event log; every view of it is a
fold over that log. The log survives crashes: a torn trailing line (a
write the process never finished) is dropped on replay, while a malformed
line anywhere else is treated as corruption and refused.

Event kinds, in the order a session typically sees them:

``created`` -> ``instruction_issued`` / ``suggestions_returned`` (paired
by request id) -> ``suggestion_accepted`` (appends the suggestion text to
the draft) / ``draft_edited`` (replaces the draft wholesale) ->
``finalized`` (terminal; the store fsyncs it).

``contribution_score`` credits the system for the finished poem: each
poem line greedily claims the remaining suggestion with the highest
ROUGE-L recall (poem line as reference), ties to the earliest suggestion,
and the claimed suggestion leaves the pool even when its score is zero.
"""
from __future__ import annotations

import json
import os
import re
import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping, Sequence

from .textkit import distinct_unigram_ratio, normalized_tokens, rouge_l_recall

EVENT_CREATED = "created"
EVENT_INSTRUCTION = "instruction_issued"
EVENT_SUGGESTIONS = "suggestions_returned"
EVENT_ACCEPT = "suggestion_accepted"
EVENT_EDIT = "draft_edited"
EVENT_FINALIZE = "finalized"

EVENT_KINDS = frozenset(
    {
        EVENT_CREATED,
        EVENT_INSTRUCTION,
        EVENT_SUGGESTIONS,
        EVENT_ACCEPT,
        EVENT_EDIT,
        EVENT_FINALIZE,
    }
)

_SESSION_ID_RE = re.compile(r"^[A-Za-z0-9_-]{1,64}$")


class SessionError(ValueError):
    """An event that the current session state cannot accept."""


class SessionLogError(RuntimeError):
    """The on-disk log is corrupt."""


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


@dataclass(frozen=True)
class SessionEvent:
    ordinal: int
    kind: str
    at: str
    payload: dict

    def to_record(self) -> dict:
        return {
            "ordinal": self.ordinal,
            "kind": self.kind,
            "at": self.at,
            "payload": self.payload,
        }

    @classmethod
    def from_record(cls, record: dict) -> "SessionEvent":
        return cls(
            ordinal=record["ordinal"],
            kind=record["kind"],
            at=record.get("at", ""),
            payload=record.get("payload", {}),
        )


@dataclass(frozen=True)
class ShownSuggestion:
    suggestion_id: str
    request_id: str
    text: str
    backend_id: str
    passed: bool
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class IssuedInstruction:
    request_id: str
    text: str
    template_id: str | None = None
    arguments: tuple[str, ...] = ()


@dataclass(frozen=True)
class SessionState:
    session_id: str
    title: str = ""
    next_ordinal: int = 0
    draft: tuple[str, ...] = ()
    instructions: tuple[IssuedInstruction, ...] = ()
    suggestions: tuple[ShownSuggestion, ...] = ()
    accepted: tuple[str, ...] = ()
    edits: int = 0
    finalized: bool = False

    def suggestion(self, suggestion_id: str) -> ShownSuggestion | None:
        for shown in self.suggestions:
            if shown.suggestion_id == suggestion_id:
                return shown
        return None


def make_suggestion_id(request_id: str, index: int) -> str:
    return f"sg-{request_id}-{index}"


def _require(payload: Mapping, key: str, kind: str) -> object:
    if key not in payload:
        raise SessionError(f"{kind} event payload lacks {key!r}")
    return payload[key]


def fold(state: SessionState | None, event: SessionEvent) -> SessionState:
    """Apply one event, or raise ``SessionError`` if the state refuses it."""
    if event.kind not in EVENT_KINDS:
        raise SessionError(f"unknown event kind {event.kind!r}")
    if state is None:
        if event.kind != EVENT_CREATED:
            raise SessionError(f"first event must be {EVENT_CREATED!r}")
        if event.ordinal != 0:
            raise SessionError(f"first event ordinal is {event.ordinal}, not 0")
        payload = event.payload
        session_id = str(_require(payload, "session_id", event.kind))
        if not _SESSION_ID_RE.match(session_id):
            raise SessionError(f"invalid session id {session_id!r}")
        return SessionState(
            session_id=session_id,
            title=str(payload.get("title", "")),
            next_ordinal=1,
        )
    if event.kind == EVENT_CREATED:
        raise SessionError("session already created")
    if event.ordinal != state.next_ordinal:
        raise SessionError(
            f"event ordinal {event.ordinal} breaks the sequence; "
            f"expected {state.next_ordinal}"
        )
    if state.finalized:
        raise SessionError("session is finalized")
    payload = event.payload

    if event.kind == EVENT_INSTRUCTION:
        request_id = str(_require(payload, "request_id", event.kind))
        text = str(_require(payload, "text", event.kind))
        if any(i.request_id == request_id for i in state.instructions):
            raise SessionError(f"duplicate request id {request_id!r}")
        issued = IssuedInstruction(
            request_id=request_id,
            text=text,
            template_id=payload.get("template_id"),
            arguments=tuple(payload.get("arguments", ())),
        )
        return _with(state, instructions=state.instructions + (issued,))

    if event.kind == EVENT_SUGGESTIONS:
        request_id = str(_require(payload, "request_id", event.kind))
        if not any(i.request_id == request_id for i in state.instructions):
            raise SessionError(f"request id {request_id!r} was never issued")
        if any(s.request_id == request_id for s in state.suggestions):
            raise SessionError(f"request id {request_id!r} already answered")
        raw = _require(payload, "suggestions", event.kind)
        if not isinstance(raw, list):
            raise SessionError("suggestions payload is not a list")
        shown = []
        known = {s.suggestion_id for s in state.suggestions}
        for entry in raw:
            sid = str(_require(entry, "suggestion_id", event.kind))
            if sid in known:
                raise SessionError(f"duplicate suggestion id {sid!r}")
            known.add(sid)
            shown.append(
                ShownSuggestion(
                    suggestion_id=sid,
                    request_id=request_id,
                    text=str(_require(entry, "text", event.kind)),
                    backend_id=str(entry.get("backend_id", "")),
                    passed=bool(entry.get("passed", False)),
                    flags=tuple(entry.get("flags", ())),
                )
            )
        return _with(state, suggestions=state.suggestions + tuple(shown))

    if event.kind == EVENT_ACCEPT:
        sid = str(_require(payload, "suggestion_id", event.kind))
        shown = state.suggestion(sid)
        if shown is None:
            raise SessionError(f"suggestion {sid!r} was never shown")
        if sid in state.accepted:
            raise SessionError(f"suggestion {sid!r} already accepted")
        return _with(
            state,
            draft=state.draft + (shown.text,),
            accepted=state.accepted + (sid,),
        )

    if event.kind == EVENT_EDIT:
        lines = _require(payload, "lines", event.kind)
        if not isinstance(lines, list) or not all(
            isinstance(line, str) for line in lines
        ):
            raise SessionError("draft edit payload must be a list of strings")
        return _with(state, draft=tuple(lines), edits=state.edits + 1)

    if event.kind == EVENT_FINALIZE:
        return _with(state, finalized=True)

    raise SessionError(f"unhandled event kind {event.kind!r}")


def _with(state: SessionState, **changes) -> SessionState:
    changes.setdefault("next_ordinal", state.next_ordinal + 1)
    return replace(state, **changes)


def replay(events: Sequence[SessionEvent]) -> SessionState:
    if not events:
        raise SessionError("no events to replay")
    state: SessionState | None = None
    for event in events:
        state = fold(state, event)
    assert state is not None
    return state


def contribution_score(
    lines: Sequence[str], suggestions: Sequence[str]
) -> tuple[float, tuple[tuple[int | None, float], ...]]:
    """Greedy line-by-line credit assignment.

    Returns the poem-level mean and, per line, the index of the
    suggestion the line claimed (None when it claimed nothing) with the
    ROUGE-L recall it scored. A line with no content tokens scores zero
    and leaves the pool untouched.
    """
    remaining = list(range(len(suggestions)))
    credits: list[tuple[int | None, float]] = []
    for line in lines:
        if not normalized_tokens(line):
            credits.append((None, 0.0))
            continue
        if not remaining:
            credits.append((None, 0.0))
            continue
        best_index = remaining[0]
        best_score = rouge_l_recall(line, suggestions[best_index])
        for index in remaining[1:]:
            score = rouge_l_recall(line, suggestions[index])
            if score > best_score:
                best_score = score
                best_index = index
        remaining.remove(best_index)
        credits.append((best_index, best_score))
    poem_score = (
        sum(score for _, score in credits) / len(credits) if credits else 0.0
    )
    return poem_score, tuple(credits)


def usage_histogram(state: SessionState) -> dict[str, int]:
    """Instruction counts keyed by template id, free text under 'freeform'."""
    histogram: dict[str, int] = {}
    for issued in state.instructions:
        key = issued.template_id or "freeform"
        histogram[key] = histogram.get(key, 0) + 1
    return dict(sorted(histogram.items()))


def analytics(state: SessionState) -> dict:
    suggestion_texts = [s.text for s in state.suggestions]
    poem_score, credits = contribution_score(state.draft, suggestion_texts)
    line_credits = []
    for line_index, (suggestion_index, score) in enumerate(credits):
        line_credits.append(
            {
                "line_index": line_index,
                "score": round(score, 6),
                "suggestion_id": (
                    state.suggestions[suggestion_index].suggestion_id
                    if suggestion_index is not None
                    else None
                ),
            }
        )
    return {
        "session_id": state.session_id,
        "title": state.title,
        "finalized": state.finalized,
        "lines": len(state.draft),
        "instructions": len(state.instructions),
        "suggestions_shown": len(state.suggestions),
        "accepted": len(state.accepted),
        "edits": state.edits,
        "histogram": usage_histogram(state),
        "poem_rouge_l": round(poem_score, 6),
        "line_credits": line_credits,
        "distinct_unigram_ratio": round(distinct_unigram_ratio(state.draft), 6),
    }


class SessionStore:
    """One JSONL file per session under a root directory."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, session_id: str) -> Path:
        if not _SESSION_ID_RE.match(session_id):
            raise SessionError(f"invalid session id {session_id!r}")
        return self.root / f"{session_id}.jsonl"

    def exists(self, session_id: str) -> bool:
        return self._path(session_id).exists()

    def session_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.jsonl"))

    def create(self, title: str = "", session_id: str | None = None) -> SessionState:
        session_id = session_id or uuid.uuid4().hex
        path = self._path(session_id)
        if path.exists():
            raise SessionError(f"session {session_id!r} already exists")
        event = SessionEvent(
            ordinal=0,
            kind=EVENT_CREATED,
            at=_now(),
            payload={"session_id": session_id, "title": title},
        )
        state = fold(None, event)
        self._write(path, event, sync=True)
        return state

    def events(self, session_id: str) -> list[SessionEvent]:
        path = self._path(session_id)
        if not path.exists():
            raise SessionError(f"no session {session_id!r}")
        return _read_log(path)

    def state(self, session_id: str) -> SessionState:
        return replay(self.events(session_id))

    def append(self, session_id: str, kind: str, payload: dict) -> SessionEvent:
        """Validate against the replayed state, then write one line."""
        events = self.events(session_id)
        state = replay(events)
        event = SessionEvent(
            ordinal=state.next_ordinal, kind=kind, at=_now(), payload=payload
        )
        fold(state, event)
        self._write(self._path(session_id), event, sync=kind == EVENT_FINALIZE)
        return event

    def _write(self, path: Path, event: SessionEvent, sync: bool) -> None:
        line = json.dumps(event.to_record(), sort_keys=True, ensure_ascii=True)
        with open(path, "a", encoding="utf-8") as handle:
            handle.write(line + "\n")
            handle.flush()
            if sync:
                os.fsync(handle.fileno())


def _read_log(path: Path) -> list[SessionEvent]:
    raw = path.read_text(encoding="utf-8")
    lines = raw.split("\n")
    trailing_complete = raw.endswith("\n")
    if trailing_complete:
        lines = lines[:-1]
    events: list[SessionEvent] = []
    for index, line in enumerate(lines):
        is_last = index == len(lines) - 1
        if not line.strip():
            if is_last:
                continue
            raise SessionLogError(f"{path.name}: blank line {index + 1} mid-log")
        try:
            record = json.loads(line)
            events.append(SessionEvent.from_record(record))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            if is_last and not trailing_complete:
                # torn write: the process died mid-line; drop it
                break
            raise SessionLogError(
                f"{path.name}: malformed event on line {index + 1}"
            ) from exc
    if not events:
        raise SessionLogError(f"{path.name}: log holds no complete events")
    return events
