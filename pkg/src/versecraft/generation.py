"""Line generation backends behind one small interface.

A backend takes the rendered instruction text plus sampling parameters and
returns candidate lines; ``suggest`` wraps those lines as ``Suggestion``
objects with per-candidate constraint checks, and ``select_best`` picks a
random passing candidate (or flags the pick when none pass).

Three backends ship:

* ``StubBackend`` constructs lines that satisfy the parsed constraints
  from a small phrase bank. It is hermetic and fast; the test suite and
  the default service configuration use it.
* ``RetrievalBackend`` ranks corpus lines by how many constraints they
  satisfy. Whether any fully satisfying line exists does not depend on the
  sampling seed, so success rates are seed-independent by construction.
* ``RemoteBackend`` speaks a line-oriented JSON completion protocol over
  HTTP with a configurable field mapping, bounded retries, and a per-call
  deadline. The auth token is read from an environment variable and never
  logged.
"""
from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field, replace
from typing import Sequence

import httpx

from . import resources
from .evaluation import CheckResult, ConstraintVerdict, check
from .instructions import (
    CONTAINS_WORD,
    ENDS_WITH,
    FOLLOWS_CONTEXT,
    HAIKU_ABOUT,
    METAPHOR_ABOUT,
    ONOMATOPOEIA_ABOUT,
    RHYMES_WITH_END,
    SIMILE_ABOUT,
    STARTS_WITH,
    Instruction,
    TemplateCatalog,
    parse,
)
from .phonetics import Lexicon, rhyme_candidates, syllable_count_line
from .seeding import derive_seed


class BackendError(RuntimeError):
    """The backend could not produce candidates."""


@dataclass(frozen=True)
class SamplingParams:
    top_k: int = 5
    temperature: float = 0.7
    max_tokens: int = 64
    num_candidates: int = 5
    seed: int = 0

    def with_seed(self, seed: int) -> "SamplingParams":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class Suggestion:
    text: str
    backend_id: str
    candidate_index: int
    check: CheckResult | None = None

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "backend_id": self.backend_id,
            "candidate_index": self.candidate_index,
            "check": self.check.to_dict() if self.check else None,
        }


def _clean_line(text: str, max_tokens: int) -> str:
    """First line only, at most ``max_tokens`` whitespace tokens."""
    line = text.strip().splitlines()[0] if text.strip() else ""
    tokens = line.split()
    return " ".join(tokens[:max_tokens])


class StubBackend:
    """Constructs constraint-satisfying lines from the bundled phrase bank."""

    backend_id = "stub"

    def __init__(
        self,
        lexicon: Lexicon | None = None,
        catalog: TemplateCatalog | None = None,
        phrase_bank: dict[str, tuple[str, ...]] | None = None,
        onomatopoeia: frozenset[str] | None = None,
    ):
        self.lexicon = lexicon if lexicon is not None else resources.default_lexicon()
        self.catalog = catalog if catalog is not None else resources.default_catalog()
        self.bank = (
            phrase_bank if phrase_bank is not None else resources.default_phrase_bank()
        )
        self.onomatopoeia = tuple(
            sorted(
                onomatopoeia
                if onomatopoeia is not None
                else resources.default_onomatopoeia()
            )
        )

    def _constraint_map(self, instruction: Instruction | None) -> dict[str, str]:
        if instruction is None:
            return {}
        return {c.kind: c.argument for c in instruction.constraints}

    def _end_word(self, cons: dict[str, str], rng: random.Random) -> str | None:
        if ENDS_WITH in cons:
            return cons[ENDS_WITH]
        if RHYMES_WITH_END in cons:
            candidates = rhyme_candidates(
                self.lexicon, cons[RHYMES_WITH_END], seed=rng.randrange(2**31)
            )
            if candidates:
                return candidates[0]
            # unsatisfiable: no rhyme material; the check will flag the miss
            return cons[RHYMES_WITH_END]
        return None

    def _compose_line(self, cons: dict[str, str], rng: random.Random) -> str:
        mid = rng.choice(self.bank["mid"])
        tail = rng.choice(self.bank["tail"])
        verb = rng.choice(self.bank["verb"])
        end = self._end_word(cons, rng)
        if HAIKU_ABOUT in cons:
            return self._haiku_line(cons[HAIKU_ABOUT], mid)
        if ONOMATOPOEIA_ABOUT in cons:
            sound = rng.choice(self.onomatopoeia)
            body = f"the {sound} of {cons[ONOMATOPOEIA_ABOUT]} {verb}"
            line = f"{body} toward the {end}" if end else f"{body} {tail}"
        elif SIMILE_ABOUT in cons:
            topic = cons[SIMILE_ABOUT]
            line = (
                f"{topic} is like the {mid} of {end}"
                if end
                else f"{topic} is like a {mid} {tail}"
            )
        elif METAPHOR_ABOUT in cons:
            topic = cons[METAPHOR_ABOUT]
            line = (
                f"{topic} is the {mid} of {end}"
                if end
                else f"{topic} is a {mid} {tail}"
            )
        elif CONTAINS_WORD in cons:
            subject = cons[CONTAINS_WORD]
            line = (
                f"the {subject} {verb} toward the {end}"
                if end
                else f"{rng.choice(self.bank['dream_opener'])} {subject} {tail}"
            )
        elif STARTS_WITH in cons:
            opener = cons[STARTS_WITH]
            rest = f"the {mid} {verb} toward the {end}" if end else f"the {mid} {verb} {tail}"
            return f"{opener} {rest}."
        elif FOLLOWS_CONTEXT in cons:
            line = (
                f"and still the {mid} {verb} toward {end}"
                if end
                else f"and still the {mid} {verb} {tail}"
            )
        elif end is not None:
            line = f"{rng.choice(self.bank['opener'])} the {mid} of {end}"
        else:
            line = f"{rng.choice(self.bank['opener'])} the {mid} {tail}"
        return line[0].upper() + line[1:] + "."

    def _haiku_line(self, subject: str, mid: str) -> str:
        words = [subject, "in", "the", *mid.split()]
        pads = self.bank["pad"]
        i = 0
        while syllable_count_line(self.lexicon, " ".join(words)) < 15:
            words.append(pads[i % len(pads)])
            i += 1
        line = " ".join(words)
        return line[0].upper() + line[1:]

    def generate(self, instruction_text: str, params: SamplingParams) -> list[str]:
        rng = random.Random(params.seed)
        instruction = parse(instruction_text, self.catalog)
        cons = self._constraint_map(instruction)
        lines: list[str] = []
        seen: set[str] = set()
        attempts = 0
        while len(lines) < params.num_candidates and attempts < params.num_candidates * 8:
            attempts += 1
            line = _clean_line(self._compose_line(cons, rng), params.max_tokens)
            if line not in seen:
                seen.add(line)
                lines.append(line)
        while len(lines) < params.num_candidates:
            lines.append(lines[-1] if lines else "")
        return lines


class RetrievalBackend:
    """Ranks corpus lines by how many of the parsed constraints they meet."""

    backend_id = "retrieval"

    def __init__(
        self,
        lines: Sequence[str],
        lexicon: Lexicon | None = None,
        catalog: TemplateCatalog | None = None,
        onomatopoeia: frozenset[str] | None = None,
        stopwords: frozenset[str] | None = None,
    ):
        self.lines = tuple(dict.fromkeys(line.strip() for line in lines if line.strip()))
        self.lexicon = lexicon if lexicon is not None else resources.default_lexicon()
        self.catalog = catalog if catalog is not None else resources.default_catalog()
        self.onomatopoeia = (
            onomatopoeia
            if onomatopoeia is not None
            else resources.default_onomatopoeia()
        )
        self.stopwords = (
            stopwords if stopwords is not None else resources.default_stopwords()
        )

    def generate(self, instruction_text: str, params: SamplingParams) -> list[str]:
        if not self.lines:
            raise BackendError("retrieval backend has an empty corpus")
        rng = random.Random(params.seed)
        instruction = parse(instruction_text, self.catalog)
        order = list(range(len(self.lines)))
        rng.shuffle(order)
        if instruction is None:
            chosen = order[: params.num_candidates]
            return [_clean_line(self.lines[i], params.max_tokens) for i in chosen]
        scored: list[tuple[int, int]] = []
        for tiebreak, index in enumerate(order):
            result = check(
                instruction,
                self.lines[index],
                lexicon=self.lexicon,
                onomatopoeia=self.onomatopoeia,
                stopwords=self.stopwords,
            )
            scored.append((-result.satisfied_count, tiebreak))
        scored.sort()
        top = scored[: params.num_candidates]
        return [_clean_line(self.lines[order[t]], params.max_tokens) for _, t in top]


@dataclass(frozen=True)
class RemoteConfig:
    url: str
    auth_env: str = "VERSECRAFT_API_TOKEN"
    timeout: float = 10.0
    max_retries: int = 2
    backoff: float = 0.25
    prompt_field: str = "prompt"
    n_field: str = "n"
    temperature_field: str = "temperature"
    top_k_field: str = "top_k"
    max_tokens_field: str = "max_tokens"
    seed_field: str | None = "seed"
    completions_field: str = "completions"
    text_field: str = "text"
    few_shot_prefix: str | None = None
    extra_payload: dict = field(default_factory=dict)


class RemoteBackend:
    """JSON-over-HTTP completions with a configurable field mapping."""

    backend_id = "remote"

    def __init__(self, config: RemoteConfig, client: httpx.Client | None = None):
        self.config = config
        self._client = client

    def _payload(self, instruction_text: str, params: SamplingParams) -> dict:
        cfg = self.config
        prompt = instruction_text
        if cfg.few_shot_prefix:
            prompt = f"{cfg.few_shot_prefix}\n{instruction_text}"
        payload = {
            cfg.prompt_field: prompt,
            cfg.n_field: params.num_candidates,
            cfg.temperature_field: params.temperature,
            cfg.top_k_field: params.top_k,
            cfg.max_tokens_field: params.max_tokens,
            **cfg.extra_payload,
        }
        if cfg.seed_field:
            payload[cfg.seed_field] = params.seed
        return payload

    def _headers(self) -> dict:
        token = os.environ.get(self.config.auth_env, "")
        if token:
            return {"Authorization": f"Bearer {token}"}
        return {}

    def _extract(self, data: object) -> list[str]:
        cfg = self.config
        if not isinstance(data, dict) or cfg.completions_field not in data:
            raise BackendError(
                f"response lacks completion list field {cfg.completions_field!r}"
            )
        raw = data[cfg.completions_field]
        if not isinstance(raw, list):
            raise BackendError(f"field {cfg.completions_field!r} is not a list")
        texts: list[str] = []
        for item in raw:
            if isinstance(item, str):
                texts.append(item)
            elif isinstance(item, dict) and cfg.text_field in item:
                texts.append(str(item[cfg.text_field]))
            else:
                texts.append("")
        return texts

    def generate(self, instruction_text: str, params: SamplingParams) -> list[str]:
        cfg = self.config
        payload = self._payload(instruction_text, params)
        client = self._client or httpx.Client(timeout=cfg.timeout)
        owns_client = self._client is None
        last_error: Exception | None = None
        try:
            for attempt in range(cfg.max_retries + 1):
                try:
                    response = client.post(
                        cfg.url,
                        json=payload,
                        headers=self._headers(),
                        timeout=cfg.timeout,
                    )
                except httpx.HTTPError as exc:
                    last_error = exc
                    if attempt < cfg.max_retries:
                        time.sleep(cfg.backoff * (2**attempt))
                    continue
                if response.status_code // 100 != 2:
                    if response.status_code >= 500 and attempt < cfg.max_retries:
                        time.sleep(cfg.backoff * (2**attempt))
                        continue
                    raise BackendError(
                        f"completion endpoint returned HTTP {response.status_code}"
                    )
                texts = self._extract(response.json())
                cleaned = [_clean_line(t, params.max_tokens) for t in texts]
                cleaned = cleaned[: params.num_candidates]
                while len(cleaned) < params.num_candidates:
                    cleaned.append("")
                return cleaned
        finally:
            if owns_client:
                client.close()
        raise BackendError(f"completion endpoint unreachable: {last_error}")


def suggest(
    backend,
    instruction_text: str,
    params: SamplingParams,
    *,
    instruction: Instruction | None = None,
    catalog: TemplateCatalog | None = None,
    lexicon: Lexicon | None = None,
    onomatopoeia: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
) -> list[Suggestion]:
    """Generate candidates and attach a check verdict to each.

    When the instruction text does not parse, every candidate carries a
    vacuous passing check flagged ``unparseable``; the raw text still goes
    to the backend untouched.
    """
    catalog = catalog if catalog is not None else resources.default_catalog()
    if instruction is None:
        instruction = parse(instruction_text, catalog)
    texts = backend.generate(instruction_text, params)
    backend_id = getattr(backend, "backend_id", backend.__class__.__name__)
    suggestions = []
    for index, text in enumerate(texts):
        if instruction is None:
            # vacuous pass: nothing to verify, but the flag records why
            result = CheckResult(
                ok=True,
                verdicts=(
                    ConstraintVerdict(
                        kind="unparsed",
                        argument=instruction_text,
                        ok=True,
                        flags=frozenset({"unparseable"}),
                    ),
                ),
            )
        else:
            result = check(
                instruction,
                text,
                lexicon=lexicon,
                onomatopoeia=onomatopoeia,
                stopwords=stopwords,
            )
        suggestions.append(
            Suggestion(
                text=text, backend_id=backend_id, candidate_index=index, check=result
            )
        )
    return suggestions


def select_best(suggestions: Sequence[Suggestion], seed: int = 0) -> Suggestion:
    """Uniform pick among passing candidates; flagged failure pick otherwise."""
    if not suggestions:
        raise ValueError("no suggestions to select from")
    rng = random.Random(seed)
    passing = [s for s in suggestions if s.check is not None and s.check.ok]
    if passing:
        return rng.choice(passing)
    pick = rng.choice(list(suggestions))
    if pick.check is None:
        return pick
    verdicts = tuple(
        replace(v, flags=frozenset(v.flags | {"no-passing-candidate"}))
        for v in pick.check.verdicts
    )
    if not verdicts:
        verdicts = (
            ConstraintVerdict(
                kind="unparsed",
                argument=pick.text,
                ok=False,
                flags=frozenset({"no-passing-candidate"}),
            ),
        )
    return replace(pick, check=CheckResult(ok=False, verdicts=verdicts))
