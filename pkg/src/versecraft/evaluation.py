"""Constraint checking and the automatic success-rate harness.

``check`` decides mechanically whether a line satisfies an instruction.
Continuation constraints have no mechanical criterion; they count as
satisfied and carry an ``unchecked`` flag so reports can say so. Rhyme
checks against words missing from the lexicon fail with an
``out-of-lexicon`` flag rather than raising.

``run_eval`` drives a generation backend over named instruction sets for
several runs and reports mean/std success rates overall and per template.
"""
from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping, Sequence

from . import resources
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
    render,
)
from .phonetics import Lexicon, rhyme_verdict, syllable_count_line
from .seeding import derive_seed
from .textkit import contains_phrase, normalized_tokens

if TYPE_CHECKING:  # pragma: no cover
    from .generation import SamplingParams

HAIKU_SYLLABLE_RANGE = (15, 19)
_COPULAS = frozenset({"is", "are", "was", "were"})
_COMPARATORS = frozenset({"like", "as"})


@dataclass(frozen=True)
class ConstraintVerdict:
    kind: str
    argument: str
    ok: bool
    flags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    verdicts: tuple[ConstraintVerdict, ...]

    @property
    def flags(self) -> frozenset[str]:
        out: set[str] = set()
        for verdict in self.verdicts:
            out |= verdict.flags
        return frozenset(out)

    @property
    def satisfied_count(self) -> int:
        return sum(1 for v in self.verdicts if v.ok)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "flags": sorted(self.flags),
            "verdicts": [
                {
                    "kind": v.kind,
                    "argument": v.argument,
                    "ok": v.ok,
                    "flags": sorted(v.flags),
                }
                for v in self.verdicts
            ],
        }


def _stem(token: str) -> str:
    for suffix in ("ing", "ed", "es", "s"):
        if token.endswith(suffix) and len(token) - len(suffix) >= 3:
            token = token[: -len(suffix)]
            break
    if token.endswith("e") and len(token) >= 4:
        token = token[:-1]
    return token


def _topic_present(text: str, topic: str, stopwords: frozenset[str]) -> bool:
    """Containment for simile/metaphor topics.

    Exact contiguous containment always counts. A multiword topic also
    counts when at least half of its stemmed content words appear in the
    line ("making someone feel desired" matches a line built around
    "make ... feel").
    """
    if contains_phrase(text, topic):
        return True
    topic_tokens = [t for t in normalized_tokens(topic) if t not in stopwords]
    if len(normalized_tokens(topic)) < 2 or not topic_tokens:
        return False
    line_stems = {_stem(t) for t in normalized_tokens(text)}
    hits = sum(1 for t in topic_tokens if _stem(t) in line_stems)
    return hits / len(topic_tokens) >= 0.5


def _check_constraint(
    kind: str,
    argument: str,
    text: str,
    lexicon: Lexicon,
    onomatopoeia: frozenset[str],
    stopwords: frozenset[str],
) -> ConstraintVerdict:
    tokens = normalized_tokens(text)
    flags: set[str] = set()
    if kind == CONTAINS_WORD:
        ok = contains_phrase(text, argument)
    elif kind == STARTS_WITH:
        needle = normalized_tokens(argument)
        ok = bool(needle) and tokens[: len(needle)] == needle
    elif kind == ENDS_WITH:
        needle = normalized_tokens(argument)
        ok = bool(needle) and len(tokens) >= len(needle) and tokens[-len(needle):] == needle
    elif kind == RHYMES_WITH_END:
        if not tokens:
            ok = False
            flags.add("empty-line")
        else:
            verdict = rhyme_verdict(lexicon, tokens[-1], argument)
            ok = verdict.value
            flags |= verdict.flags
    elif kind == FOLLOWS_CONTEXT:
        ok = True
        flags.add("unchecked")
    elif kind == SIMILE_ABOUT:
        ok = _topic_present(text, argument, stopwords) and bool(
            set(tokens) & _COMPARATORS
        )
    elif kind == METAPHOR_ABOUT:
        ok = _topic_present(text, argument, stopwords) and bool(set(tokens) & _COPULAS)
    elif kind == ONOMATOPOEIA_ABOUT:
        ok = _topic_present(text, argument, stopwords) and bool(
            set(tokens) & onomatopoeia
        )
    elif kind == HAIKU_ABOUT:
        low, high = HAIKU_SYLLABLE_RANGE
        count = syllable_count_line(lexicon, text)
        ok = low <= count <= high and contains_phrase(text, argument)
        if not low <= count <= high:
            flags.add("syllables-out-of-band")
    else:  # pragma: no cover - constraint kinds are validated at construction
        raise ValueError(f"unknown constraint kind {kind!r}")
    return ConstraintVerdict(kind=kind, argument=argument, ok=ok, flags=frozenset(flags))


def check(
    instruction: Instruction,
    text: str,
    *,
    lexicon: Lexicon | None = None,
    onomatopoeia: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
) -> CheckResult:
    """Verdict for every constraint; overall ok means all constraints hold."""
    lexicon = lexicon if lexicon is not None else resources.default_lexicon()
    onomatopoeia = (
        onomatopoeia if onomatopoeia is not None else resources.default_onomatopoeia()
    )
    stopwords = stopwords if stopwords is not None else resources.default_stopwords()
    verdicts = tuple(
        _check_constraint(c.kind, c.argument, text, lexicon, onomatopoeia, stopwords)
        for c in instruction.constraints
    )
    return CheckResult(ok=all(v.ok for v in verdicts), verdicts=verdicts)


@dataclass(frozen=True)
class EvalItem:
    """One test instruction: the structure plus its rendered surface text."""

    instruction: Instruction
    text: str

    def to_record(self) -> dict:
        return {
            "instruction_text": self.text,
            "template_id": self.instruction.template_id,
            "paraphrase_index": self.instruction.paraphrase_index,
            "arguments": list(self.instruction.arguments),
        }


@dataclass(frozen=True)
class SetReport:
    name: str
    n_instructions: int
    runs: int
    per_run_rates: tuple[float, ...]
    mean: float
    std: float
    per_template: dict[str, float]
    flagged: int

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n_instructions": self.n_instructions,
            "runs": self.runs,
            "per_run_rates": list(self.per_run_rates),
            "mean": self.mean,
            "std": self.std,
            "per_template": dict(sorted(self.per_template.items())),
            "flagged": self.flagged,
        }


@dataclass(frozen=True)
class EvalReport:
    backend: str
    seed: int
    runs: int
    sets: dict[str, SetReport] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "seed": self.seed,
            "runs": self.runs,
            "sets": {name: report.to_dict() for name, report in sorted(self.sets.items())},
        }

    def table(self) -> str:
        lines = [f"backend={self.backend} runs={self.runs} seed={self.seed}"]
        header = f"{'set':<10} {'n':>4} {'mean':>7} {'std':>7}"
        lines.append(header)
        lines.append("-" * len(header))
        for name in sorted(self.sets):
            report = self.sets[name]
            lines.append(
                f"{name:<10} {report.n_instructions:>4} "
                f"{report.mean:>7.3f} {report.std:>7.3f}"
            )
        return "\n".join(lines)


def run_eval(
    backend,
    suite: Mapping[str, Sequence[EvalItem]],
    *,
    catalog=None,
    lexicon: Lexicon | None = None,
    onomatopoeia: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
    params: "SamplingParams | None" = None,
    runs: int = 5,
    seed: int = 0,
) -> EvalReport:
    """Success rates for a backend over named instruction sets.

    Every sampling seed is derived from (seed, set, run, item ordinal), so a
    rerun with the same arguments reproduces the report exactly.
    """
    # imported here: generation builds on check(), not the other way round
    from .generation import SamplingParams, select_best, suggest

    catalog = catalog if catalog is not None else resources.default_catalog()
    lexicon = lexicon if lexicon is not None else resources.default_lexicon()
    params = params if params is not None else SamplingParams()
    reports: dict[str, SetReport] = {}
    for name in sorted(suite):
        items = list(suite[name])
        if not items:
            raise ValueError(f"evaluation set {name!r} is empty")
        rates: list[float] = []
        template_hits: dict[str, list[int]] = {}
        template_totals: dict[str, int] = {}
        flagged = 0
        for run in range(runs):
            hits = 0
            for idx, item in enumerate(items):
                call_params = params.with_seed(derive_seed(seed, name, run, idx))
                suggestions = suggest(
                    backend,
                    item.text,
                    call_params,
                    instruction=item.instruction,
                    catalog=catalog,
                    lexicon=lexicon,
                    onomatopoeia=onomatopoeia,
                    stopwords=stopwords,
                )
                best = select_best(
                    suggestions, seed=derive_seed(seed, name, run, idx, "select")
                )
                ok = bool(best.check and best.check.ok)
                hits += ok
                if best.check and best.check.flags:
                    flagged += 1
                tid = item.instruction.template_id
                template_hits.setdefault(tid, [0] * runs)[run] += ok
                if run == 0:
                    template_totals[tid] = template_totals.get(tid, 0) + 1
            rates.append(hits / len(items))
        per_template = {
            tid: statistics.mean(
                hits_by_run / template_totals[tid] for hits_by_run in run_hits
            )
            for tid, run_hits in template_hits.items()
        }
        reports[name] = SetReport(
            name=name,
            n_instructions=len(items),
            runs=runs,
            per_run_rates=tuple(rates),
            mean=statistics.mean(rates),
            std=statistics.pstdev(rates),
            per_template=per_template,
            flagged=flagged,
        )
    backend_id = getattr(backend, "backend_id", backend.__class__.__name__)
    return EvalReport(backend=backend_id, seed=seed, runs=runs, sets=reports)


def render_item(instruction: Instruction, catalog) -> EvalItem:
    """Pair an instruction with its rendered text."""
    return EvalItem(instruction=instruction, text=render(instruction, catalog))
