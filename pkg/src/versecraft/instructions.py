"""The instruction grammar: constraints, templates, render/parse/compose.

An instruction is one or two constraints realized through a surface
template. Atomic constraint kinds:

    contains_word      the verse mentions a word or phrase
    starts_with        the verse's first word
    ends_with          the verse's last word
    rhymes_with_end    the verse's last word rhymes with the argument
    follows_context    the verse continues a given previous line
    simile_about       a simile on a topic
    metaphor_about     a metaphor on a topic
    onomatopoeia_about a verse about a topic that uses sound words
    haiku_about        a haiku on a topic

Composites pair one opener (contains_word, starts_with, follows_context,
simile_about, metaphor_about) with one closer (ends_with, rhymes_with_end).
Haiku and onomatopoeia constraints do not compose.

The template catalog is a JSONL file of surface patterns with {arg1}/{arg2}
slots and a few paraphrases per template. Rendering wraps arguments in
single quotes; parsing accepts quoted or bare arguments and picks the
template with the longest literal match, so composite patterns beat their
atomic prefixes.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from io import StringIO
from pathlib import Path
from typing import TextIO

CONTAINS_WORD = "contains_word"
STARTS_WITH = "starts_with"
ENDS_WITH = "ends_with"
RHYMES_WITH_END = "rhymes_with_end"
FOLLOWS_CONTEXT = "follows_context"
SIMILE_ABOUT = "simile_about"
METAPHOR_ABOUT = "metaphor_about"
ONOMATOPOEIA_ABOUT = "onomatopoeia_about"
HAIKU_ABOUT = "haiku_about"

ATOMIC_KINDS = frozenset({
    CONTAINS_WORD, STARTS_WITH, ENDS_WITH, RHYMES_WITH_END, FOLLOWS_CONTEXT,
    SIMILE_ABOUT, METAPHOR_ABOUT, ONOMATOPOEIA_ABOUT, HAIKU_ABOUT,
})
OPENER_KINDS = frozenset({
    CONTAINS_WORD, STARTS_WITH, FOLLOWS_CONTEXT, SIMILE_ABOUT, METAPHOR_ABOUT,
})
CLOSER_KINDS = frozenset({ENDS_WITH, RHYMES_WITH_END})
NON_COMPOSABLE_KINDS = frozenset({ONOMATOPOEIA_ABOUT, HAIKU_ABOUT})

KIND_FAMILY = {
    CONTAINS_WORD: "subject",
    STARTS_WITH: "start",
    ENDS_WITH: "end",
    RHYMES_WITH_END: "rhyme",
    FOLLOWS_CONTEXT: "next_sentence",
    SIMILE_ABOUT: "simile",
    METAPHOR_ABOUT: "metaphor",
    ONOMATOPOEIA_ABOUT: "onomatopoeia",
    HAIKU_ABOUT: "haiku",
}


class InstructionError(ValueError):
    """Invalid constraint combination or template mismatch."""


class ComposeError(InstructionError):
    """The two constraints cannot be combined."""


class CatalogError(ValueError):
    """Malformed template catalog."""


@dataclass(frozen=True)
class Constraint:
    kind: str
    argument: str

    def __post_init__(self):
        if self.kind not in ATOMIC_KINDS:
            raise InstructionError(f"unknown constraint kind {self.kind!r}")
        if not self.argument.strip():
            raise InstructionError(f"{self.kind} requires a non-empty argument")


@dataclass(frozen=True)
class Instruction:
    constraints: tuple[Constraint, ...]
    template_id: str
    paraphrase_index: int = 0

    def __post_init__(self):
        kinds = [c.kind for c in self.constraints]
        if not 1 <= len(kinds) <= 2:
            raise InstructionError("an instruction holds one or two constraints")
        if len(set(kinds)) != len(kinds):
            raise InstructionError("duplicate constraint kinds")
        closers = [k for k in kinds if k in CLOSER_KINDS]
        if len(closers) > 1:
            raise InstructionError("at most one line-ending constraint")
        if len(kinds) == 2:
            if kinds[0] not in OPENER_KINDS or kinds[1] not in CLOSER_KINDS:
                raise InstructionError(
                    "a composite pairs an opener with a closer, opener first"
                )

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(c.kind for c in self.constraints)

    @property
    def arguments(self) -> tuple[str, ...]:
        return tuple(c.argument for c in self.constraints)

    @property
    def is_composite(self) -> bool:
        return len(self.constraints) == 2

    def to_dict(self) -> dict:
        return {
            "template_id": self.template_id,
            "paraphrase_index": self.paraphrase_index,
            "constraints": [
                {"kind": c.kind, "argument": c.argument} for c in self.constraints
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Instruction":
        return cls(
            constraints=tuple(
                Constraint(c["kind"], c["argument"]) for c in data["constraints"]
            ),
            template_id=data["template_id"],
            paraphrase_index=data.get("paraphrase_index", 0),
        )


@dataclass(frozen=True)
class TemplateForm:
    template_id: str
    paraphrase_index: int
    pattern: str
    kinds: tuple[str, ...]
    composite: bool
    seen: bool

    @property
    def literal_length(self) -> int:
        return len(re.sub(r"\{arg[12]\}", "", self.pattern))


_SLOT_RE = re.compile(r"\{arg[12]\}")


@dataclass(frozen=True)
class TemplateCatalog:
    forms_by_id: dict[str, tuple[TemplateForm, ...]]
    family_index: dict[tuple[str, ...], str] = field(default_factory=dict)

    @property
    def template_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.forms_by_id))

    @property
    def atomic_ids(self) -> tuple[str, ...]:
        return tuple(
            tid for tid in self.template_ids if not self.forms_by_id[tid][0].composite
        )

    @property
    def composite_ids(self) -> tuple[str, ...]:
        return tuple(
            tid for tid in self.template_ids if self.forms_by_id[tid][0].composite
        )

    @property
    def seen_ids(self) -> tuple[str, ...]:
        return tuple(tid for tid in self.template_ids if self.forms_by_id[tid][0].seen)

    def forms(self, template_id: str) -> tuple[TemplateForm, ...]:
        try:
            return self.forms_by_id[template_id]
        except KeyError:
            raise InstructionError(f"unknown template {template_id!r}") from None

    def form(self, template_id: str, paraphrase_index: int) -> TemplateForm:
        forms = self.forms(template_id)
        if not 0 <= paraphrase_index < len(forms):
            raise InstructionError(
                f"template {template_id!r} has no paraphrase {paraphrase_index}"
            )
        return forms[paraphrase_index]

    def template_for_kinds(self, kinds: tuple[str, ...]) -> str:
        try:
            return self.family_index[kinds]
        except KeyError:
            raise InstructionError(f"no template for constraint kinds {kinds!r}") from None

    def all_forms(self) -> list[TemplateForm]:
        return [f for forms in self.forms_by_id.values() for f in forms]


def load_catalog(source: str | Path | TextIO) -> TemplateCatalog:
    """Load the template catalog from JSONL (path or open stream)."""
    if isinstance(source, (str, Path)):
        stream: TextIO = StringIO(Path(source).read_text(encoding="utf-8"))
    else:
        stream = source
    grouped: dict[str, list[TemplateForm]] = {}
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"line {line_no}: not valid JSON ({exc})") from None
        kinds = tuple(record["kinds"])
        for kind in kinds:
            if kind not in ATOMIC_KINDS:
                raise CatalogError(f"line {line_no}: unknown kind {kind!r}")
        pattern = record["pattern"]
        slots = _SLOT_RE.findall(pattern)
        expected = ["{arg1}"] if len(kinds) == 1 else ["{arg1}", "{arg2}"]
        if slots != expected:
            raise CatalogError(
                f"line {line_no}: pattern slots {slots} do not fit {len(kinds)} constraints"
            )
        stripped = _SLOT_RE.sub("", pattern)
        if "{" in stripped or "}" in stripped:
            raise CatalogError(f"line {line_no}: stray braces in pattern")
        form = TemplateForm(
            template_id=record["template_id"],
            paraphrase_index=int(record["paraphrase_index"]),
            pattern=pattern,
            kinds=kinds,
            composite=bool(record["composite"]),
            seen=bool(record["seen"]),
        )
        grouped.setdefault(form.template_id, []).append(form)
    forms_by_id: dict[str, tuple[TemplateForm, ...]] = {}
    family_index: dict[tuple[str, ...], str] = {}
    for template_id, forms in grouped.items():
        forms.sort(key=lambda f: f.paraphrase_index)
        if [f.paraphrase_index for f in forms] != list(range(len(forms))):
            raise CatalogError(f"template {template_id!r}: paraphrase indices not contiguous")
        kinds_set = {f.kinds for f in forms}
        if len(kinds_set) != 1:
            raise CatalogError(f"template {template_id!r}: inconsistent constraint kinds")
        forms_by_id[template_id] = tuple(forms)
        kinds = forms[0].kinds
        if kinds in family_index:
            raise CatalogError(f"two templates share constraint kinds {kinds!r}")
        family_index[kinds] = template_id
    if not forms_by_id:
        raise CatalogError("catalog is empty")
    return TemplateCatalog(forms_by_id=forms_by_id, family_index=family_index)


def atomic(kind: str, argument: str, catalog: TemplateCatalog,
           paraphrase_index: int = 0) -> Instruction:
    """Build a one-constraint instruction on its canonical template."""
    template_id = catalog.template_for_kinds((kind,))
    return Instruction(
        constraints=(Constraint(kind, argument),),
        template_id=template_id,
        paraphrase_index=paraphrase_index,
    )


def compose(first: Constraint, second: Constraint, catalog: TemplateCatalog,
            paraphrase_index: int = 0) -> Instruction:
    """Combine an opener and a closer, in either argument order."""
    pair = {first.kind, second.kind}
    if pair & NON_COMPOSABLE_KINDS:
        raise ComposeError("haiku and onomatopoeia constraints do not compose")
    openers = [c for c in (first, second) if c.kind in OPENER_KINDS]
    closers = [c for c in (first, second) if c.kind in CLOSER_KINDS]
    if len(openers) != 1 or len(closers) != 1:
        raise ComposeError(
            f"cannot compose {first.kind} with {second.kind}: need one opener and one closer"
        )
    kinds = (openers[0].kind, closers[0].kind)
    template_id = catalog.template_for_kinds(kinds)
    return Instruction(
        constraints=(openers[0], closers[0]),
        template_id=template_id,
        paraphrase_index=paraphrase_index,
    )


def render(instruction: Instruction, catalog: TemplateCatalog) -> str:
    """Surface text for an instruction, arguments in single quotes."""
    form = catalog.form(instruction.template_id, instruction.paraphrase_index)
    if form.kinds != instruction.kinds:
        raise InstructionError(
            f"template {instruction.template_id!r} expects kinds {form.kinds}, "
            f"instruction has {instruction.kinds}"
        )
    args = instruction.arguments
    text = form.pattern.replace("{arg1}", f"'{args[0]}'")
    if len(args) == 2:
        text = text.replace("{arg2}", f"'{args[1]}'")
    return text


def _unquote(span: str) -> tuple[str, bool]:
    s = span.strip()
    if len(s) >= 2 and s[0] == "'" and s[-1] == "'":
        return s[1:-1], True
    return s, False


def _match_form(text: str, form: TemplateForm) -> tuple[list[str], int] | None:
    literals = _SLOT_RE.split(form.pattern)
    low = text.casefold()
    lead = literals[0].casefold()
    if not low.startswith(lead):
        return None
    pos = len(lead)
    if len(literals) == 2:
        tail = literals[1].casefold()
        end = len(text) - len(tail) if tail else len(text)
        if tail and (end < pos or not low.endswith(tail)):
            return None
        spans = [text[pos:end]]
    else:
        middle = literals[1].casefold()
        tail = literals[2].casefold()
        end = len(text) - len(tail) if tail else len(text)
        if tail and not low.endswith(tail):
            return None
        cut = low.rfind(middle, pos, end)
        if cut < 0:
            return None
        spans = [text[pos:cut], text[cut + len(middle):end]]
    args: list[str] = []
    quoted_count = 0
    for span in spans:
        value, quoted = _unquote(span)
        if not value.strip():
            return None
        args.append(value)
        quoted_count += quoted
    return args, quoted_count


def parse(text: str, catalog: TemplateCatalog) -> Instruction | None:
    """Recover the instruction behind a surface string, or None.

    Every catalog form is tried; the match covering the most literal
    pattern characters wins, with quoted arguments breaking ties.
    """
    stripped = text.strip()
    if not stripped:
        return None
    best: tuple[int, int, str, int] | None = None
    best_args: list[str] | None = None
    best_form: TemplateForm | None = None
    for form in sorted(
        catalog.all_forms(), key=lambda f: (f.template_id, f.paraphrase_index)
    ):
        match = _match_form(stripped, form)
        if match is None:
            continue
        args, quoted = match
        rank = (form.literal_length, quoted, form.template_id, form.paraphrase_index)
        if best is None or rank > best:
            best = rank
            best_args = args
            best_form = form
    if best_form is None or best_args is None:
        return None
    try:
        return Instruction(
            constraints=tuple(
                Constraint(kind, arg) for kind, arg in zip(best_form.kinds, best_args)
            ),
            template_id=best_form.template_id,
            paraphrase_index=best_form.paraphrase_index,
        )
    except InstructionError:
        return None
