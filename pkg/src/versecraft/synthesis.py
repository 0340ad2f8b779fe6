"""Self-supervised instruction/verse pair extraction from a poem corpus.

Every pair is built by a small deterministic rule that reads one line (or
one adjacent pair of lines) and produces an instruction the line already
satisfies. The checker then confirms each pair before it is emitted, so a
rule bug shows up as a rejection count instead of silently polluted data.

The same module builds the three evaluation regimes:

* ``kika``: seen templates, seen arguments, novel combinations. Zero
  instruction-text overlap with the training pairs.
* ``kiua``: seen templates, arguments from a held-out list that the
  corpus rules can never produce.
* ``comp``: composite templates never seen in training, with seen
  arguments.

``audit_test_sets`` re-derives those guarantees from the data alone so a
construction bug cannot hide behind its own bookkeeping.
"""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence, TextIO

from . import resources
from .evaluation import EvalItem, check
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
    Constraint,
    Instruction,
    TemplateCatalog,
    atomic,
    compose,
    parse,
    render,
)
from .phonetics import Lexicon, rhyme_candidates
from .seeding import derive_seed
from .textkit import extract_noun_phrases, keywords, normalize, tokenize

POEM_KINDS = ("verse", "haiku")

# copulas that anchor figurative-language detection; the wider set (sense
# verbs included) only applies to similes, where the checker does not
# insist on a literal copula
_STRICT_COPULAS = ("is", "are", "was", "were")
_SIMILE_COPULAS = _STRICT_COPULAS + ("seems", "looks", "feels", "sounds")
_COMPARATORS = ("like", "as")

_DET = "DET"
_ADJ = "ADJ"
_NOUN = "NOUN"


class CorpusError(ValueError):
    """The corpus source is malformed."""


class TestSetBuildError(RuntimeError):
    """A regime could not be built within its guarantees."""

    __test__ = False  # not a pytest class, despite the name


@dataclass(frozen=True)
class Poem:
    poem_id: str
    kind: str
    lines: tuple[str, ...]

    def __post_init__(self):
        if not self.poem_id:
            raise CorpusError("poem id is empty")
        if self.kind not in POEM_KINDS:
            raise CorpusError(f"unknown poem kind {self.kind!r}")
        if not self.lines or any(not line.strip() for line in self.lines):
            raise CorpusError(f"poem {self.poem_id}: empty line")
        if self.kind == "haiku" and len(self.lines) != 1:
            raise CorpusError(
                f"poem {self.poem_id}: haiku must be one joined line"
            )


@dataclass(frozen=True)
class Provenance:
    poem_id: str
    line_index: int
    rule: str


@dataclass(frozen=True)
class InstructionPair:
    """One training example: an instruction and a verse satisfying it."""

    instruction: Instruction
    text: str
    verse: str
    context: str | None
    provenance: Provenance

    def to_record(self) -> dict:
        record = {
            "instruction": self.instruction.to_dict(),
            "text": self.text,
            "verse": self.verse,
            "context": self.context,
            "provenance": {
                "poem_id": self.provenance.poem_id,
                "line_index": self.provenance.line_index,
                "rule": self.provenance.rule,
            },
        }
        return record

    @classmethod
    def from_record(cls, record: dict) -> "InstructionPair":
        prov = record["provenance"]
        return cls(
            instruction=Instruction.from_dict(record["instruction"]),
            text=record["text"],
            verse=record["verse"],
            context=record.get("context"),
            provenance=Provenance(prov["poem_id"], prov["line_index"], prov["rule"]),
        )


@dataclass(frozen=True)
class SynthesisConfig:
    seed: int = 0
    train_ratio: float = 0.9
    augment: bool = True

    def __post_init__(self):
        if not 0.0 < self.train_ratio <= 1.0:
            raise ValueError("train_ratio must be in (0, 1]")


@dataclass(frozen=True)
class SynthesisResult:
    train: tuple[InstructionPair, ...]
    dev: tuple[InstructionPair, ...]
    rejected: dict
    manifest: dict


def ingest_corpus(source: str | Path | TextIO | Iterable[dict]) -> tuple[Poem, ...]:
    """Poems from a JSONL file (or pre-parsed records)."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            return ingest_corpus(_iter_jsonl(handle))
    if hasattr(source, "read"):
        return ingest_corpus(_iter_jsonl(source))
    poems: list[Poem] = []
    seen_ids: set[str] = set()
    for record in source:
        if not isinstance(record, dict):
            raise CorpusError(f"corpus record is not an object: {record!r}")
        try:
            poem = Poem(
                poem_id=str(record["id"]),
                kind=str(record["kind"]),
                lines=tuple(str(line) for line in record["lines"]),
            )
        except KeyError as exc:
            raise CorpusError(f"corpus record missing field {exc}") from exc
        if poem.poem_id in seen_ids:
            raise CorpusError(f"duplicate poem id {poem.poem_id!r}")
        seen_ids.add(poem.poem_id)
        poems.append(poem)
    if not poems:
        raise CorpusError("corpus is empty")
    return tuple(poems)


def _iter_jsonl(handle: TextIO):
    for line_no, line in enumerate(handle, start=1):
        if not line.strip():
            continue
        try:
            yield json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"corpus line {line_no}: invalid JSON") from exc


def _tags(tokens: Sequence[str], pos_tags: Mapping[str, str]) -> list[str]:
    return [pos_tags.get(t, _NOUN) for t in tokens]


def _phrase_before(tokens: Sequence[str], tags: Sequence[str], end: int) -> str | None:
    """Adjective-noun run ending just before ``end``, if one is there."""
    j = end
    while j > 0 and tags[j - 1] == _NOUN:
        j -= 1
    if j == end:
        return None
    noun_start = j
    while j > 0 and tags[j - 1] == _ADJ:
        j -= 1
    return " ".join(tokens[j:end]) if noun_start < end else None


def _phrase_after(tokens: Sequence[str], tags: Sequence[str], start: int) -> str | None:
    """Adjective-noun run starting at ``start`` (skipping a determiner)."""
    j = start
    if j < len(tokens) and tags[j] == _DET:
        j += 1
    adj_start = j
    while j < len(tokens) and tags[j] == _ADJ:
        j += 1
    noun_start = j
    while j < len(tokens) and tags[j] == _NOUN:
        j += 1
    if j == noun_start:
        return None
    return " ".join(tokens[adj_start:j])


def _figurative(
    line: str, pos_tags: Mapping[str, str]
) -> tuple[str, str] | None:
    """Classify a line as a simile or metaphor and name its topic.

    Returns ``(kind, topic)`` or None. A comparator right after the copula
    makes it a simile; a strict copula followed by a noun phrase (and no
    comparator) makes it a metaphor.
    """
    tokens = tokenize(line)
    tags = _tags(tokens, pos_tags)
    for index, token in enumerate(tokens[:-1]):
        if token in _SIMILE_COPULAS and tokens[index + 1] in _COMPARATORS:
            topic = _phrase_before(tokens, tags, index)
            if topic:
                return SIMILE_ABOUT, topic
        if token in _STRICT_COPULAS and tokens[index + 1] not in _COMPARATORS:
            topic = _phrase_before(tokens, tags, index)
            obj = _phrase_after(tokens, tags, index + 1)
            if topic and obj:
                return METAPHOR_ABOUT, topic
    return None


def _sound_subject(
    line: str, pos_tags: Mapping[str, str], onomatopoeia: frozenset[str]
) -> str | None:
    """Noun phrase owning the sound: the run after "<sound> of"."""
    tokens = tokenize(line)
    tags = _tags(tokens, pos_tags)
    for index, token in enumerate(tokens[:-2]):
        if token in onomatopoeia and tokens[index + 1] == "of":
            subject = _phrase_after(tokens, tags, index + 2)
            if subject:
                return subject
    return None


def derive_pairs(
    poems: Sequence[Poem],
    *,
    catalog: TemplateCatalog | None = None,
    lexicon: Lexicon | None = None,
    pos_tags: Mapping[str, str] | None = None,
    onomatopoeia: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
    config: SynthesisConfig = SynthesisConfig(),
) -> tuple[list[InstructionPair], dict]:
    """Apply every extraction rule, keeping only checker-verified pairs.

    Returns the pairs plus a per-rule count of candidates the checker
    refused. On the bundled corpus that count is zero for every rule; a
    nonzero count flags a rule drifting from the checker's semantics.
    """
    catalog = catalog if catalog is not None else resources.default_catalog()
    lexicon = lexicon if lexicon is not None else resources.default_lexicon()
    pos_tags = pos_tags if pos_tags is not None else resources.default_pos_tags()
    onomatopoeia = (
        onomatopoeia if onomatopoeia is not None else resources.default_onomatopoeia()
    )
    stopwords = stopwords if stopwords is not None else resources.default_stopwords()

    pairs: list[InstructionPair] = []
    rejected: dict[str, int] = {}

    def emit(
        rule: str,
        instruction: Instruction,
        verse: str,
        poem: Poem,
        line_index: int,
        context: str | None = None,
    ) -> None:
        result = check(
            instruction,
            verse,
            lexicon=lexicon,
            onomatopoeia=onomatopoeia,
            stopwords=stopwords,
        )
        if not result.ok:
            rejected[rule] = rejected.get(rule, 0) + 1
            return
        pairs.append(
            InstructionPair(
                instruction=instruction,
                text=render(instruction, catalog),
                verse=verse,
                context=context,
                provenance=Provenance(poem.poem_id, line_index, rule),
            )
        )

    for poem in poems:
        if poem.kind == "haiku":
            line = poem.lines[0]
            found = keywords(line, stopwords, pos_tags, count=1)
            if found:
                emit(
                    "haiku_keyword",
                    atomic(HAIKU_ABOUT, found[0], catalog),
                    line,
                    poem,
                    0,
                )
            continue
        for line_index, line in enumerate(poem.lines):
            tokens = tokenize(line)
            if not tokens:
                continue
            phrases = extract_noun_phrases(line, pos_tags)
            for phrase in phrases:
                emit(
                    "noun_phrase",
                    atomic(CONTAINS_WORD, phrase, catalog),
                    line,
                    poem,
                    line_index,
                )
            emit(
                "first_word",
                atomic(STARTS_WITH, tokens[0], catalog),
                line,
                poem,
                line_index,
            )
            last = tokens[-1]
            emit(
                "last_word",
                atomic(ENDS_WITH, last, catalog),
                line,
                poem,
                line_index,
            )
            partners = rhyme_candidates(
                lexicon,
                last,
                seed=derive_seed(config.seed, "rhyme", poem.poem_id, line_index),
            )
            if partners:
                emit(
                    "rhyme_partner",
                    atomic(RHYMES_WITH_END, partners[0], catalog),
                    line,
                    poem,
                    line_index,
                )
            if line_index > 0:
                emit(
                    "next_line",
                    atomic(FOLLOWS_CONTEXT, poem.lines[line_index - 1], catalog),
                    line,
                    poem,
                    line_index,
                    context=poem.lines[line_index - 1],
                )
            figurative = _figurative(line, pos_tags)
            if figurative:
                kind, topic = figurative
                rule = "simile_pattern" if kind == SIMILE_ABOUT else "metaphor_pattern"
                emit(rule, atomic(kind, topic, catalog), line, poem, line_index)
            sound_subject = _sound_subject(line, pos_tags, onomatopoeia)
            if sound_subject:
                emit(
                    "sound_pattern",
                    atomic(ONOMATOPOEIA_ABOUT, sound_subject, catalog),
                    line,
                    poem,
                    line_index,
                )
            for phrase in phrases:
                if normalize(phrase).split()[-1] == normalize(last):
                    continue
                emit(
                    "subject_end",
                    compose(
                        Constraint(CONTAINS_WORD, phrase),
                        Constraint(ENDS_WITH, last),
                        catalog,
                    ),
                    line,
                    poem,
                    line_index,
                )
    return pairs, rejected


def augment_paraphrases(
    pairs: Sequence[InstructionPair], catalog: TemplateCatalog
) -> list[InstructionPair]:
    """One copy of each pair per paraphrase of its template."""
    augmented: list[InstructionPair] = []
    for pair in pairs:
        for form in catalog.forms(pair.instruction.template_id):
            instruction = replace(
                pair.instruction, paraphrase_index=form.paraphrase_index
            )
            augmented.append(
                replace(
                    pair,
                    instruction=instruction,
                    text=render(instruction, catalog),
                )
            )
    return augmented


def split_dataset(
    pairs: Sequence[InstructionPair], train_ratio: float, seed: int
) -> tuple[list[InstructionPair], list[InstructionPair]]:
    """Seeded shuffle, then a round(ratio * n) cut."""
    order = list(range(len(pairs)))
    random.Random(seed).shuffle(order)
    cut = round(train_ratio * len(pairs))
    train = [pairs[i] for i in order[:cut]]
    dev = [pairs[i] for i in order[cut:]]
    return train, dev


def dataset_manifest(
    poems: Sequence[Poem],
    train: Sequence[InstructionPair],
    dev: Sequence[InstructionPair],
    rejected: Mapping[str, int],
    config: SynthesisConfig,
) -> dict:
    """Deterministic summary of a synthesis run, hash included."""
    per_rule: dict[str, int] = {}
    per_template: dict[str, int] = {}
    arguments: set[str] = set()
    verses: set[str] = set()
    for pair in (*train, *dev):
        per_rule[pair.provenance.rule] = per_rule.get(pair.provenance.rule, 0) + 1
        tid = pair.instruction.template_id
        per_template[tid] = per_template.get(tid, 0) + 1
        arguments.update(pair.instruction.arguments)
        verses.add(pair.verse)
    digest = hashlib.sha256()
    for pair in (*train, *dev):
        digest.update(
            json.dumps(pair.to_record(), sort_keys=True, ensure_ascii=True).encode()
        )
        digest.update(b"\n")
    return {
        "poems": len(poems),
        "lines": sum(len(p.lines) for p in poems),
        "pairs": len(train) + len(dev),
        "train": len(train),
        "dev": len(dev),
        "per_rule": dict(sorted(per_rule.items())),
        "per_template": dict(sorted(per_template.items())),
        "rejected": dict(sorted(rejected.items())),
        "distinct_arguments": len(arguments),
        "distinct_verses": len(verses),
        "seed": config.seed,
        "train_ratio": config.train_ratio,
        "augment": config.augment,
        "content_hash": digest.hexdigest(),
    }


def synthesize(
    source: str | Path | TextIO | Iterable[dict] | Sequence[Poem],
    *,
    catalog: TemplateCatalog | None = None,
    lexicon: Lexicon | None = None,
    pos_tags: Mapping[str, str] | None = None,
    onomatopoeia: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
    config: SynthesisConfig = SynthesisConfig(),
) -> SynthesisResult:
    """Corpus in, verified train/dev pairs and a manifest out."""
    catalog = catalog if catalog is not None else resources.default_catalog()
    if (
        isinstance(source, Sequence)
        and source
        and isinstance(source[0], Poem)
    ):
        poems = tuple(source)
    else:
        poems = ingest_corpus(source)
    pairs, rejected = derive_pairs(
        poems,
        catalog=catalog,
        lexicon=lexicon,
        pos_tags=pos_tags,
        onomatopoeia=onomatopoeia,
        stopwords=stopwords,
        config=config,
    )
    if config.augment:
        pairs = augment_paraphrases(pairs, catalog)
    train, dev = split_dataset(
        pairs, config.train_ratio, derive_seed(config.seed, "split")
    )
    manifest = dataset_manifest(poems, train, dev, rejected, config)
    return SynthesisResult(
        train=tuple(train), dev=tuple(dev), rejected=rejected, manifest=manifest
    )


def write_pairs(path: str | Path, pairs: Sequence[InstructionPair]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for pair in pairs:
            handle.write(
                json.dumps(pair.to_record(), sort_keys=True, ensure_ascii=True)
            )
            handle.write("\n")


def read_pairs(path: str | Path) -> list[InstructionPair]:
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                pairs.append(InstructionPair.from_record(json.loads(line)))
    return pairs


# --- evaluation regimes -----------------------------------------------

DEFAULT_SET_SIZES = {"kika": 82, "kiua": 82, "comp": 78}


def _classify_heldout(
    heldout_args: Sequence[str],
) -> tuple[list[str], list[str], list[str]]:
    """Held-out entries split into words, short phrases, and full lines."""
    words, phrases, sentences = [], [], []
    for entry in heldout_args:
        n = len(tokenize(entry))
        if n >= 5:
            sentences.append(entry)
        elif n >= 2:
            phrases.append(entry)
        elif n == 1:
            words.append(entry)
    return words, phrases, sentences


def _rhymable(lexicon: Lexicon, word: str) -> bool:
    return len(tokenize(word)) == 1 and bool(rhyme_candidates(lexicon, word, seed=0))


def _train_tables(
    train: Sequence[InstructionPair],
) -> tuple[set[str], set[tuple], dict[str, set[str]], set[str]]:
    """Lookup tables the regime builders and the audit share."""
    texts = {pair.text for pair in train}
    combos = set()
    args_by_kind: dict[str, set[str]] = {}
    all_args: set[str] = set()
    for pair in train:
        combos.add((pair.instruction.template_id, pair.instruction.arguments))
        for constraint in pair.instruction.constraints:
            args_by_kind.setdefault(constraint.kind, set()).add(constraint.argument)
            all_args.add(constraint.argument)
    return texts, combos, args_by_kind, all_args


def _kind_compatible(kind: str, argument: str, lexicon: Lexicon) -> bool:
    """Could a cooperative writer satisfy this kind with this argument?"""
    if kind == RHYMES_WITH_END:
        return _rhymable(lexicon, argument)
    if kind == ONOMATOPOEIA_ABOUT or kind == HAIKU_ABOUT:
        return len(tokenize(argument)) <= 6
    return bool(tokenize(argument))


def build_test_sets(
    train: Sequence[InstructionPair],
    *,
    catalog: TemplateCatalog | None = None,
    lexicon: Lexicon | None = None,
    heldout_args: Sequence[str] | None = None,
    sizes: Mapping[str, int] | None = None,
    seed: int = 0,
) -> dict[str, tuple[EvalItem, ...]]:
    """The kika / kiua / comp regimes, guarantees enforced at build time.

    kika draws seen arguments into template slots they never occupied in
    training, so it skips the next-line template: its arguments are whole
    lines that appear nowhere else, leaving no novel combination to make.
    """
    catalog = catalog if catalog is not None else resources.default_catalog()
    lexicon = lexicon if lexicon is not None else resources.default_lexicon()
    heldout_args = (
        heldout_args if heldout_args is not None else resources.default_heldout_args()
    )
    sizes = dict(DEFAULT_SET_SIZES if sizes is None else sizes)

    texts, combos, args_by_kind, all_args = _train_tables(train)
    words, phrases, sentences = _classify_heldout(heldout_args)
    if not (words and phrases and sentences):
        raise TestSetBuildError("held-out list lacks words, phrases, or sentences")
    seen_arg_pool = sorted(all_args)
    # context arguments are whole lines; phrase-sized slots should not
    # receive them, so the recombination pool caps argument length
    kika_pool = [a for a in seen_arg_pool if len(tokenize(a)) <= 4]
    rhymable_seen = [a for a in seen_arg_pool if _rhymable(lexicon, a)]
    heldout_set = set(heldout_args)
    rhymable_words = [w for w in words if _rhymable(lexicon, w)]
    if not rhymable_words:
        raise TestSetBuildError("no rhymable held-out word")

    def forms_of(template_id):
        return catalog.forms(template_id)

    def build_item(template_id, paraphrase_index, args) -> EvalItem:
        form = catalog.form(template_id, paraphrase_index)
        constraints = tuple(
            Constraint(kind, arg) for kind, arg in zip(form.kinds, args)
        )
        instruction = Instruction(
            constraints=constraints,
            template_id=template_id,
            paraphrase_index=paraphrase_index,
        )
        return EvalItem(instruction=instruction, text=render(instruction, catalog))

    suites: dict[str, tuple[EvalItem, ...]] = {}

    # kika: seen templates, seen arguments, unseen pairings
    kika_templates = [
        t
        for t in catalog.seen_ids
        if FOLLOWS_CONTEXT not in catalog.forms(t)[0].kinds
    ]
    rng = random.Random(derive_seed(seed, "kika"))
    items: list[EvalItem] = []
    used: set[tuple] = set()
    index = 0
    attempts = 0
    budget = sizes.get("kika", 0) * 400
    while len(items) < sizes.get("kika", 0):
        attempts += 1
        if attempts > budget:
            raise TestSetBuildError("kika: ran out of novel combinations")
        template_id = kika_templates[index % len(kika_templates)]
        form = rng.choice(forms_of(template_id))
        args = tuple(rng.choice(kika_pool) for _ in form.kinds)
        if len(set(args)) != len(args):
            continue
        if any(
            not _kind_compatible(kind, arg, lexicon)
            for kind, arg in zip(form.kinds, args)
        ):
            continue
        key = (template_id, args)
        if key in combos or key in used:
            continue
        item = build_item(template_id, form.paraphrase_index, args)
        if item.text in texts:
            continue
        used.add(key)
        items.append(item)
        index += 1
    suites["kika"] = tuple(items)

    # kiua: seen templates, held-out arguments
    rng = random.Random(derive_seed(seed, "kiua"))
    items = []
    used = set()
    index = 0
    attempts = 0
    budget = sizes.get("kiua", 0) * 400
    while len(items) < sizes.get("kiua", 0):
        attempts += 1
        if attempts > budget:
            raise TestSetBuildError("kiua: ran out of held-out draws")
        template_id = catalog.seen_ids[index % len(catalog.seen_ids)]
        form = rng.choice(forms_of(template_id))
        args = []
        ok = True
        for kind in form.kinds:
            if kind == FOLLOWS_CONTEXT:
                pool = sentences
            elif kind == RHYMES_WITH_END:
                pool = rhymable_words
            elif kind in (ENDS_WITH, STARTS_WITH):
                pool = words
            else:
                pool = words + phrases
            choice = rng.choice(pool)
            if choice in all_args or choice in args:
                ok = False
                break
            args.append(choice)
        if not ok:
            continue
        args = tuple(args)
        key = (template_id, args)
        if key in used:
            continue
        used.add(key)
        items.append(build_item(template_id, form.paraphrase_index, args))
        index += 1
    suites["kiua"] = tuple(items)

    # comp: composite templates absent from training
    rng = random.Random(derive_seed(seed, "comp"))
    unseen = [t for t in catalog.composite_ids if t not in catalog.seen_ids]
    if not unseen:
        raise TestSetBuildError("comp: catalog has no unseen composites")
    items = []
    used = set()
    index = 0
    attempts = 0
    budget = sizes.get("comp", 0) * 400
    while len(items) < sizes.get("comp", 0):
        attempts += 1
        if attempts > budget:
            raise TestSetBuildError("comp: ran out of argument draws")
        template_id = unseen[index % len(unseen)]
        form = rng.choice(forms_of(template_id))
        args = []
        ok = True
        for kind in form.kinds:
            if kind == FOLLOWS_CONTEXT:
                pool = sorted(args_by_kind.get(FOLLOWS_CONTEXT, set()))
            elif kind == RHYMES_WITH_END:
                pool = rhymable_seen
            else:
                pool = kika_pool
            if not pool:
                ok = False
                break
            choice = rng.choice(pool)
            if choice in args or not _kind_compatible(kind, choice, lexicon):
                ok = False
                break
            args.append(choice)
        if not ok:
            continue
        args = tuple(args)
        key = (template_id, args)
        if key in used:
            continue
        used.add(key)
        items.append(build_item(template_id, form.paraphrase_index, args))
        index += 1
    suites["comp"] = tuple(items)

    violations = audit_test_sets(
        suites, train, catalog=catalog, heldout_args=heldout_set
    )
    flat = [msg for msgs in violations.values() for msg in msgs]
    if flat:
        raise TestSetBuildError(
            f"{len(flat)} regime violations, first: {flat[0]}"
        )
    return suites


def audit_test_sets(
    suites: Mapping[str, Sequence[EvalItem]],
    train: Sequence[InstructionPair],
    *,
    catalog: TemplateCatalog | None = None,
    heldout_args: Iterable[str] | None = None,
) -> dict[str, list[str]]:
    """Re-check every regime guarantee from the data; empty lists mean clean."""
    catalog = catalog if catalog is not None else resources.default_catalog()
    heldout = set(
        heldout_args if heldout_args is not None else resources.default_heldout_args()
    )
    texts, combos, _args_by_kind, all_args = _train_tables(train)
    seen_templates = set(catalog.seen_ids)
    violations: dict[str, list[str]] = {name: [] for name in suites}

    for name, items in suites.items():
        for position, item in enumerate(items):
            instruction = item.instruction
            label = f"{name}[{position}] {instruction.template_id}"
            reparsed = parse(item.text, catalog)
            if reparsed is None or reparsed.to_dict() != instruction.to_dict():
                violations[name].append(f"{label}: text does not parse back")
            if name == "kika":
                if instruction.template_id not in seen_templates:
                    violations[name].append(f"{label}: template not seen in training")
                if (instruction.template_id, instruction.arguments) in combos:
                    violations[name].append(f"{label}: combination occurs in training")
                if item.text in texts:
                    violations[name].append(f"{label}: instruction text in training")
                for arg in instruction.arguments:
                    if arg not in all_args:
                        violations[name].append(f"{label}: argument {arg!r} unseen")
            elif name == "kiua":
                if instruction.template_id not in seen_templates:
                    violations[name].append(f"{label}: template not seen in training")
                for arg in instruction.arguments:
                    if arg in all_args:
                        violations[name].append(
                            f"{label}: argument {arg!r} appears in training"
                        )
                    if arg not in heldout:
                        violations[name].append(
                            f"{label}: argument {arg!r} not on the held-out list"
                        )
            elif name == "comp":
                if instruction.template_id in seen_templates:
                    violations[name].append(f"{label}: template seen in training")
                if not instruction.is_composite:
                    violations[name].append(f"{label}: not a composite")
    return violations


def write_suite(path: str | Path, items: Sequence[EvalItem]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for item in items:
            record = {
                "instruction": item.instruction.to_dict(),
                "text": item.text,
            }
            handle.write(json.dumps(record, sort_keys=True, ensure_ascii=True))
            handle.write("\n")


def read_suite(path: str | Path) -> tuple[EvalItem, ...]:
    items = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                record = json.loads(line)
                items.append(
                    EvalItem(
                        instruction=Instruction.from_dict(record["instruction"]),
                        text=record["text"],
                    )
                )
    return tuple(items)
