import json

import pytest
from hypothesis import given, settings, strategies as st

from versecraft.evaluation import check
from versecraft.instructions import FOLLOWS_CONTEXT, parse
from versecraft.synthesis import (
    CorpusError,
    InstructionPair,
    Poem,
    SynthesisConfig,
    TestSetBuildError,
    audit_test_sets,
    augment_paraphrases,
    build_test_sets,
    derive_pairs,
    ingest_corpus,
    read_pairs,
    read_suite,
    split_dataset,
    synthesize,
    write_pairs,
    write_suite,
)

ALL_RULES = {
    "noun_phrase",
    "first_word",
    "last_word",
    "rhyme_partner",
    "next_line",
    "simile_pattern",
    "metaphor_pattern",
    "sound_pattern",
    "haiku_keyword",
    "subject_end",
}


def test_ingest_fixture_corpus(corpus_path):
    poems = ingest_corpus(corpus_path)
    assert len(poems) == 155
    kinds = {p.kind for p in poems}
    assert kinds == {"verse", "haiku"}
    assert all(len(p.lines) == 1 for p in poems if p.kind == "haiku")


def test_ingest_rejects_duplicates_and_bad_records():
    record = {"id": "p1", "kind": "verse", "lines": ["a line"]}
    with pytest.raises(CorpusError):
        ingest_corpus([record, record])
    with pytest.raises(CorpusError):
        ingest_corpus([{"id": "p2", "kind": "sonnet", "lines": ["x"]}])
    with pytest.raises(CorpusError):
        ingest_corpus([{"id": "p3", "kind": "haiku", "lines": ["a", "b"]}])
    with pytest.raises(CorpusError):
        ingest_corpus([])


def test_poem_validation():
    with pytest.raises(CorpusError):
        Poem(poem_id="", kind="verse", lines=("x",))
    with pytest.raises(CorpusError):
        Poem(poem_id="p", kind="verse", lines=("x", " "))


def test_derive_pairs_nothing_rejected(synth_result):
    assert synth_result.rejected == {}


def test_derive_pairs_covers_every_rule(synth_result):
    rules = {p.provenance.rule for p in synth_result.train + synth_result.dev}
    assert rules == ALL_RULES


def test_every_pair_passes_its_own_check(synth_result):
    pairs = (synth_result.train + synth_result.dev)[::37]
    for pair in pairs:
        assert check(pair.instruction, pair.verse).ok, pair.to_record()


def test_every_pair_text_parses_back(catalog, synth_result):
    pairs = (synth_result.train + synth_result.dev)[::53]
    for pair in pairs:
        parsed = parse(pair.text, catalog)
        assert parsed is not None, pair.text
        assert parsed.kinds == pair.instruction.kinds
        assert parsed.arguments == pair.instruction.arguments


def test_context_recorded_for_next_line_rule(synth_result):
    pairs = [
        p
        for p in synth_result.train
        if p.provenance.rule == "next_line"
    ]
    assert pairs
    for pair in pairs[:20]:
        assert pair.context is not None
        assert pair.instruction.constraints[0].kind == FOLLOWS_CONTEXT
        assert pair.instruction.constraints[0].argument == pair.context


def test_augment_multiplies_by_paraphrase_count(catalog, corpus_path):
    poems = ingest_corpus(corpus_path)
    pairs, rejected = derive_pairs(poems[:3], config=SynthesisConfig(seed=1))
    assert rejected == {}
    augmented = augment_paraphrases(pairs, catalog)
    expected = sum(len(catalog.forms(p.instruction.template_id)) for p in pairs)
    assert len(augmented) == expected
    for pair in augmented[:40]:
        reparsed = parse(pair.text, catalog)
        assert reparsed is not None
        assert reparsed.arguments == pair.instruction.arguments


def test_split_round_ratio():
    pairs = [object()] * 100
    train, dev = split_dataset(pairs, 0.9, seed=3)
    assert (len(train), len(dev)) == (90, 10)


def test_split_deterministic_and_partitioning(synth_result):
    pairs = list(synth_result.train[:200])
    a_train, a_dev = split_dataset(pairs, 0.8, seed=5)
    b_train, b_dev = split_dataset(pairs, 0.8, seed=5)
    assert a_train == b_train and a_dev == b_dev
    assert len(a_train) + len(a_dev) == len(pairs)
    c_train, _ = split_dataset(pairs, 0.8, seed=6)
    assert c_train != a_train


def test_synthesize_deterministic(corpus_path):
    first = synthesize(corpus_path, config=SynthesisConfig(seed=21))
    second = synthesize(corpus_path, config=SynthesisConfig(seed=21))
    assert first.manifest == second.manifest
    assert first.manifest["content_hash"] == second.manifest["content_hash"]
    third = synthesize(corpus_path, config=SynthesisConfig(seed=22))
    assert third.manifest["content_hash"] != first.manifest["content_hash"]


def test_manifest_counts_add_up(synth_result):
    manifest = synth_result.manifest
    assert manifest["pairs"] == manifest["train"] + manifest["dev"]
    assert sum(manifest["per_rule"].values()) == manifest["pairs"]
    assert sum(manifest["per_template"].values()) == manifest["pairs"]
    assert manifest["rejected"] == {}


def test_pairs_file_round_trip(tmp_path, synth_result):
    path = tmp_path / "pairs.jsonl"
    sample = list(synth_result.train[:50])
    write_pairs(path, sample)
    again = read_pairs(path)
    assert again == sample
    # byte-identical rewrite
    second = tmp_path / "pairs2.jsonl"
    write_pairs(second, again)
    assert path.read_bytes() == second.read_bytes()


def test_suite_file_round_trip(tmp_path, suites):
    path = tmp_path / "kika.jsonl"
    write_suite(path, suites["kika"])
    again = read_suite(path)
    assert again == suites["kika"]


def test_regime_sizes_and_templates(catalog, suites):
    assert len(suites["kika"]) == 82
    assert len(suites["kiua"]) == 82
    assert len(suites["comp"]) == 78
    seen = set(catalog.seen_ids)
    kika_templates = {i.instruction.template_id for i in suites["kika"]}
    assert kika_templates <= seen
    assert "next_sentence" not in kika_templates
    kiua_templates = {i.instruction.template_id for i in suites["kiua"]}
    assert kiua_templates == seen
    comp_templates = {i.instruction.template_id for i in suites["comp"]}
    assert comp_templates == set(catalog.composite_ids) - seen
    assert len(comp_templates) == 9


def test_regime_audit_is_clean(synth_result, suites):
    violations = audit_test_sets(suites, synth_result.train)
    assert all(not v for v in violations.values()), violations


def test_audit_catches_planted_violations(catalog, synth_result, suites):
    # a training pair smuggled into kika must be flagged
    train_pair = synth_result.train[0]
    from versecraft.evaluation import EvalItem

    poisoned = dict(suites)
    poisoned["kika"] = tuple(suites["kika"][:-1]) + (
        EvalItem(instruction=train_pair.instruction, text=train_pair.text),
    )
    violations = audit_test_sets(poisoned, synth_result.train)
    assert violations["kika"]


def test_audit_catches_seen_argument_in_kiua(synth_result, suites):
    from versecraft.evaluation import EvalItem
    from versecraft.instructions import CONTAINS_WORD, atomic, render
    from versecraft import resources

    catalog = resources.default_catalog()
    seen_arg = next(
        c.argument
        for p in synth_result.train
        for c in p.instruction.constraints
        if c.kind == CONTAINS_WORD
    )
    instruction = atomic(CONTAINS_WORD, seen_arg, catalog)
    poisoned = dict(suites)
    poisoned["kiua"] = tuple(suites["kiua"][:-1]) + (
        EvalItem(instruction=instruction, text=render(instruction, catalog)),
    )
    violations = audit_test_sets(poisoned, synth_result.train)
    assert any("appears in training" in v for v in violations["kiua"])


def test_build_test_sets_deterministic(synth_result):
    again = build_test_sets(synth_result.train, seed=13)
    for name in ("kika", "kiua", "comp"):
        assert [i.text for i in again[name]] == [
            i.text for i in build_test_sets(synth_result.train, seed=13)[name]
        ]


def test_build_test_sets_needs_heldout_variety(synth_result):
    with pytest.raises(TestSetBuildError):
        build_test_sets(synth_result.train, heldout_args=["onlyword"], seed=1)


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=1000))
def test_fuzzed_seeds_build_clean_regimes(synth_result, seed):
    suites = build_test_sets(
        synth_result.train,
        sizes={"kika": 12, "kiua": 12, "comp": 10},
        seed=seed,
    )
    violations = audit_test_sets(suites, synth_result.train)
    assert all(not v for v in violations.values())


def test_instruction_pair_record_round_trip(synth_result):
    pair = synth_result.train[7]
    assert InstructionPair.from_record(pair.to_record()) == pair
    blob = json.dumps(pair.to_record(), sort_keys=True)
    assert InstructionPair.from_record(json.loads(blob)) == pair
