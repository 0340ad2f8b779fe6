import pytest
from hypothesis import given, strategies as st

from versecraft.textkit import (
    contains_phrase,
    distinct_unigram_ratio,
    extract_noun_phrases,
    keywords,
    lcs_length,
    normalize,
    normalized_tokens,
    rouge_l_recall,
    tokenize,
)

words = st.lists(
    st.text(alphabet="abcdef", min_size=1, max_size=4), min_size=0, max_size=8
)


def test_tokenize_keeps_internal_apostrophes():
    assert tokenize("The soldier's wives, at dawn!") == [
        "the",
        "soldier's",
        "wives",
        "at",
        "dawn",
    ]


def test_normalized_tokens_strip_apostrophes():
    assert normalized_tokens("draft's") == ["drafts"]
    assert normalize("O crimson Sun!") == "o crimson sun"


def test_tokenize_empty_and_punctuation_only():
    assert tokenize("") == []
    assert tokenize("... --- !!!") == []


def test_lcs_known_values():
    assert lcs_length("abcde", "ace") == 3
    assert lcs_length([], ["a"]) == 0
    assert lcs_length(["x", "y"], ["x", "y"]) == 2


@given(words, words)
def test_lcs_symmetry_and_bounds(a, b):
    n = lcs_length(a, b)
    assert n == lcs_length(b, a)
    assert 0 <= n <= min(len(a), len(b))


@given(words)
def test_lcs_identity(a):
    assert lcs_length(a, a) == len(a)


@given(words, words, words)
def test_lcs_concat_superset(a, b, extra):
    # adding material to one side can only help
    assert lcs_length(a + extra, b) >= lcs_length(a, b)


def test_rouge_recall_derived_case():
    assert rouge_l_recall("the cat sat", "the dog sat") == pytest.approx(2 / 3)


def test_rouge_recall_identity_and_disjoint():
    assert rouge_l_recall("a b c", "a b c") == 1.0
    assert rouge_l_recall("a b c", "x y z") == 0.0


def test_rouge_recall_empty_candidate_is_zero():
    assert rouge_l_recall("something here", "") == 0.0


def test_rouge_recall_empty_reference_raises():
    with pytest.raises(ValueError):
        rouge_l_recall("", "whatever")
    with pytest.raises(ValueError):
        rouge_l_recall("...", "whatever")


@given(words.filter(bool), words)
def test_rouge_recall_range(ref, cand):
    score = rouge_l_recall(" ".join(ref), " ".join(cand))
    assert 0.0 <= score <= 1.0


def test_distinct_unigram_ratio():
    assert distinct_unigram_ratio(["a b", "a c"]) == pytest.approx(3 / 4)
    assert distinct_unigram_ratio([]) == 0.0
    assert distinct_unigram_ratio(["", ""]) == 0.0


def test_contains_phrase_contiguous_normalized():
    assert contains_phrase("Awash in the tears of wives.", "tears of wives")
    assert contains_phrase("The Sun rises", "sun")
    assert not contains_phrase("tears fall on wives", "tears of wives")
    assert not contains_phrase("", "sun")


def test_extract_noun_phrases_chunks_and_tails():
    tags = {"the": "DET", "crimson": "ADJ", "sun": "NOUN", "rises": "VERB"}
    assert extract_noun_phrases("The crimson sun rises", tags) == [
        "crimson sun",
        "sun",
    ]


def test_extract_noun_phrases_noun_run_tails():
    tags = {"a": "DET", "harbor": "NOUN", "lantern": "NOUN", "hums": "VERB"}
    assert extract_noun_phrases("a harbor lantern hums", tags) == [
        "harbor lantern",
        "lantern",
    ]


def test_extract_noun_phrases_unknown_words_default_to_nouns():
    assert extract_noun_phrases("zyxxy glimmers", {"glimmers": "VERB"}) == ["zyxxy"]


def test_keywords_prefer_nouns_then_length():
    tags = {"silent": "ADJ", "shadow": "NOUN", "sings": "VERB"}
    stops = frozenset({"a", "the"})
    assert keywords("a silent shadow sings", stops, tags, count=2) == [
        "shadow",
        "silent",
    ]


def test_keywords_skip_stopwords_and_dupes():
    stops = frozenset({"the", "of"})
    assert keywords("the wind of the wind", stops, None, count=3) == ["wind"]
