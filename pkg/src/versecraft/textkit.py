"""Tokenization, text overlap metrics, and shallow phrase extraction.

Everything here is deliberately dependency-free; the rest of the package
builds on these primitives. Tokens keep internal apostrophes ("soldier's")
so pronunciation lookups can see them; *normalized* comparisons strip the
apostrophes as well, which makes "draft's" and "drafts" compare equal.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens, keeping internal apostrophes."""
    return _TOKEN_RE.findall(text.lower())


def normalized_tokens(text: str) -> list[str]:
    """Tokens for comparison: lowercased, apostrophes removed."""
    return [t.replace("'", "") for t in tokenize(text)]


def normalize(text: str) -> str:
    """Whitespace-joined normalized tokens."""
    return " ".join(normalized_tokens(text))


def lcs_length(a: Sequence, b: Sequence) -> int:
    """Length of the longest common subsequence of two sequences."""
    if not a or not b:
        return 0
    if len(b) > len(a):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        curr = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                curr.append(prev[j - 1] + 1)
            else:
                curr.append(max(prev[j], curr[j - 1]))
        prev = curr
    return prev[-1]


def rouge_l_recall(reference: str, candidate: str) -> float:
    """LCS length over reference length, on normalized tokens.

    Raises ValueError when the reference has no tokens; an empty candidate
    simply scores 0.0.
    """
    ref = normalized_tokens(reference)
    if not ref:
        raise ValueError("reference text has no tokens")
    cand = normalized_tokens(candidate)
    if not cand:
        return 0.0
    return lcs_length(ref, cand) / len(ref)


def distinct_unigram_ratio(lines: Iterable[str]) -> float:
    """Unique normalized tokens over total tokens; 0.0 for empty input."""
    total = 0
    seen: set[str] = set()
    for line in lines:
        for token in normalized_tokens(line):
            total += 1
            seen.add(token)
    if total == 0:
        return 0.0
    return len(seen) / total


def contains_phrase(text: str, phrase: str) -> bool:
    """True when the phrase occurs as a contiguous normalized token run."""
    hay = normalized_tokens(text)
    needle = normalized_tokens(phrase)
    if not needle:
        return False
    if len(needle) > len(hay):
        return False
    for i in range(len(hay) - len(needle) + 1):
        if hay[i:i + len(needle)] == needle:
            return True
    return False


_CHUNK_DET = "DET"
_CHUNK_ADJ = "ADJ"
_CHUNK_NOUN = "NOUN"


def extract_noun_phrases(
    text: str,
    pos_tags: Mapping[str, str],
    *,
    default_tag: str = _CHUNK_NOUN,
) -> list[str]:
    """Noun phrases as a shallow chunker sees them.

    A chunk is ``DET? ADJ* NOUN+``. For each chunk the full span (leading
    determiner dropped) is returned along with every noun-tail sub-span, so
    "the crimson sun" yields ["crimson sun", "sun"]. Unknown words tag as
    nouns by default, which keeps novel content words visible. Results are
    deduplicated in first-appearance order.
    """
    tokens = tokenize(text)
    tags = [pos_tags.get(t, default_tag) for t in tokens]
    phrases: list[str] = []
    seen: set[str] = set()

    def emit(phrase: str) -> None:
        if phrase and phrase not in seen:
            seen.add(phrase)
            phrases.append(phrase)

    i = 0
    n = len(tokens)
    while i < n:
        j = i
        if tags[j] == _CHUNK_DET:
            j += 1
        adj_start = j
        while j < n and tags[j] == _CHUNK_ADJ:
            j += 1
        noun_start = j
        while j < n and tags[j] == _CHUNK_NOUN:
            j += 1
        if j == noun_start:
            i += 1
            continue
        nouns = tokens[noun_start:j]
        emit(" ".join(tokens[adj_start:j]))
        for k in range(len(nouns)):
            emit(" ".join(nouns[k:]))
        i = j
    return phrases


def keywords(
    text: str,
    stopwords: frozenset[str] | set[str],
    pos_tags: Mapping[str, str] | None = None,
    *,
    count: int = 1,
) -> list[str]:
    """Salient content tokens, nouns first, longer and earlier words ahead."""
    tokens = tokenize(text)
    candidates: list[tuple[int, int, int, str]] = []
    seen: set[str] = set()
    for index, token in enumerate(tokens):
        if token in stopwords or token in seen or not any(c.isalpha() for c in token):
            continue
        seen.add(token)
        tag = pos_tags.get(token, _CHUNK_NOUN) if pos_tags is not None else _CHUNK_NOUN
        candidates.append((0 if tag == _CHUNK_NOUN else 1, -len(token), index, token))
    candidates.sort()
    return [c[3] for c in candidates[:count]]
