"""Pronunciation lexicon, rhyme tests, and syllable counts.

The lexicon format is cmudict 0.7b: one ``WORD  PH1 PH2 ...`` entry per
line, alternate pronunciations marked ``WORD(1)``, comments starting with
``;;;``. Phonemes are ARPAbet with stress digits on vowels. Any file in
that format loads here, including the published cmudict itself.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from io import StringIO
from pathlib import Path
from typing import TextIO

from .textkit import tokenize

ARPABET_VOWELS = frozenset({
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY",
    "IH", "IY", "OW", "OY", "UH", "UW",
})
ARPABET_CONSONANTS = frozenset({
    "B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L", "M", "N", "NG",
    "P", "R", "S", "SH", "T", "TH", "V", "W", "Y", "Z", "ZH",
})

_VARIANT_RE = re.compile(r"\((\d+)\)$")
_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")

Pronunciation = tuple[str, ...]


class LexiconParseError(ValueError):
    """A malformed lexicon line, with its 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class RhymeVerdict:
    """Rhyme decision plus inspectable flags (e.g. ``out-of-lexicon``)."""

    value: bool
    flags: frozenset[str] = frozenset()

    def __bool__(self) -> bool:
        return self.value


def _validate_phoneme(phoneme: str, line_no: int) -> None:
    base = phoneme.rstrip("012")
    if base in ARPABET_VOWELS:
        if base == phoneme:
            raise LexiconParseError(line_no, f"vowel {phoneme!r} lacks a stress digit")
        if len(phoneme) != len(base) + 1:
            raise LexiconParseError(line_no, f"bad stress marking on {phoneme!r}")
    elif base in ARPABET_CONSONANTS:
        if base != phoneme:
            raise LexiconParseError(line_no, f"consonant {phoneme!r} carries a stress digit")
    else:
        raise LexiconParseError(line_no, f"unknown phoneme symbol {phoneme!r}")


@dataclass(frozen=True)
class Lexicon:
    """Immutable word -> pronunciations mapping with a rhyme index."""

    entries: dict[str, tuple[Pronunciation, ...]]

    def lookup(self, word: str) -> tuple[Pronunciation, ...]:
        return self.entries.get(word.lower(), ())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(sorted(self.entries))

    def dump_lines(self):
        """Serialize back to cmudict format, one line at a time."""
        for word in sorted(self.entries):
            for idx, pron in enumerate(self.entries[word]):
                marker = f"({idx})" if idx else ""
                yield f"{word.upper()}{marker}  {' '.join(pron)}"

    @cached_property
    def _rhyme_index(self) -> dict[tuple[str, ...], tuple[str, ...]]:
        index: dict[tuple[str, ...], list[str]] = {}
        for word, prons in self.entries.items():
            for pron in prons:
                key = _rhyme_key(pron)
                if key is not None:
                    bucket = index.setdefault(key, [])
                    if not bucket or bucket[-1] != word:
                        bucket.append(word)
        return {key: tuple(sorted(set(words))) for key, words in index.items()}


def load_lexicon(source: str | Path | TextIO) -> Lexicon:
    """Load a cmudict-format lexicon from a path or an open text stream."""
    if isinstance(source, (str, Path)):
        stream: TextIO = StringIO(Path(source).read_text(encoding="latin-1"))
    else:
        stream = source
    entries: dict[str, list[Pronunciation]] = {}
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise LexiconParseError(line_no, "entry has no phonemes")
        head, phones = parts[0], parts[1:]
        for phoneme in phones:
            _validate_phoneme(phoneme, line_no)
        word = _VARIANT_RE.sub("", head).lower()
        if not word:
            raise LexiconParseError(line_no, f"entry {head!r} has no headword")
        entries.setdefault(word, []).append(tuple(phones))
    return Lexicon(entries={w: tuple(ps) for w, ps in entries.items()})


def rhyming_part(pron: Pronunciation) -> Pronunciation:
    """Suffix from the last primary/secondary stressed vowel.

    Falls back to the last vowel of any stress; an all-consonant
    pronunciation has no rhyming part and yields ().
    """
    last_any = None
    last_stressed = None
    for i, phoneme in enumerate(pron):
        if phoneme[:-1] in ARPABET_VOWELS and phoneme[-1].isdigit():
            last_any = i
            if phoneme[-1] in "12":
                last_stressed = i
    anchor = last_stressed if last_stressed is not None else last_any
    if anchor is None:
        return ()
    return tuple(pron[anchor:])


def _rhyme_key(pron: Pronunciation) -> tuple[str, ...] | None:
    part = rhyming_part(pron)
    if not part:
        return None
    return (part[0].rstrip("012"),) + part[1:]


def _fold(word: str) -> str:
    return word.strip().lower().replace("'", "")


def rhyme_verdict(lexicon: Lexicon, word_a: str, word_b: str) -> RhymeVerdict:
    """Do two words rhyme? Any pronunciation pair may match.

    The stress digit on the anchor vowel is ignored; a word never rhymes
    with itself. Words absent from the lexicon yield a false verdict
    flagged ``out-of-lexicon``.
    """
    flags: set[str] = set()
    prons_a = lexicon.lookup(word_a.strip())
    prons_b = lexicon.lookup(word_b.strip())
    if not prons_a or not prons_b:
        flags.add("out-of-lexicon")
        return RhymeVerdict(False, frozenset(flags))
    if _fold(word_a) == _fold(word_b):
        return RhymeVerdict(False, frozenset())
    keys_a = {_rhyme_key(p) for p in prons_a} - {None}
    keys_b = {_rhyme_key(p) for p in prons_b} - {None}
    return RhymeVerdict(bool(keys_a & keys_b), frozenset())


def rhymes(lexicon: Lexicon, word_a: str, word_b: str) -> bool:
    return rhyme_verdict(lexicon, word_a, word_b).value


def rhyme_candidates(lexicon: Lexicon, word: str, seed: int = 0) -> list[str]:
    """All lexicon words rhyming with ``word``, in a seeded shuffle order."""
    prons = lexicon.lookup(word.strip())
    folded = _fold(word)
    found: set[str] = set()
    for pron in prons:
        key = _rhyme_key(pron)
        if key is None:
            continue
        for candidate in lexicon._rhyme_index.get(key, ()):
            if _fold(candidate) != folded:
                found.add(candidate)
    ordered = sorted(found)
    random.Random(seed).shuffle(ordered)
    return ordered


def syllable_count_word(lexicon: Lexicon, word: str) -> int:
    """Vowel phonemes in the first listed pronunciation.

    Out-of-lexicon words fall back to counting maximal orthographic vowel
    groups (aeiouy), minimum one for a word containing letters. Tokens with
    no letters count zero.
    """
    token = word.strip().lower()
    if not any(c.isalpha() for c in token):
        return 0
    prons = lexicon.lookup(token)
    if not prons and "'" in token:
        prons = lexicon.lookup(token.replace("'", ""))
    if prons:
        return sum(1 for ph in prons[0] if ph[:-1] in ARPABET_VOWELS and ph[-1].isdigit())
    groups = _VOWEL_GROUP_RE.findall(token.replace("'", ""))
    return max(1, len(groups))


def syllable_count_line(lexicon: Lexicon, line: str) -> int:
    """Sum of per-word syllable counts over the line's tokens."""
    return sum(syllable_count_word(lexicon, token) for token in tokenize(line))
