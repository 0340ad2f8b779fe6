"""Cached access to the bundled data files.

Every loader has a ``default_*`` flavor reading the packaged resource; the
underlying parsers in :mod:`versecraft.phonetics` and
:mod:`versecraft.instructions` accept arbitrary paths, so callers can
substitute their own lexicon, catalog, or word lists (the CLI and service
expose that through configuration).
"""
from __future__ import annotations

from functools import cache
from importlib.resources import files
from io import StringIO

from .instructions import TemplateCatalog, load_catalog
from .phonetics import Lexicon, load_lexicon


def _read(name: str) -> str:
    return files("versecraft").joinpath("data").joinpath(name).read_text("utf-8")


@cache
def default_lexicon() -> Lexicon:
    return load_lexicon(StringIO(_read("cmudict.txt")))


@cache
def default_catalog() -> TemplateCatalog:
    return load_catalog(StringIO(_read("templates.jsonl")))


@cache
def default_pos_tags() -> dict[str, str]:
    tags: dict[str, str] = {}
    for line in _read("pos_tags.tsv").splitlines():
        if not line.strip():
            continue
        word, tag = line.split("\t")
        tags[word] = tag
    return tags


@cache
def default_onomatopoeia() -> frozenset[str]:
    return frozenset(w for w in _read("onomatopoeia.txt").split() if w)


@cache
def default_stopwords() -> frozenset[str]:
    return frozenset(w for w in _read("stopwords.txt").split() if w)


@cache
def default_heldout_args() -> tuple[str, ...]:
    return tuple(
        line.strip() for line in _read("heldout_args.txt").splitlines() if line.strip()
    )


@cache
def default_phrase_bank() -> dict[str, tuple[str, ...]]:
    bank: dict[str, list[str]] = {}
    for line in _read("phrase_bank.txt").splitlines():
        if not line.strip():
            continue
        kind, fragment = line.split("\t", 1)
        bank.setdefault(kind, []).append(fragment)
    return {kind: tuple(fragments) for kind, fragments in bank.items()}
