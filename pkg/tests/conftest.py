import json
from pathlib import Path

import pytest

from versecraft import resources
from versecraft.synthesis import SynthesisConfig, build_test_sets, synthesize

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_PATH = FIXTURES / "corpus.jsonl"


@pytest.fixture(scope="session")
def lexicon():
    return resources.default_lexicon()


@pytest.fixture(scope="session")
def catalog():
    return resources.default_catalog()


@pytest.fixture(scope="session")
def pos_tags():
    return resources.default_pos_tags()


@pytest.fixture(scope="session")
def onomatopoeia():
    return resources.default_onomatopoeia()


@pytest.fixture(scope="session")
def stopwords():
    return resources.default_stopwords()


@pytest.fixture(scope="session")
def corpus_path():
    return CORPUS_PATH


@pytest.fixture(scope="session")
def synth_result():
    return synthesize(CORPUS_PATH, config=SynthesisConfig(seed=13))


@pytest.fixture(scope="session")
def suites(synth_result):
    return build_test_sets(synth_result.train, seed=13)


@pytest.fixture(scope="session")
def golden_pairs():
    pairs = []
    with open(FIXTURES / "golden_pairs.jsonl", encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                pairs.append(json.loads(line))
    return pairs
