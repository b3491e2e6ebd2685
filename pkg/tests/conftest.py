from pathlib import Path

import pytest

from frcomplexity.lexicon import LexEntry, build_lexicon
from frcomplexity.pipeline import load_resources

DATA = Path(__file__).parent / "data"
DEMO = DATA / "demo"


@pytest.fixture(scope="session")
def res():
    return load_resources()


@pytest.fixture(scope="session")
def lexicon(res):
    return res.lexicon


@pytest.fixture
def tiny_lexicon():
    entries = {
        "le": LexEntry("le", 20000.0, "determiner"),
        "chat": LexEntry("chat", 50.0, "noun"),
        "mange": LexEntry("manger", 30.0, "verb"),
        "poisson": LexEntry("poisson", 20.0, "noun"),
    }
    return build_lexicon(["le", "chat", "mange"], entries)


@pytest.fixture
def demo_manifest():
    return DEMO / "manifest.csv"


@pytest.fixture
def blind_manifest():
    return DEMO / "blind.csv"
