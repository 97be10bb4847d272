from pathlib import Path

import pytest

from proxylang._stacklimit import ensure_deep_stack
from proxylang.prelude import default_prelude_source

ensure_deep_stack()

TESTS_DIR = Path(__file__).parent
CORPUS_DIR = TESTS_DIR / "corpus"
COINCIDENCE_DIR = TESTS_DIR / "coincidence"
DATA_DIR = TESTS_DIR / "data"


@pytest.fixture(scope="session")
def prelude_source() -> str:
    return default_prelude_source()


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR
