from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from tanglekit.braidcore import BraidWord
from tanglekit.config import get_settings
from tanglekit.tanglecalc import Tangle, parse

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def load_sample(name: str) -> Tangle:
    return parse((SAMPLES / name).read_text(encoding="utf-8"))


def braid_words(strands: int, max_size: int = 8) -> st.SearchStrategy[BraidWord]:
    letters = st.tuples(st.integers(1, strands - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_size).map(lambda runs: BraidWord(strands, tuple(runs)))


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    for name in ("TANGLEKIT_BUDGET", "TANGLEKIT_LENGTH_SLACK", "TANGLEKIT_CROSSING_CAP", "TANGLEKIT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def samples() -> Path:
    return SAMPLES
