import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from lambdatree.group_words import GroupWord

DATA = Path(__file__).parent / "data"

K = 2


@st.composite
def reduced_words(draw, k=K, max_len=8):
    n = draw(st.integers(0, max_len))
    letters = []
    for _ in range(n):
        choices = [j for j in range(1, k + 2) if not letters or j != letters[-1]]
        letters.append(draw(st.sampled_from(choices)))
    return GroupWord(tuple(letters))


letter_lists = st.lists(st.integers(1, K + 1), max_size=12)


@pytest.fixture(scope="session")
def frozen_class_sets():
    with open(DATA / "class_sets.json") as fh:
        raw = json.load(fh)["class_sets"]
    return {tuple(int(d) for d in key): set(v) for key, v in raw.items()}
