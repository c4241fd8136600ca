import random
from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import strategies as st

from chordal_extremal.graph import from_edges
from chordal_extremal.oracle import random_chordal

CORPUS_SIZE = 500


def all_graphs(n):
    """Every labelled graph on ``n`` vertices, in edge-mask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@lru_cache(maxsize=None)
def random_corpus(size=CORPUS_SIZE):
    """Seeded chordal graphs with 2 <= n <= 40 and mixed densities."""
    out = []
    for seed in range(size):
        rng = random.Random(seed)
        n = rng.randint(2, 40)
        density = rng.choice([0.0, 0.2, 0.5, 0.8, 1.0, rng.random()])
        out.append(random_chordal(n, density, seed))
    return tuple(out)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@st.composite
def chordal_graphs(draw, max_order=25):
    n = draw(st.integers(1, max_order))
    density = draw(st.floats(0.0, 1.0))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_chordal(n, density, seed)


@st.composite
def any_graphs(draw, max_order=9):
    n = draw(st.integers(1, max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


# acceptance lines are collected here and printed in the terminal summary

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def two_k3():
    return from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
