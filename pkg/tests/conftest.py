import random

import pytest
from hypothesis import settings

from superleib.corpus import CorpusConfig, build_corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(CorpusConfig(max_n=4, param_samples=1, mutations=2, list_max_n=3))


def random_unimodular(size: int, rng: random.Random) -> list[list[int]]:
    """Product of unit triangular integer matrices: invertible with an integer inverse."""
    L = [[1 if i == j else (rng.randint(-3, 3) if i > j else 0) for j in range(size)] for i in range(size)]
    U = [[1 if i == j else (rng.randint(-3, 3) if i < j else 0) for j in range(size)] for i in range(size)]
    return [[sum(L[i][t] * U[t][j] for t in range(size)) for j in range(size)] for i in range(size)]


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
