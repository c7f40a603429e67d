import pytest
from hypothesis import HealthCheck, settings, strategies as st

from cyclic_coloring.generator import (
    CarveFailed,
    carve_big_faces,
    class_corpus,
    fixtures,
    random_triangulation,
)

settings.register_profile(
    "repo", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("repo")

seeds = st.integers(min_value=0, max_value=2**64 - 1)


@st.composite
def triangulations(draw, min_n=4, max_n=30):
    n = draw(st.integers(min_n, max_n))
    seed = draw(seeds)
    flips = draw(st.integers(0, 2 * n))
    return random_triangulation(n, seed, flips)


@st.composite
def class_graphs(draw, max_n=30):
    """A triangulation with one to three carved big faces."""
    T = draw(triangulations(min_n=8, max_n=max_n))
    degs = sorted({d for d in T.degrees if 4 <= d <= 10})
    if not degs:
        return T
    sizes = draw(st.lists(st.sampled_from(degs), min_size=1, max_size=3))
    try:
        return carve_big_faces(T, sizes, draw(seeds), retries=5)
    except CarveFailed:
        return T


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def corpus():
    return class_corpus(200)


@pytest.fixture(scope="session")
def small_corpus():
    return class_corpus(24, seed=7, max_vertices=30)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
