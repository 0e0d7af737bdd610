import pytest
from hypothesis import strategies as st

from cographcolor.gen import GenConfig, Shape, SplitMix64, random_cotree, random_graph
from cographcolor.graph import Graph

_criteria: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, text = marker.args
        _criteria.append((number, text, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, verdict in sorted(_criteria):
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {text}")


@st.composite
def cotrees(draw, min_leaves=1, max_leaves=12):
    cfg = GenConfig(
        seed=draw(st.integers(0, 2**64 - 1)),
        n_leaves=draw(st.integers(min_leaves, max_leaves)),
        join_probability=draw(st.sampled_from([0.0, 0.3, 0.5, 0.7, 1.0])),
        shape=draw(st.sampled_from(list(Shape))),
    )
    return random_cotree(cfg)


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_coloring(draw, max_n=7, max_colors=4):
    g = draw(graphs(max_n=max_n))
    phi = tuple(draw(st.lists(st.integers(1, max_colors), min_size=g.n, max_size=g.n)))
    return g, phi


@pytest.fixture
def rng():
    return SplitMix64(20240601)


def sample_graph(rng, n, p=0.5) -> Graph:
    return random_graph(rng, n, p)
