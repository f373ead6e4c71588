import pytest

from bipartite_ebi import GraphShape, make_labeling

FIGURE_1 = {
    "a": [[1, 1, 1, 1], [1, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
    "b": [[1, 1, 1, 1], [1, 1, 1, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
    "c": [[1, 0, 1, 1], [1, 1, 1, 0], [1, 1, 0, 0], [0, 0, 0, 0]],
    "d": [[1, 1, 1, 0], [1, 1, 1, 0], [1, 1, 0, 0], [0, 0, 0, 0]],
}

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def k44():
    return GraphShape(4, 4)


@pytest.fixture
def figure1(k44):
    return {key: make_labeling(k44, rows) for key, rows in FIGURE_1.items()}


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _criteria.append((name, ok, detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
