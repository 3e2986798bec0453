from fractions import Fraction

import pytest
from hypothesis import strategies as st

from matpoly import BiPoly, Matrix

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)

small_dims = st.integers(min_value=1, max_value=4)


@st.composite
def matrices(draw, m=None, n=None, max_dim=4):
    m = m if m is not None else draw(st.integers(1, max_dim))
    n = n if n is not None else draw(st.integers(1, max_dim))
    return Matrix([[draw(rationals) for _ in range(n)] for _ in range(m)])


@st.composite
def polys(draw, m=None, n=None, max_dim=4):
    m = m if m is not None else draw(st.integers(1, max_dim))
    n = n if n is not None else draw(st.integers(1, max_dim))
    return BiPoly([[draw(rationals) for _ in range(n)] for _ in range(m)])


# -- acceptance summary -------------------------------------------------------

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield label
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _CRITERIA.append((label, ok))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
