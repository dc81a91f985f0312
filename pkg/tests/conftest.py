from __future__ import annotations

import os
import sys

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from freiman import MonomialIdeal  # noqa: E402
from oracles import degree_monomials  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def equigenerated(draw, max_n: int = 4, max_d: int = 3):
    """A random equigenerated ideal in at most ``max_n`` variables."""
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    pool = degree_monomials(n, d)
    gens = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=len(pool), unique=True))
    return MonomialIdeal(n, gens)


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_criterion_" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.rsplit("::", 1)[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
