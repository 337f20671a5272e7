from pathlib import Path

import pytest

from chromix.graph import MixedGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fig1():
    """({u,v,w}, {uv}, {v->w, w->u}): the small cyclic mixed graph."""
    return MixedGraph("uvw", [("u", "v")], [("v", "w"), ("w", "u")])


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def graph(edges="", arcs="", vertices=None):
    """Compact builder: graph("uv vw", "wx") has edges uv, vw and arc w->x."""
    es = [tuple(p) for p in edges.split()]
    as_ = [tuple(p) for p in arcs.split()]
    vs = vertices or sorted({v for p in es + as_ for v in p})
    return MixedGraph(vs, es, as_)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(number: int, title: str, detail: str = ""):
        state = {"number": number, "title": title, "detail": detail}
        request.node._criterion = state
        return state

    yield record
    state = getattr(request.node, "_criterion", None)
    if state is not None:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        line = f"criterion {state['number']}: {'PASS' if ok else 'FAIL'}  {state['title']}"
        if state["detail"]:
            line += f"  [{state['detail']}]"
        ACCEPTANCE_LINES.append(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
