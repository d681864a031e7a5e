import pytest

from aligned_cycles.generators import CATALOG

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _report


@pytest.fixture(params=list(CATALOG))
def catalog_entry(request):
    name = request.param
    build, delta, longest = CATALOG[name]
    return name, build(), delta, longest
