"""Per-criterion PASS/FAIL summary for tests marked ``acceptance(n)``."""

import pytest

CRITERIA = {
    1: "golden W6 reproduction (exact, < 1 s)",
    2: "Penrose equations, all kinds, n = 4..40 (< 60 s)",
    3: "oracle equality, all kinds, n = 4..16 (< 60 s)",
    4: "block route = entrywise route, n = 5..40, zero surd parts",
    5: "derivation identities, n = 4..24",
    6: "circulant laws on 200 random circulants, Searle = Gauss at orders 4..20",
    7: "entrywise M+ generators at n = 2048 (< 10 s)",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): test belongs to acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, label in CRITERIA.items():
        runs = _outcomes.get(n)
        status = "NOT RUN" if not runs else ("PASS" if all(runs) else "FAIL")
        terminalreporter.write_line(f"criterion {n}: {status}  {label}")
