import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CRITERIA = {
    1: "table reproduction",
    2: "divisibility and multiplicity at -1",
    3: "bijection round trips",
    4: "action laws",
    5: "orbit identities and representatives",
    6: "Andre equivalences and counts",
    7: "quotient tree interpretations",
    8: "gamma-positivity",
    9: "David-Barton formulas",
    10: "Chow-Ma convolution",
    11: "OEIS cross-checks",
}

_outcomes: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    k = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            state = ("xfail", report.wasxfail)
        else:
            state = (report.outcome, item.name)
        _outcomes.setdefault(k, []).append(state)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, title in CRITERIA.items():
        states = _outcomes.get(k)
        if not states:
            tr.write_line(f"criterion {k:>2} ({title}): NOT RUN")
            continue
        failed = [s for s in states if s[0] == "failed"]
        xfails = [s for s in states if s[0] == "xfail"]
        if failed:
            line = f"FAIL ({len(failed)} of {len(states)} checks failed)"
        elif xfails:
            reasons = "; ".join(sorted({r for _, r in xfails}))
            line = f"FAIL (documented counterexample: {reasons}); {len(states) - len(xfails)} other checks pass"
        else:
            line = f"PASS ({len(states)} checks)"
        tr.write_line(f"criterion {k:>2} ({title}): {line}")
