import pytest

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        if report.outcome == "failed" or name not in _acceptance:
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: (len(s.split("_")[1]), s)):
        label = name.removeprefix("test_")
        crit, _, rest = label.partition("_")
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {crit.upper()}  {rest.replace('_', ' ')}")


@pytest.fixture
def paper_graph():
    from paper_data import TOKENS, WINDOW

    from langnet.graph import build_graph

    return build_graph(TOKENS, WINDOW)
