import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record a one-line verdict for the acceptance summary."""

    def record(number, title, passed, detail=""):
        _ACCEPTANCE.append((number, title, passed, detail))
        assert passed, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE, key=lambda row: str(row[0])):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {number}. {title}  {detail}".rstrip())
