import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(k, passed, detail)."""

    def record(k, passed, detail=""):
        ACCEPTANCE[k] = (bool(passed), detail)
        print(f"criterion {k:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
        assert passed, f"criterion {k} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
