import pytest

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(number, title, passed, detail=""):
        ACCEPTANCE[number] = (title, bool(passed), detail)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        line = f"[{'PASS' if passed else 'FAIL'}] {number}. {title}"
        terminalreporter.write_line(f"{line}: {detail}" if detail else line)
