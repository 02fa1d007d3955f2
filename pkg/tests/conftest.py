import pytest


def valid_pairs(n_max, n_min=1):
    return [
        (n, q)
        for n in range(n_min, n_max + 1)
        for q in range(1, n + 1)
        if q >= 2 or n % 2
    ]


@pytest.fixture(scope="session")
def pairs_12():
    return valid_pairs(12)


ACCEPTANCE_LINES = []


def report(label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
