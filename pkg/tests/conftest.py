import pytest

import gtcore

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def toy():
    return gtcore.toy()


@pytest.fixture
def ids(toy):
    """Label -> node id on the toy network."""
    return {label: toy.index(label) for label in toy.labels}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
