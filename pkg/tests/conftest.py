"""Shared fixtures and the acceptance-criteria result registry.

Acceptance tests record (passed, detail) per criterion before asserting, so
the terminal summary always prints one line per criterion even when a
criterion fails."""

import pytest

from harmcolor import Hypergraph, builtin_instance

# criterion number -> (passed: bool, detail: str); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[criterion]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[criterion {criterion}] {verdict} — {detail}")


@pytest.fixture
def triangle() -> Hypergraph:
    return builtin_instance("cycle", 3)


@pytest.fixture
def path3() -> Hypergraph:
    return builtin_instance("path", 3)


@pytest.fixture
def path4() -> Hypergraph:
    return builtin_instance("path", 4)


@pytest.fixture
def matching22() -> Hypergraph:
    return builtin_instance("matching", 2, k=2)
