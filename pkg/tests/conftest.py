import pytest

from zkxi.config import EvalConfig
from zkxi.zeros import scan_zeros


@pytest.fixture(scope="session")
def cfg():
    return EvalConfig()


@pytest.fixture(scope="session")
def zero_lists(cfg):
    """Zeros of Z^(k) on (0, 500] for k = 0..3, scanned once per session."""
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = scan_zeros(k, 0.0, 500.0, cfg)
        return cache[k]

    return get


_CHECKS: list[str] = []


@pytest.fixture
def report_check():
    """Record one PASS/FAIL line for the closing summary and return the verdict."""

    def record(name: str, ok: bool, detail: str) -> bool:
        _CHECKS.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CHECKS:
        terminalreporter.section("acceptance checks")
        for line in _CHECKS:
            terminalreporter.write_line(line)
