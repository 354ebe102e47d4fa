import time

import pytest

from lucas_carmichael.arith import spf_sieve
from lucas_carmichael.enumeration import enumerate_dfs, enumerate_oracle

BIG = 10**7

# acceptance verdicts, printed once at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def dfs_big():
    return enumerate_dfs(BIG, workers=2)


@pytest.fixture(scope="session")
def oracle_big():
    """(result, seconds) for the sieve oracle at 10**7."""
    t0 = time.perf_counter()
    result = enumerate_oracle(BIG)
    return result, time.perf_counter() - t0


@pytest.fixture(scope="session")
def spf_million():
    return spf_sieve(10**6)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[1])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
