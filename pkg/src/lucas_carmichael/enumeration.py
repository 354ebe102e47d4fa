"""Bounded enumeration of Lucas-Carmichael integers.

Two structurally independent methods:

* ``enumerate_dfs`` builds n = p1*p2*...*pk from increasing odd primes.
  The largest prime r is never searched for directly: n = P*r with
  r + 1 | n + 1 forces r + 1 | P - 1, so r is read off the divisors of P - 1.
* ``enumerate_oracle`` factors every odd n <= limit through an spf sieve and
  applies ``korselt_check``.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import divisors, factor_with_spf, factorize, is_prime, primes_up_to, spf_sieve
from .errors import InvalidInputError
from .lc_core import LcReport, analyze, analyze_factorization, korselt_check

ORACLE_MAX_LIMIT = 2 * 10**8  # ~800 MB of int32 sieve


class Method(str, enum.Enum):
    DFS = "dfs"
    ORACLE = "oracle"


@dataclass(frozen=True)
class EnumerationResult:
    limit: int
    entries: tuple[LcReport, ...]
    method: Method

    def __post_init__(self) -> None:
        prev = 0
        for e in self.entries:
            if e.n <= prev or e.n > self.limit or not e.is_lc:
                raise InvalidInputError(f"bad enumeration entry {e.n}")
            prev = e.n

    @property
    def values(self) -> list[int]:
        return [e.n for e in self.entries]


@dataclass(frozen=True)
class Comparison:
    equal: bool
    position: int | None = None  # first index where the sequences differ
    left: int | None = None
    right: int | None = None


def _check_limit(limit: int) -> None:
    if not isinstance(limit, int) or limit < 3:
        raise InvalidInputError(f"limit must be an integer >= 3, got {limit!r}")


def default_workers() -> int:
    env = os.environ.get("LC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# DFS


def _close(P: int, L: int, last: int, limit: int, out: list[int]) -> None:
    """Append every LC n = P*r with r > last prime, r+1 | P-1, n <= limit."""
    rmax = limit // P
    if rmax <= last:
        return
    for d in divisors(factorize(P - 1)):
        r = d - 1
        if r <= last:
            continue
        if r > rmax:
            break
        if L % r == 0 or math.gcd(d, P) != 1 or not is_prime(r):
            continue
        if (P * r + 1) % math.lcm(L, d) == 0:
            out.append(P * r)


def _extend(P: int, L: int, last: int, depth: int, primes: list[int], start: int,
            limit: int, out: list[int]) -> None:
    # P is a product of `depth` odd primes, L = lcm(p+1), `last` the largest.
    # Every p+1 divides n+1, so no prime of n may divide any p+1: hence the
    # gcd filters on both the running product and the running lcm.
    if depth >= 2:
        _close(P, L, last, limit, out)
    for i in range(start, len(primes)):
        q = primes[i]
        # room for q and at least one larger prime (>= q+2)
        if P * q * (q + 2) > limit:
            break
        if L % q == 0 or math.gcd(q + 1, P) != 1:
            continue
        _extend(P * q, math.lcm(L, q + 1), q, depth + 1, primes, i + 1, limit, out)


def _branch(args: tuple[int, int, int, list[int]]) -> list[int]:
    """All LC n <= limit whose two smallest primes are primes[i1], primes[i2]."""
    i1, i2, limit, primes = args
    p1, p2 = primes[i1], primes[i2]
    out: list[int] = []
    _extend(p1 * p2, math.lcm(p1 + 1, p2 + 1), p2, 2, primes, i2 + 1, limit, out)
    return out


def _dfs_tasks(limit: int, primes: list[int]) -> list[tuple[int, int]]:
    tasks = []
    for i1, p1 in enumerate(primes):
        if p1 * (p1 + 2) * (p1 + 4) > limit:
            break
        for i2 in range(i1 + 1, len(primes)):
            p2 = primes[i2]
            if p1 * p2 * (p2 + 2) > limit:
                break
            if (p2 + 1) % p1 == 0:
                continue
            tasks.append((i1, i2))
    return tasks


def dfs_values(limit: int, workers: int = 1) -> list[int]:
    """Sorted LC integers <= limit found by the product-construction search."""
    _check_limit(limit)
    # Only odd primes: p+1 | n+1 makes n+1 even, so n is odd. With the
    # smallest prime >= 3, every non-final prime is <= sqrt(limit/3).
    primes = [p for p in primes_up_to(math.isqrt(limit // 3) + 2).tolist() if p > 2]
    tasks = [(i1, i2, limit, primes) for i1, i2 in _dfs_tasks(limit, primes)]
    found: list[int] = []
    if workers <= 1 or len(tasks) < 2:
        for t in tasks:
            found.extend(_branch(t))
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunk = max(1, len(tasks) // (workers * 8))
            for part in ex.map(_branch, tasks, chunksize=chunk):
                found.extend(part)
    return sorted(set(found))


def enumerate_dfs(limit: int, workers: int = 1) -> EnumerationResult:
    """Every LC integer <= ``limit`` via pruned depth-first product search."""
    values = dfs_values(limit, workers)
    return EnumerationResult(limit, tuple(analyze(n) for n in values), Method.DFS)


# ---------------------------------------------------------------------------
# oracle


def enumerate_oracle(limit: int, spf=None) -> EnumerationResult:
    """Every LC integer <= ``limit`` by sieve factorization of each odd n.

    Slow but shares nothing with the DFS beyond ``korselt_check``.
    """
    _check_limit(limit)
    if limit > ORACLE_MAX_LIMIT:
        raise InvalidInputError(f"oracle limit {limit} exceeds sieve budget {ORACLE_MAX_LIMIT}")
    if spf is None:
        spf = spf_sieve(limit)
    table = memoryview(spf)
    entries = []
    for n in range(9, limit + 1, 2):
        if table[n] == n:
            continue
        f = factor_with_spf(n, table)
        if korselt_check(f):
            entries.append(analyze_factorization(f))
    return EnumerationResult(limit, tuple(entries), Method.ORACLE)


def compare_enumerations(a: EnumerationResult, b: EnumerationResult) -> Comparison:
    if a.limit != b.limit:
        raise InvalidInputError(f"limits differ: {a.limit} vs {b.limit}")
    xs, ys = a.values, b.values
    for i, (x, y) in enumerate(zip(xs, ys)):
        if x != y:
            return Comparison(False, i, x, y)
    if len(xs) != len(ys):
        i = min(len(xs), len(ys))
        return Comparison(False, i, xs[i] if i < len(xs) else None, ys[i] if i < len(ys) else None)
    return Comparison(True)
