"""Exact integer arithmetic: primality, factorization, lcm and an spf sieve.

Primality is a strong-pseudoprime (Miller-Rabin) test with a fixed witness
set chosen by the size of ``n``. Below 2**64 the first twelve primes are a
proven deterministic set; above that the first thirteen primes are used and
the answer is reported as *probable* (``Factorization.proven`` is False).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import InvalidInputError

# (bound, bases): testing with `bases` is deterministic for every n < bound
# (Jaeschke; Sorenson & Webster; OEIS A014233).
_MR_TABLE = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)
PROBABLE_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
PROVEN_BOUND = 2**64
DEFAULT_TRIAL_BOUND = 10**7

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def witness_bases(n: int) -> tuple[int, ...]:
    """Return the Miller-Rabin bases used for ``n``."""
    for bound, bases in _MR_TABLE:
        if n < bound:
            return bases
    return PROBABLE_BASES


def is_prime(n: int) -> bool:
    """Primality test, deterministic for ``n < 2**64``.

    >>> [k for k in range(30) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    >>> is_prime(561)
    False
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 53 * 53:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    return all(_strong_probable_prime(n, a, d, s) for a in witness_bases(n))


def is_proven_prime_range(n: int) -> bool:
    """True when ``is_prime(n)`` is a proof rather than a probable verdict."""
    return n < PROVEN_BOUND


# ---------------------------------------------------------------------------
# sieves


def primes_up_to(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array (Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table: ``table[k]`` is the least prime dividing k.

    Entries 0 and 1 are 0. Memory is 4 bytes per entry (int32), so
    ``limit = 10**7`` needs about 40 MB; limits beyond 2**31 - 1 are refused.
    """
    if limit < 2:
        raise InvalidInputError(f"spf_sieve needs limit >= 2, got {limit}")
    if limit >= 2**31:
        raise InvalidInputError("spf_sieve limit must fit in int32")
    spf = np.zeros(limit + 1, dtype=np.int32)
    spf[2::2] = 2
    for p in range(3, math.isqrt(limit) + 1, 2):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


class _PrimeCache:
    """Grow-on-demand list of primes for trial division."""

    def __init__(self) -> None:
        self.limit = 0
        self.primes: list[int] = []

    def upto(self, bound: int) -> list[int]:
        if bound > self.limit:
            new_limit = max(bound, 2 * self.limit, 1 << 16)
            self.primes = primes_up_to(new_limit).tolist()
            self.limit = new_limit
        return self.primes


_prime_cache = _PrimeCache()


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """``n`` with its prime-power decomposition, primes strictly increasing.

    ``proven`` is False when some listed prime exceeds 2**64 and was only
    shown to be a strong probable prime.
    """

    n: int
    factors: tuple[tuple[int, int], ...]
    proven: bool = True

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise InvalidInputError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise InvalidInputError(f"factors multiply to {prod}, not {self.n}")

    @classmethod
    def from_primes(cls, primes) -> Factorization:
        """Build from a multiset of primes (any order, repeats allowed)."""
        counts: dict[int, int] = {}
        for p in primes:
            counts[p] = counts.get(p, 0) + 1
        items = tuple(sorted(counts.items()))
        n = math.prod(p**e for p, e in items)
        return cls(n, items, all(is_proven_prime_range(p) for p in counts))

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _pollard_brent(n: int, seed: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: list[int]) -> None:
    if is_prime(n):
        out.append(n)
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n, seed=n & 0xFFFF)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> Factorization:
    """Complete prime factorization of ``n >= 2``.

    Trial division by primes up to ``trial_bound``; whatever composite
    cofactor survives is split with Brent's variant of Pollard rho.

    >>> factorize(588455).factors
    ((5, 1), (7, 1), (17, 1), (23, 1), (43, 1))
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidInputError(f"factorize needs an integer >= 2, got {n!r}")
    found: list[int] = []
    rest = n
    if not is_prime(rest):
        bound = min(trial_bound, math.isqrt(rest))
        for p in _prime_cache.upto(bound):
            if p > bound:
                break
            if rest % p == 0:
                rest //= p
                found.append(p)
                while rest % p == 0:
                    rest //= p
                    found.append(p)
                if rest == 1 or is_prime(rest):
                    break
                bound = min(trial_bound, math.isqrt(rest))
    if rest > 1:
        _split(rest, found)
    return Factorization.from_primes(found)


def is_squarefree(f: Factorization) -> bool:
    return all(e == 1 for _, e in f.factors)


def lcm_list(xs) -> int:
    """Least common multiple of a nonempty list of positive integers."""
    xs = list(xs)
    if not xs:
        raise InvalidInputError("lcm_list needs at least one value")
    if any(x < 1 for x in xs):
        raise InvalidInputError("lcm_list takes positive integers only")
    return reduce(math.lcm, xs)


def gcd_list(xs) -> int:
    xs = list(xs)
    if not xs:
        raise InvalidInputError("gcd_list needs at least one value")
    return reduce(math.gcd, xs)


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of ``f.n``, ascending."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def factor_with_spf(k: int, spf) -> Factorization:
    """Factor ``k`` by walking an spf table."""
    primes = []
    while k > 1:
        p = int(spf[k])
        primes.append(p)
        k //= p
    return Factorization.from_primes(primes)
