"""Lucas-Carmichael tests, degree/primary classification and structural audits.

A Lucas-Carmichael (LC) integer is a square-free composite n with
p + 1 | n + 1 for every prime p | n. Equivalently, n is square-free and
S_{p+2}(n+2) = 1 (mod p+1) for every prime p | n, since n + 2 and its
base-(p+2) digit sum agree modulo p + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Factorization, factorize, gcd_list, is_squarefree
from .digits import digit_sum
from .errors import InvalidInputError, PreconditionError, TheoremViolation


@dataclass(frozen=True)
class PrimeDigitInfo:
    p: int
    s: int  # S_{p+2}(n+2)
    residue: int  # s mod (p+1)
    divides: bool  # p+1 | n+1


@dataclass(frozen=True)
class LcReport:
    """Full verdict for one integer.

    ``korselt_ok`` and ``digit_ok`` record the raw per-prime conditions
    (all p+1 | n+1, resp. all residues equal 1) without the square-free and
    composite requirements that ``is_lc`` adds on top.
    """

    n: int
    factorization: Factorization
    squarefree: bool
    composite: bool
    korselt_ok: bool
    digit_ok: bool
    per_prime: tuple[PrimeDigitInfo, ...]
    is_lc: bool
    degree: int | None
    primary: bool | None

    @property
    def primes(self) -> list[int]:
        return self.factorization.primes

    @property
    def omega(self) -> int:
        return self.factorization.omega


@dataclass(frozen=True)
class ThreeFactorForm:
    """n = (2h r1 - 1)(2h r2 - 1)(2h r3 - 1) with pairwise coprime r1 < r2 < r3."""

    h: int
    r: tuple[int, int, int]

    def value(self) -> int:
        return math.prod(2 * self.h * ri - 1 for ri in self.r)


@dataclass(frozen=True)
class QrBound:
    m: int
    q: int
    r: int
    q_ok: bool
    r_ok: bool


def _composite(f: Factorization) -> bool:
    return f.big_omega >= 2


def korselt_check(f: Factorization) -> bool:
    """Square-free, composite, and p+1 | n+1 for every prime p | n."""
    if not (is_squarefree(f) and _composite(f)):
        return False
    n1 = f.n + 1
    return all(n1 % (p + 1) == 0 for p in f.primes)


def digit_check(f: Factorization) -> bool:
    """Square-free, composite, and S_{p+2}(n+2) = 1 (mod p+1) for every p | n."""
    if not (is_squarefree(f) and _composite(f)):
        return False
    n2 = f.n + 2
    return all(digit_sum(n2, p + 2) % (p + 1) == 1 for p in f.primes)


def analyze_factorization(f: Factorization) -> LcReport:
    """Build an :class:`LcReport` from an already known factorization."""
    n = f.n
    per_prime = []
    for p in f.primes:
        s = digit_sum(n + 2, p + 2)
        per_prime.append(PrimeDigitInfo(p, s, s % (p + 1), (n + 1) % (p + 1) == 0))
    squarefree = is_squarefree(f)
    composite = _composite(f)
    korselt_ok = all(x.divides for x in per_prime)
    digit_ok = all(x.residue == 1 for x in per_prime)
    is_lc = squarefree and composite and korselt_ok
    degree = primary = None
    if is_lc:
        degree = max((x.s - 1) // (x.p + 1) for x in per_prime)
        primary = all(x.s == x.p + 2 for x in per_prime)
    return LcReport(
        n=n,
        factorization=f,
        squarefree=squarefree,
        composite=composite,
        korselt_ok=korselt_ok,
        digit_ok=digit_ok,
        per_prime=tuple(per_prime),
        is_lc=is_lc,
        degree=degree,
        primary=primary,
    )


def analyze(n: int) -> LcReport:
    """Factor ``n`` and report LC membership, degree and the primary flag.

    The degree is max over p | n of (S_{p+2}(n+2) - 1)/(p+1); primary means
    S_{p+2}(n+2) = p+2 for every p.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidInputError(f"analyze needs an integer >= 2, got {n!r}")
    return analyze_factorization(factorize(n))


def _require_lc(report: LcReport, what: str) -> None:
    if not report.is_lc:
        raise PreconditionError(f"{what}: {report.n} is not a Lucas-Carmichael integer")


def structural_audit(report: LcReport) -> list[tuple[str, bool]]:
    """Check the properties every LC integer must have."""
    _require_lc(report, "structural_audit")
    n = report.n
    ps = report.primes
    return [
        ("odd", n % 2 == 1),
        ("at-least-three-prime-factors", len(ps) >= 3),
        ("p+1 | n/p-1", all((n // p - 1) % (p + 1) == 0 for p in ps)),
        ("p < sqrt(n)", all(p * p < n for p in ps)),
    ]


def qr_bound_check(report: LcReport) -> QrBound:
    """Size bounds on the two largest prime factors q < r, with n = m*q*r."""
    _require_lc(report, "qr_bound_check")
    ps = report.primes
    if len(ps) < 3:
        raise PreconditionError(f"qr_bound_check needs >= 3 prime factors, got {ps}")
    q, r = ps[-2], ps[-1]
    m = report.n // (q * r)
    return QrBound(m, q, r, q < 3 * m * m, r < 3 * m**3)


def three_factor_form(report: LcReport) -> ThreeFactorForm:
    """Write a three-prime LC integer as (2h r1 - 1)(2h r2 - 1)(2h r3 - 1)."""
    _require_lc(report, "three_factor_form")
    ps = report.primes
    if len(ps) != 3:
        raise PreconditionError(f"three_factor_form needs exactly 3 prime factors, got {ps}")
    k = gcd_list(p + 1 for p in ps)
    if k % 2:
        raise TheoremViolation(f"{report.n}: gcd of p+1 is odd ({k})")
    r = tuple((p + 1) // k for p in ps)
    for i in range(3):
        for j in range(i + 1, 3):
            if math.gcd(r[i], r[j]) != 1:
                raise TheoremViolation(f"{report.n}: r = {r} not pairwise coprime")
    return ThreeFactorForm(k // 2, r)
