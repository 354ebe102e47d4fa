"""Polynomial families of Lucas-Carmichael candidates.

A family is a product of linear forms a_i*m + b_i. If it satisfies
prod + 1 = 0 (mod a_i*m + b_i + 1) identically, every m where all factors are
prime yields an LC integer. Families can be built in (``builtin``), derived
from a seed LC integer (``derive_family``), or read from a text file
(``parse_family``).
"""

from __future__ import annotations

import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import Factorization, factorize, gcd_list, is_prime, lcm_list
from .digits import digit_sum, to_base
from .errors import InvalidInputError, PreconditionError
from .lc_core import LcReport, analyze_factorization
from .ratpoly import RatPoly, poly_divisible

M = RatPoly.linear(1, 0)


@dataclass(frozen=True)
class FamilySpec:
    """Linear factor forms a*m + b with the admissible-m constraints.

    Admissible m: ``m >= m_min`` and ``m_divisor | m``.
    """

    forms: tuple[tuple[int, int], ...]
    m_divisor: int = 1
    m_min: int = 0
    provenance: str = ""
    claims: tuple["ExpansionClaim", ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        forms = tuple((int(a), int(b)) for a, b in self.forms)
        object.__setattr__(self, "forms", forms)
        if len(forms) < 3 or len(forms) % 2 == 0:
            raise InvalidInputError(f"a family needs an odd number >= 3 of forms, got {len(forms)}")
        if len(set(forms)) != len(forms):
            raise InvalidInputError("family forms must be distinct")
        if any(a < 1 for a, _ in forms):
            raise InvalidInputError("form slopes must be positive")
        if self.m_divisor < 1 or self.m_min < 0:
            raise InvalidInputError("m_divisor must be >= 1 and m_min >= 0")
        m0 = self.smallest_admissible()
        if any(a * m0 + b < 2 for a, b in forms):
            raise InvalidInputError(f"some factor is < 2 at the smallest admissible m = {m0}")

    def smallest_admissible(self) -> int:
        d = self.m_divisor
        return -(-self.m_min // d) * d

    def is_admissible(self, m: int) -> bool:
        return m >= self.m_min and m % self.m_divisor == 0

    def factor_polys(self) -> list[RatPoly]:
        return [RatPoly.linear(a, b) for a, b in self.forms]

    def product_poly(self) -> RatPoly:
        out = RatPoly.const(1)
        for f in self.factor_polys():
            out = out * f
        return out

    def values(self, m: int) -> list[int]:
        return [a * m + b for a, b in self.forms]


@dataclass(frozen=True)
class ExpansionClaim:
    """A claimed base-(factor+2) expansion of n + 2, coefficients in m.

    ``coeffs[j]`` multiplies ``base(m)**j``.
    """

    family: FamilySpec
    factor_index: int
    coeffs: tuple[RatPoly, ...]
    claimed_digit_sum: RatPoly
    label: str = ""

    def base_poly(self) -> RatPoly:
        a, b = self.family.forms[self.factor_index]
        return RatPoly.linear(a, b + 2)


@dataclass(frozen=True)
class Evaluation:
    m: int
    n: int
    factors: tuple[int, ...]
    all_prime: bool


@dataclass(frozen=True)
class DerivedFamily:
    seed: LcReport
    k1: int
    r: tuple[int, ...]
    R: int
    spec: FamilySpec


@dataclass(frozen=True)
class KtupleHit:
    m: int
    n: int
    report: LcReport
    running_count: int  # hits so far, i.e. the empirical P(m)


# ---------------------------------------------------------------------------
# text format


def format_family(spec: FamilySpec) -> str:
    lines = []
    if spec.provenance:
        lines.append(f"# {spec.provenance}")
    lines.append(f"m_divisor {spec.m_divisor}")
    lines.append(f"m_min {spec.m_min}")
    lines.extend(f"{a} {b}" for a, b in spec.forms)
    return "\n".join(lines) + "\n"


_KEY_RE = re.compile(r"^(m_divisor|m_min)\s*[:=]?\s*(-?\d+)$")
_FORM_RE = re.compile(r"^(-?\d+)\s+(-?\d+)$")


def parse_family(text: str, provenance: str = "") -> FamilySpec:
    """Read the plain-text family format.

    One factor per line as ``a b`` (the form a*m + b), plus optional
    ``m_divisor N`` and ``m_min N`` lines. ``#`` starts a comment.
    """
    forms = []
    keys = {"m_divisor": 1, "m_min": 0}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if mk := _KEY_RE.match(line):
            keys[mk.group(1)] = int(mk.group(2))
        elif mf := _FORM_RE.match(line):
            forms.append((int(mf.group(1)), int(mf.group(2))))
        else:
            raise InvalidInputError(f"line {lineno}: cannot parse {raw!r}")
    return FamilySpec(tuple(forms), keys["m_divisor"], keys["m_min"], provenance)


# ---------------------------------------------------------------------------
# evaluation


def _require_admissible(spec: FamilySpec, m: int, explore: bool) -> None:
    if not isinstance(m, int) or m < 0:
        raise InvalidInputError(f"m must be a nonnegative integer, got {m!r}")
    if explore:
        if any(v < 2 for v in spec.values(m)):
            raise InvalidInputError(f"m = {m} gives a factor < 2")
    elif not spec.is_admissible(m):
        raise InvalidInputError(
            f"m = {m} is not admissible (need m >= {spec.m_min} and {spec.m_divisor} | m)"
        )


def evaluate(spec: FamilySpec, m: int, explore: bool = False) -> Evaluation:
    """Factor values and their product at ``m``.

    ``explore=True`` lifts the admissibility constraints (factors must still be >= 2).
    """
    _require_admissible(spec, m, explore)
    vals = spec.values(m)
    return Evaluation(m, math.prod(vals), tuple(vals), all(is_prime(v) for v in vals))


def family_factorization(ev: Evaluation) -> Factorization:
    """Factorization of ``ev.n`` assembled from its factor values."""
    if ev.all_prime:
        return Factorization.from_primes(ev.factors)
    primes = []
    for v in ev.factors:
        for p, e in factorize(v).factors:
            primes.extend([p] * e)
    return Factorization.from_primes(primes)


def digit_sum_profile(spec: FamilySpec, m: int, explore: bool = False) -> list[tuple[int, int]]:
    """(p, S_{p+2}(n+2)) for each factor value p, prime or not."""
    _require_admissible(spec, m, explore)
    vals = spec.values(m)
    n2 = math.prod(vals) + 2
    return [(p, digit_sum(n2, p + 2)) for p in vals]


# ---------------------------------------------------------------------------
# derivation and symbolic checks


def derive_family(seed: LcReport) -> DerivedFamily:
    """Family prod(r_i*R*m + p_i) through a seed LC integer with odd omega.

    k1 = gcd(p_i + 1), r_i = (p_i + 1)/k1, R = lcm(r_i). At m = 0 it gives
    back the seed.
    """
    if not seed.is_lc:
        raise PreconditionError(f"{seed.n} is not a Lucas-Carmichael integer")
    ps = seed.primes
    if len(ps) % 2 == 0:
        raise PreconditionError(f"{seed.n} has an even number ({len(ps)}) of prime factors")
    k1 = gcd_list(p + 1 for p in ps)
    r = tuple((p + 1) // k1 for p in ps)
    R = lcm_list(r)
    spec = FamilySpec(
        tuple((ri * R, p) for ri, p in zip(r, ps)),
        m_divisor=1,
        m_min=0,
        provenance=f"derived from {seed.n}",
    )
    return DerivedFamily(seed, k1, r, R, spec)


def verify_congruence_symbolic(spec: FamilySpec) -> bool:
    """prod(forms) + 1 is divisible by a_i*m + b_i + 1 for every form, over Q[m]."""
    num = spec.product_poly() + 1
    return all(poly_divisible(num, RatPoly.linear(a, b + 1)) for a, b in spec.forms)


def expansion_poly(claim: ExpansionClaim) -> RatPoly:
    base = claim.base_poly()
    out = RatPoly()
    power = RatPoly.const(1)
    for c in claim.coeffs:
        out = out + c * power
        power = power * base
    return out


def verify_expansion_symbolic(claim: ExpansionClaim) -> bool:
    """sum_j c_j(m) * base(m)**j equals prod(forms) + 2 coefficientwise."""
    return expansion_poly(claim) == claim.family.product_poly() + 2


def verify_claimed_sum_symbolic(claim: ExpansionClaim) -> bool:
    """The claim's coefficients add up to its stated digit sum."""
    total = RatPoly()
    for c in claim.coeffs:
        total = total + c
    return total == claim.claimed_digit_sum


def verify_digit_ranges(claim: ExpansionClaim, sample, explore: bool = False) -> bool:
    """At each m, every c_j(m) is an integer in [0, base-1] and matches ``to_base``."""
    spec = claim.family
    base_poly = claim.base_poly()
    ok = True
    for m in sample:
        _require_admissible(spec, m, explore)
        base = int(base_poly(m))
        vals = [c(m) for c in claim.coeffs]
        if any(v.denominator != 1 or not 0 <= v < base for v in vals):
            ok = False
            continue
        digits = [int(v) for v in vals]
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
        if tuple(digits) != to_base(math.prod(spec.values(m)) + 2, base).digits:
            ok = False
    return ok


# ---------------------------------------------------------------------------
# k-tuple search


def _scan(args: tuple[tuple[tuple[int, int], ...], list[int]]) -> list[int]:
    forms, ms = args
    return [m for m in ms if all(is_prime(a * m + b) for a, b in forms)]


def iter_ktuple_search(spec: FamilySpec, m_range: tuple[int, int], stride: int | None = None,
                       explore: bool = False, workers: int = 1, chunk: int = 4096):
    """Yield :class:`KtupleHit` for every m in range where all factors are prime.

    Hits come out in ascending m regardless of ``workers``.
    """
    lo, hi = m_range
    stride = spec.m_divisor if stride is None else stride
    if stride < 1 or stride % spec.m_divisor:
        raise InvalidInputError(f"stride {stride} is not a multiple of m_divisor {spec.m_divisor}")
    if lo > hi:
        raise InvalidInputError(f"empty m range {lo}..{hi}")
    _require_admissible(spec, lo, explore)
    ms = range(lo, hi + 1, stride)
    tasks = [(spec.forms, list(ms[i:i + chunk])) for i in range(0, len(ms), chunk)]
    if workers <= 1 or len(tasks) < 2:
        parts = map(_scan, tasks)
    else:
        ex = ProcessPoolExecutor(max_workers=workers)
        parts = ex.map(_scan, tasks)
    count = 0
    try:
        for part in parts:
            for m in part:
                ev = evaluate(spec, m, explore=True)
                count += 1
                yield KtupleHit(m, ev.n, analyze_factorization(family_factorization(ev)), count)
    finally:
        if workers > 1 and len(tasks) >= 2:
            ex.shutdown(cancel_futures=True)


def ktuple_search(spec: FamilySpec, m_range: tuple[int, int], stride: int | None = None,
                  explore: bool = False, workers: int = 1) -> list[KtupleHit]:
    return list(iter_ktuple_search(spec, m_range, stride, explore, workers))


# ---------------------------------------------------------------------------
# builtins


def builtin(name: str) -> FamilySpec:
    """The families ``u3``, ``u5`` and ``u7`` with their expansion claims attached."""
    from .builtin_families import BUILTINS

    try:
        return BUILTINS[name]()
    except KeyError:
        raise InvalidInputError(f"unknown family {name!r}; choose from {sorted(BUILTINS)}") from None


def claimed_sum_poly(spec: FamilySpec, index: int, mult: int, offset: int) -> RatPoly:
    """mult * (factor value) + offset, as a polynomial in m."""
    a, b = spec.forms[index]
    return RatPoly.linear(a, b) * mult + offset
