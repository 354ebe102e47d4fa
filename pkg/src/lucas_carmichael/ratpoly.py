"""Dense univariate polynomials in m with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import InvalidInputError


def _normalize(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class RatPoly:
    """Polynomial sum(coeffs[i] * m**i). The zero polynomial has no coefficients.

    >>> p = RatPoly.linear(6, -1) * RatPoly.linear(12, -1) * RatPoly.linear(18, -1)
    >>> p
    RatPoly(1296*m^3 - 396*m^2 + 36*m - 1)
    >>> p(1)
    Fraction(935, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()) -> None:
        self.coeffs = _normalize(coeffs)

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls([c])

    @classmethod
    def linear(cls, a, b) -> RatPoly:
        """a*m + b"""
        return cls([b, a])

    @classmethod
    def coerce(cls, x) -> RatPoly:
        if isinstance(x, RatPoly):
            return x
        if isinstance(x, (int, Rational)):
            return cls([x])
        raise TypeError(f"cannot make a polynomial from {x!r}")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other) -> RatPoly:
        other = RatPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> RatPoly:
        return self + (-RatPoly.coerce(other))

    def __rsub__(self, other) -> RatPoly:
        return RatPoly.coerce(other) - self

    def __mul__(self, other) -> RatPoly:
        other = RatPoly.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RatPoly:
        if k < 0:
            raise InvalidInputError("negative powers are not polynomials")
        result, base = RatPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == RatPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "m" if i == 1 else f"m^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in parts[1:])


def poly_add(a: RatPoly, b: RatPoly) -> RatPoly:
    return a + b


def poly_mul(a: RatPoly, b: RatPoly) -> RatPoly:
    return a * b


def poly_eval(p: RatPoly, x) -> Fraction:
    return p(Fraction(x))


def poly_divisible(num: RatPoly, lin: RatPoly) -> bool:
    """Whether the linear ``lin`` divides ``num`` over Q (``num`` vanishes at its root)."""
    if lin.degree != 1:
        raise InvalidInputError(f"divisor must have degree 1, got {lin}")
    root = -lin.coeffs[0] / lin.coeffs[1]
    return num(root) == 0
