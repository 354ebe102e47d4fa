"""Base-b digit expansions and digit sums S_b(n)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, PreconditionError


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of a nonnegative integer, little-endian: ``digits[i]`` multiplies ``base**i``."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise InvalidInputError(f"base must be >= 2, got {self.base}")
        if not self.digits:
            raise InvalidInputError("a digit expansion has at least one digit")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise InvalidInputError(f"digit out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise InvalidInputError("leading (most significant) digit is zero")

    def value(self) -> int:
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc

    def digit_sum(self) -> int:
        return sum(self.digits)


def _check_args(n: int, b: int) -> None:
    if b < 2:
        raise InvalidInputError(f"base must be >= 2, got {b}")
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")


def to_base(n: int, b: int) -> DigitExpansion:
    """Canonical base-``b`` expansion of ``n``.

    >>> to_base(401, 5).digits
    (1, 0, 1, 3)
    """
    _check_args(n, b)
    if n == 0:
        return DigitExpansion(b, (0,))
    out = []
    while n:
        n, d = divmod(n, b)
        out.append(d)
    return DigitExpansion(b, tuple(out))


def digit_sum(n: int, b: int) -> int:
    """S_b(n), the sum of the base-``b`` digits of ``n``."""
    _check_args(n, b)
    s = 0
    while n:
        n, d = divmod(n, b)
        s += d
    return s


def lemma21_residual(m: int, n: int) -> int:
    """``(S_{m+1}(n+1) - (n+1)) mod m``, which is always 0.

    Powers of m+1 are all 1 mod m, so a number and its base-(m+1) digit sum
    agree mod m. Requires ``n > m >= 1``.
    """
    if m < 1 or n <= m:
        raise PreconditionError(f"need n > m >= 1, got m={m}, n={n}")
    return (digit_sum(n + 1, m + 1) - (n + 1)) % m
