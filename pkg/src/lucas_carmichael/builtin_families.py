"""Built-in families u3, u5, u7 and their printed base-(p+2) expansions of n + 2.

Coefficients are copied exactly as published, highest power of the base
first, and reversed into little-endian order by ``_claims``. Coefficients
written in terms of a factor value (``p - 27``) are expanded with that
factor's linear form. Powers not printed are zero.

One printed coefficient is wrong: in the u7 base-(q+2) expansion the
(q+2)^6 coefficient appears as 2592m - 1644 but the identity needs
2592m - 1633 (see ``u7_q_corrected_claim``). The builtin
keeps the printed one so that the symbolic check reports the discrepancy.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction as F

from .families import M, ExpansionClaim, FamilySpec, claimed_sum_poly
from .ratpoly import RatPoly

U3_FORMS = ((6, -1), (12, -1), (18, -1))
U5_FORMS = ((1188, 5), (1584, 7), (3564, 17), (4752, 23), (8712, 43))
U7_FORMS = ((1728, 7), (2592, 11), (3888, 17), (5184, 23), (6912, 31), (11664, 53), (15552, 71))

# claimed S_{p+2}(n+2) per factor as (multiplier, offset): mult*p + offset
U3_SUMS = ((2, 3), (2, 3), (1, 2))
U5_SUMS = ((2, 3), (4, 5), (2, 3), (2, 3), (2, 3))
U7_SUMS = ((4, 5), (3, 4), (3, 4), (3, 4), (3, 4), (2, 3), (3, 4))

# the coefficient 2592m - 1644 is printed; 2592m - 1633 makes the identity hold
U7_Q_PRINTED_COEFF = 2592 * M - 1644
U7_Q_CORRECTED_COEFF = 2592 * M - 1633


def _forms(forms) -> list[RatPoly]:
    return [RatPoly.linear(a, b) for a, b in forms]


def _u3_printed() -> list[list]:
    p, q, r = _forms(U3_FORMS)
    return [
        [5, p - 27, 45, p - 20],
        [9 * M - 5, 9 * M + 11, 6 * M - 5],
        [4 * M - 2, 6 * M + 5, 8 * M - 2],
    ]


def _u5_printed() -> list[list]:
    return [
        [117, 396 * M - 875, 1056 * M + 2593, 660 * M - 3771, 132 * M + 2724, 132 * M - 775],
        [
            27,
            F(2117016, 1584) * M - 224,
            F(1724976, 1584) * M + 758,
            F(2273832, 1584) * M - 1199,
            1287 * M + 958,
            1188 * M - 287,
        ],
        [
            F(6133248, 3564) * M + 3,
            F(2317392, 3564) * M + 32,
            F(574992, 3564) * M - 65,
            F(4373424, 3564) * M + 78,
            F(12005136, 3564) * M - 11,
        ],
        [
            F(2587464, 4752) * M + 1,
            F(3606768, 4752) * M + 13,
            F(14662296, 4752) * M - 10,
            1023 * M + 38,
            4092 * M + 7,
        ],
        [
            F(419904, 8712) * M,
            F(9191232, 8712) * M + 6,
            F(41885424, 8712) * M + 20,
            F(31403376, 8712) * M + 26,
            F(68897952, 8712) * M + 37,
        ],
    ]


def _u7_printed() -> list[list]:
    return [
        [
            2460,
            648 * M - 24487,
            918 * M + 103732,
            1512 * M - 242426,
            1026 * M + 337790,
            432 * M - 280653,
            1512 * M + 128798,
            864 * M - 25181,
        ],
        [
            143,
            U7_Q_PRINTED_COEFF,
            7965,
            1728 * M - 21163,
            720 * M + 33401,
            216 * M - 31287,
            2088 * M + 16136,
            432 * M - 3525,
        ],
        [
            8,
            1664 * M - 107,
            F(1456, 3) * M + 662,
            F(944, 3) * M - 2064,
            F(11152, 3) * M + 3829,
            F(3776, 3) * M - 4148,
            F(3376, 3) * M + 2482,
            F(9296, 3) * M - 607,
        ],
        [
            1,
            648 * M - 15,
            1458 * M + 125,
            1404 * M - 419,
            4086 * M + 915,
            4212 * M - 1090,
            2016 * M + 758,
            1728 * M - 202,
        ],
        [
            F(531441, 512) * M + 2,
            F(460701, 512) * M + 26,
            F(312795, 128) * M - 82,
            F(1532709, 256) * M + 256,
            F(811161, 512) * M - 319,
            F(1590921, 512) * M + 267,
            F(1453005, 256) * M - 53,
        ],
        [
            F(32768, 729) * M,
            F(919552, 729) * M + 7,
            F(793744, 729) * M - 2,
            F(1154864, 243) * M + 45,
            F(1404608, 729) * M - 36,
            F(5584880, 729) * M + 82,
            F(4805968, 729) * M + 13,
        ],
        [
            8 * M,
            F(946, 3) * M + 1,
            F(33416, 3) * M + 50,
            F(26998, 3) * M + 49,
            F(13664, 3) * M + 4,
            F(31096, 3) * M + 69,
            F(33824, 3) * M + 44,
        ],
    ]


_NAMES = "pqrstuv"


def _claims(spec: FamilySpec, printed: list[list], sums, tag: str) -> tuple[ExpansionClaim, ...]:
    out = []
    for i, (desc, (mult, off)) in enumerate(zip(printed, sums)):
        coeffs = tuple(RatPoly.coerce(c) for c in reversed(desc))
        out.append(ExpansionClaim(
            spec, i, coeffs, claimed_sum_poly(spec, i, mult, off), f"{tag} base {_NAMES[i]}+2"
        ))
    return tuple(out)


def _build(forms, m_divisor, m_min, provenance, printed, sums, tag) -> FamilySpec:
    spec = FamilySpec(forms, m_divisor, m_min, provenance)
    return replace(spec, claims=_claims(spec, printed, sums, tag))


def u3() -> FamilySpec:
    return _build(U3_FORMS, 1, 8, "u3: (6m-1)(12m-1)(18m-1), m >= 8", _u3_printed(), U3_SUMS, "u3")


def u5() -> FamilySpec:
    return _build(U5_FORMS, 156816, 1, "u5: derived from 588455, 156816 | m",
                  _u5_printed(), U5_SUMS, "u5")


def u7() -> FamilySpec:
    return _build(U7_FORMS, 373248, 1, "u7: derived from 3512071871, 373248 | m",
                  _u7_printed(), U7_SUMS, "u7")


def u7_q_corrected_claim() -> ExpansionClaim:
    """The u7 base-(q+2) claim with its (q+2)^6 coefficient corrected."""
    spec = u7()
    printed = _u7_printed()
    printed[1][1] = U7_Q_CORRECTED_COEFF
    return _claims(spec, printed, U7_SUMS, "u7 corrected")[1]


BUILTINS = {"u3": u3, "u5": u5, "u7": u7}
