"""Frozen reference values used as golden cross-checks.

Tables of the generalized Eulerian numbers, the closed-form generating
functions for small drop counts, their series expansions, and the generic
below-diagonal configuration counts.  Everything here has been re-derived
with the independent oracles in the test suite (exhaustive enumeration and
the row DP) before being frozen.

One transcription defect is tracked explicitly: the closed form published
for (drops=3, cap=2) carries a misprinted x^7 numerator coefficient (-4676).
That value contradicts both the accompanying series expansion and direct
enumeration, which agree with -4674; fitting numerator = denominator * series
reproduces the transcribed numerator in every other coefficient, and the
product check stays exact through x^16.  Both forms are kept below: the
verbatim transcription and the corrected one actually used for validation.
"""

from __future__ import annotations

from .algebra import Polynomial, RationalFunction

# drop-count tables, rows indexed by board size n starting at 1
EULERIAN_TABLES: dict[int, list[list[int]]] = {
    1: [
        [1],
        [1, 1],
        [1, 4, 1],
        [1, 11, 11, 1],
        [1, 26, 66, 26, 1],
        [1, 57, 302, 302, 57, 1],
        [1, 120, 1191, 2416, 1191, 120, 1],
    ],
    2: [
        [1],
        [1, 1, 1],
        [1, 4, 11, 4, 1],
        [1, 11, 72, 114, 72, 11, 1],
        [1, 26, 367, 1492, 2438, 1492, 367, 26, 1],
    ],
    3: [
        [1],
        [1, 1, 1, 1],
        [1, 4, 11, 23, 11, 4, 1],
        [1, 11, 72, 325, 595, 595, 325, 72, 11, 1],
    ],
}

# number of generic below-diagonal configurations, by drops k and capacity c
GENERIC_COUNTS: dict[int, dict[int, int]] = {
    1: {1: 1},
    2: {1: 4, 2: 7},
    3: {1: 26, 2: 68, 3: 75},
    4: {1: 236, 2: 940, 3: 1090, 4: 1105},
    5: {1: 2752, 2: 16645, 3: 20360, 4: 20790, 5: 20821},
    # stretch row, not exercised by the default test run
    6: {1: 39208, 2: 360081, 3: 464111, 4: 477242, 5: 478376, 6: 478439},
}


def _poly(*coeffs: int) -> Polynomial:
    return Polynomial(coeffs)


def _den(*factors: tuple[tuple[int, ...], int]) -> Polynomial:
    acc = _poly(1)
    for coeffs, power in factors:
        acc = acc * _poly(*coeffs) ** power
    return acc


# closed-form generating functions of n -> <n, k>_c for fixed small k
GF_CLOSED_FORMS: dict[tuple[int, int], RationalFunction] = {
    (2, 2): RationalFunction(
        _poly(0, 0, 1, -1, -1, -3, 5),
        _den(((1, -1), 3), ((1, -2), 2), ((1, -5, 5), 1)),
    ),
    # corrected form, see module docstring (x^7 coefficient -4674)
    (3, 2): RationalFunction(
        _poly(0, 0, 0, 4, 2, -300, 1748, -4674, 7058, -6648, 4397, -2206, 625),
        _den(((1, -1), 4), ((1, -2), 3), ((1, -5, 5), 2), ((1, -8, 13), 1)),
    ),
    (3, 3): RationalFunction(
        _poly(0, 0, 1, -7, 39, -336, 1844, -5545, 9697, -10404, 7532, -4558, 2435, -700),
        _den(((1, -1), 4), ((1, -2), 3), ((1, -5, 5), 2), ((1, -10, 27, -20), 1)),
    ),
}

# the (3, 2) closed form exactly as transcribed, kept for the defect tests
GF_3_2_AS_TRANSCRIBED = RationalFunction(
    _poly(0, 0, 0, 4, 2, -300, 1748, -4676, 7058, -6648, 4397, -2206, 625),
    _den(((1, -1), 4), ((1, -2), 3), ((1, -5, 5), 2), ((1, -8, 13), 1)),
)

# series expansions as printed alongside the closed forms (index = n)
GF_SERIES: dict[tuple[int, int], list[int]] = {
    (2, 2): [0, 0, 1, 11, 72, 367, 1630, 6680, 26082],
    (3, 2): [0, 0, 0, 4, 114, 1492, 13992, 109538, 769632],
    (3, 3): [0, 0, 1, 23, 325, 3368, 28819, 218788],
}
