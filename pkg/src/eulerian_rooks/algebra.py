"""Exact univariate polynomial, rational-function and polynomial-matrix arithmetic.

Everything is integer-exact: coefficients are Python ints (arbitrary
precision), rational functions are kept in a canonical reduced form, and
matrix inverses are formed symbolically from adjugate and determinant.
No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class Polynomial:
    """Dense polynomial in one variable with integer coefficients.

    ``coeffs[i]`` holds the coefficient of x**i.  Trailing zeros are stripped
    on construction, so the zero polynomial has an empty tuple and, by
    convention, degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        """Coefficient of x**i (0 beyond the stored degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> Polynomial:
        return _as_poly(other) + (-self)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> Polynomial:
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self.coeffs)

    # -- integer-exact division helpers --------------------------------

    def content(self) -> int:
        """Non-negative gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> Polynomial:
        """self divided by its content; keeps the sign of the leading term."""
        c = self.content()
        if c <= 1:
            return self
        return Polynomial(k // c for k in self.coeffs)

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        """Exact quotient self / divisor over the integers.

        Raises ValueError unless divisor divides self with an integer-
        coefficient quotient and zero remainder.
        """
        if divisor.is_zero():
            raise ValueError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dn = len(dc)
        qdeg = len(rem) - dn
        if qdeg < 0:
            raise ValueError("not exactly divisible (degree too small)")
        quot = [0] * (qdeg + 1)
        lead = dc[-1]
        for i in range(qdeg, -1, -1):
            q, r = divmod(rem[i + dn - 1], lead)
            if r:
                raise ValueError("not exactly divisible (non-integer quotient)")
            quot[i] = q
            if q:
                for j, d in enumerate(dc):
                    rem[i + j] -= q * d
        if any(rem):
            raise ValueError("not exactly divisible (nonzero remainder)")
        return Polynomial(quot)

    # -- comparison / hashing / misc -----------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_poly(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_text(self)


def _as_poly(v: Polynomial | int) -> Polynomial:
    return v if isinstance(v, Polynomial) else Polynomial([v])


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def poly_text(p: Polynomial) -> str:
    """Canonical text rendering: ascending powers, explicit signs.

    Examples: ``0``, ``1 - 2*x``, ``x^2 - x^3 - 3*x^5``.
    """
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _pseudo_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    """Pseudo-remainder of a by b: remainder of lc(b)^(da-db+1) * a divided by b."""
    da, db = a.degree, b.degree
    lead = b.leading_coefficient
    rem = [c * lead ** (da - db + 1) for c in a.coeffs]
    dc = b.coeffs
    for i in range(da - db, -1, -1):
        q = rem[i + db] // dc[-1]
        if q:
            for j, d in enumerate(dc):
                rem[i + j] -= q * d
    return Polynomial(rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Z[x], primitive, in a fixed sign.

    The sign convention makes the lowest-degree nonzero coefficient positive
    (so the gcd of 1-x^2 and 1-x is 1-x, not x-1), matching how every stored
    denominator factor is written.  Uses the primitive-remainder Euclidean
    algorithm, so intermediate coefficients stay integral.  Raises ValueError
    when both inputs are zero.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero():
        if a.degree < b.degree:
            a, b = b, a
            continue
        r = _pseudo_rem(a, b).primitive_part()
        a, b = b, r
    for c in a.coeffs:
        if c:
            if c < 0:
                a = -a
            break
    return a


class RationalFunction:
    """Quotient of integer polynomials, regular at x = 0, in reduced form.

    Canonical form: numerator and denominator share no nonconstant factor and
    no common integer content, and the denominator's constant term is
    positive.  That makes structural equality agree with mathematical
    equality, so ``==`` is exact.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial | int, denominator: Polynomial | int = ONE):
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if den.is_zero():
            raise ValueError("zero denominator")
        if den.constant_term == 0:
            raise ValueError("denominator vanishes at x = 0")
        if num.is_zero():
            den = ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = math.gcd(num.content(), den.content())
            if c > 1:
                num = Polynomial(k // c for k in num.coeffs)
                den = Polynomial(k // c for k in den.coeffs)
        if den.constant_term < 0:
            num = -num
            den = -den
        self.numerator = num
        self.denominator = den

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: RationalFunction | Polynomial | int) -> RationalFunction:
        other = _as_ratfun(other)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: RationalFunction | Polynomial | int) -> RationalFunction:
        return self + (-_as_ratfun(other))

    def __rsub__(self, other: Polynomial | int) -> RationalFunction:
        return _as_ratfun(other) + (-self)

    def __mul__(self, other: RationalFunction | Polynomial | int) -> RationalFunction:
        other = _as_ratfun(other)
        return RationalFunction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Polynomial | int) -> RationalFunction:
        other = _as_ratfun(other)
        if other.numerator.constant_term == 0:
            raise ValueError("quotient would not be regular at x = 0")
        return RationalFunction(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    # -- series expansion ----------------------------------------------

    def series(self, order: int) -> list[int]:
        """First ``order + 1`` Taylor coefficients at x = 0, exactly.

        Solved from the linear recurrence the denominator imposes on the
        coefficient sequence.  Raises ValueError if any coefficient is not an
        integer (cannot happen when the denominator's constant term is 1,
        which holds for every generating function produced here).
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        num = self.numerator.coeffs
        den = self.denominator.coeffs
        q0 = den[0]
        if q0 == 1:
            out: list[int] = []
            for n in range(order + 1):
                acc = num[n] if n < len(num) else 0
                for j in range(1, min(n, len(den) - 1) + 1):
                    acc -= den[j] * out[n - j]
                out.append(acc)
            return out
        frac: list[Fraction] = []
        for n in range(order + 1):
            acc = Fraction(num[n] if n < len(num) else 0)
            for j in range(1, min(n, len(den) - 1) + 1):
                acc -= den[j] * frac[n - j]
            frac.append(acc / q0)
        if any(f.denominator != 1 for f in frac):
            raise ValueError("series has non-integer coefficients")
        return [int(f) for f in frac]

    # -- comparison / rendering -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Polynomial)):
            other = _as_ratfun(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical rendering, e.g. ``(x^2 - x^3) / (1 - 2*x)``."""
        if self.denominator == ONE:
            return f"({poly_text(self.numerator)})"
        return f"({poly_text(self.numerator)}) / ({poly_text(self.denominator)})"

    def to_coeff_dict(self) -> dict[str, list[int]]:
        """Structured form for machine comparison and golden files."""
        return {
            "numerator": list(self.numerator.coeffs),
            "denominator": list(self.denominator.coeffs),
        }


def _as_ratfun(v: RationalFunction | Polynomial | int) -> RationalFunction:
    return v if isinstance(v, RationalFunction) else RationalFunction(_as_poly(v))


RATFUN_ZERO = RationalFunction(ZERO)
RATFUN_ONE = RationalFunction(ONE)


def ratfun_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Cross-multiplied equality: num(a)*den(b) == num(b)*den(a).

    Deliberately avoids assuming either side is in lowest terms, so that
    comparisons against transcribed closed forms cannot be fooled by a
    non-reduced rendition.
    """
    return a.numerator * b.denominator == b.numerator * a.denominator


# ---------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class PolyMatrix:
    """Row-major matrix of Polynomial entries."""

    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial | int]]) -> PolyMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[Polynomial] = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            flat.extend(_as_poly(v) for v in row)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[Polynomial]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __mul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        flat = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for t in range(self.cols):
                    acc = acc + self.entry(i, t) * other.entry(t, j)
                flat.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(flat))

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return PolyMatrix(self.rows, self.cols,
                          tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scaled(self, factor: Polynomial | int) -> PolyMatrix:
        f = _as_poly(factor)
        return PolyMatrix(self.rows, self.cols, tuple(e * f for e in self.entries))

    def _minor(self, i: int, j: int) -> PolyMatrix:
        flat = [self.entry(r, c)
                for r in range(self.rows) if r != i
                for c in range(self.cols) if c != j]
        return PolyMatrix(self.rows - 1, self.cols - 1, tuple(flat))

    def determinant(self) -> Polynomial:
        """Cofactor expansion along the first row.

        Exponential in the dimension, which is fine: the matrices here are
        indexed by integer partitions of a small excess and never get large.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        if n == 1:
            return self.entries[0]
        if n == 2:
            a, b, c, d = self.entries
            return a * d - b * c
        acc = ZERO
        for j in range(n):
            e = self.entry(0, j)
            if e.is_zero():
                continue
            term = e * self._minor(0, j).determinant()
            acc = acc + (term if j % 2 == 0 else -term)
        return acc

    def adjugate(self) -> PolyMatrix:
        """Transpose of the cofactor matrix; satisfies A * adj(A) = det(A) * I."""
        if self.rows != self.cols:
            raise ValueError("adjugate of a non-square matrix")
        n = self.rows
        if n == 0:
            return self
        if n == 1:
            return PolyMatrix(1, 1, (ONE,))
        flat = []
        for i in range(n):
            for j in range(n):
                cof = self._minor(j, i).determinant()
                flat.append(cof if (i + j) % 2 == 0 else -cof)
        return PolyMatrix(n, n, tuple(flat))


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major matrix of RationalFunction entries."""

    rows: int
    cols: int
    entries: tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(RATFUN_ONE if i == j else RATFUN_ZERO
                               for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.entries[i * self.cols + j]

    def __mul__(self, other: RationalMatrix | PolyMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        get = other.entry
        flat = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = RATFUN_ZERO
                for t in range(self.cols):
                    acc = acc + self.entry(i, t) * get(t, j)
                flat.append(acc)
        return RationalMatrix(self.rows, other.cols, tuple(flat))


def geometric_sum(m: PolyMatrix) -> tuple[RationalMatrix, Polynomial]:
    """Sum the matrix geometric series I + xM + (xM)^2 + ... = (I - xM)^(-1).

    ``m`` must be square with constant (integer) entries.  Returns the inverse
    as a matrix of rational functions together with det(I - xM), whose
    constant term is always 1, so the inverse exists over the rational-
    function field and every entry is regular at x = 0.
    """
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    if any(e.degree > 0 for e in m.entries):
        raise ValueError("matrix entries must be constants")
    n = m.rows
    a = PolyMatrix.identity(n) - m.scaled(X)
    det = a.determinant()
    adj = a.adjugate()
    inv = RationalMatrix(n, n, tuple(RationalFunction(e, det) for e in adj.entries))
    return inv, det
