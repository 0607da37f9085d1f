"""Exact arithmetic for sparse Laurent polynomials and truncated series in q.

Exponents live on a fixed quarter-integer grid: each exponent is stored as an
integer numerator over the implicit denominator 4. That grid is the smallest
one carrying every quarter power the character formulas produce; rational
offsets with other denominators (conformal weights) are kept separately on
truncated series, never folded into the grid. Coefficients are Python ints
throughout, so nothing is floated and nothing overflows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

EXPONENT_DENOMINATOR = 4

ExponentLike = Union[int, Fraction]


def exponent_numerator(exponent: ExponentLike) -> int:
    """Coerce an int or Fraction exponent to its quarter-grid numerator."""
    if isinstance(exponent, int):
        return EXPONENT_DENOMINATOR * exponent
    f = Fraction(exponent)
    num = f.numerator * EXPONENT_DENOMINATOR
    if num % f.denominator:
        raise ValueError(f"exponent {exponent} does not lie on the 1/4 grid")
    return num // f.denominator


class QPolynomial:
    """Sparse exact Laurent polynomial in q on the quarter-integer grid.

    Immutable once built; zero coefficients are never stored. Internally the
    terms map quarter-grid numerators to integer coefficients, so q**(5/4) is
    held as numerator 5 and q**2 as numerator 8.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        data = {}
        if terms:
            for num, coeff in terms.items():
                if coeff:
                    data[num] = coeff
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exponent: ExponentLike, coeff: int = 1) -> "QPolynomial":
        return cls({exponent_numerator(exponent): coeff})

    @classmethod
    def from_integer_terms(cls, terms: Mapping[int, int]) -> "QPolynomial":
        """Build from {integer exponent: coefficient}."""
        return cls({EXPONENT_DENOMINATOR * e: c for e, c in terms.items()})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> list[tuple[int, int]]:
        """Sorted (numerator, coefficient) pairs."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: ExponentLike) -> int:
        return self._terms.get(exponent_numerator(exponent), 0)

    def min_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no minimum exponent")
        return Fraction(min(self._terms), EXPONENT_DENOMINATOR)

    def max_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no maximum exponent")
        return Fraction(max(self._terms), EXPONENT_DENOMINATOR)

    def is_integer_grid(self) -> bool:
        return all(num % EXPONENT_DENOMINATOR == 0 for num in self._terms)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def integer_coefficients(self, order: int) -> list[int]:
        """Coefficients of q^0 .. q^order.

        Requires an integer-grid polynomial with no negative exponents; terms
        above the order are simply not reported.
        """
        out = [0] * (order + 1)
        for num, coeff in self._terms.items():
            if num % EXPONENT_DENOMINATOR:
                raise ValueError("polynomial has non-integer exponents")
            if num < 0:
                raise ValueError("polynomial has negative exponents")
            e = num // EXPONENT_DENOMINATOR
            if e <= order:
                out[e] = coeff
        return out

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        data = dict(self._terms)
        for num, coeff in other._terms.items():
            new = data.get(num, 0) + coeff
            if new:
                data[num] = new
            else:
                data.pop(num, None)
        out = QPolynomial.__new__(QPolynomial)
        out._terms = data
        return out

    def __neg__(self) -> "QPolynomial":
        out = QPolynomial.__new__(QPolynomial)
        out._terms = {num: -coeff for num, coeff in self._terms.items()}
        return out

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            if other == 0:
                return QPolynomial.zero()
            out = QPolynomial.__new__(QPolynomial)
            out._terms = {num: coeff * other for num, coeff in self._terms.items()}
            return out
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if len(self._terms) > len(other._terms):
            long, short = self._terms, other._terms
        else:
            long, short = other._terms, self._terms
        data: dict[int, int] = {}
        for num2, c2 in short.items():
            for num1, c1 in long.items():
                key = num1 + num2
                new = data.get(key, 0) + c1 * c2
                if new:
                    data[key] = new
                else:
                    del data[key]
        out = QPolynomial.__new__(QPolynomial)
        out._terms = data
        return out

    __rmul__ = __mul__

    def shifted(self, exponent: ExponentLike) -> "QPolynomial":
        """Multiply by q**exponent."""
        delta = exponent_numerator(exponent)
        out = QPolynomial.__new__(QPolynomial)
        out._terms = {num + delta: coeff for num, coeff in self._terms.items()}
        return out

    def substitute_inverse(self) -> "QPolynomial":
        """Return p(1/q): every exponent negated, exactly."""
        out = QPolynomial.__new__(QPolynomial)
        out._terms = {-num: coeff for num, coeff in self._terms.items()}
        return out

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical encoding: {"den": 4, "terms": [[num, "coeff"], ...]}.

        Terms are sorted by exponent; coefficients are decimal strings so
        arbitrary-precision values survive any JSON reader.
        """
        return {
            "den": EXPONENT_DENOMINATOR,
            "terms": [[num, str(coeff)] for num, coeff in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "QPolynomial":
        if obj.get("den") != EXPONENT_DENOMINATOR:
            raise ValueError("unsupported exponent denominator")
        return cls({int(num): int(coeff) for num, coeff in obj["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for num, coeff in self.terms():
            if num == 0:
                body = str(abs(coeff))
            else:
                if num == EXPONENT_DENOMINATOR:
                    var = "q"
                elif num % EXPONENT_DENOMINATOR == 0:
                    var = f"q^{num // EXPONENT_DENOMINATOR}"
                else:
                    var = f"q^({num}/{EXPONENT_DENOMINATOR})"
                head = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
                body = head + var
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"QPolynomial({self!s})"


def substitute_inverse(p: QPolynomial) -> QPolynomial:
    """Return p(1/q) with all exponents negated."""
    return p.substitute_inverse()


_ONE = QPolynomial.one()
_ZERO = QPolynomial.zero()


def finite_pochhammer(n: int) -> QPolynomial:
    """(q)_n = prod_{a=1..n} (1 - q^a); the empty product for n = 0.

    Negative n is permitted as a signal value: callers dividing by (q)_n
    treat the reciprocal as 0 when n < 0, so here the product itself is
    returned only for n >= 0 and 1 is returned for negative n to keep the
    function total. Division helpers must check the sign themselves.
    """
    if n <= 0:
        return _ONE
    out = _ONE
    for a in range(1, n + 1):
        out = out * QPolynomial({0: 1, EXPONENT_DENOMINATOR * a: -1})
    return out


_gaussian_cache: dict[tuple[int, int], QPolynomial] = {}


def gaussian_binomial(m: int, n: int) -> QPolynomial:
    """The Gaussian binomial [m choose n]_q, exactly.

    Out-of-range arguments (n < 0, n > m, m < 0) give the zero polynomial;
    the theta-style sums rely on that convention to truncate themselves.
    """
    if n < 0 or m < 0 or n > m:
        return _ZERO
    n = min(n, m - n)
    if n == 0:
        return _ONE
    key = (m, n)
    hit = _gaussian_cache.get(key)
    if hit is not None:
        return hit
    # Pascal-style recurrence; builds on smaller m values already cached.
    value = gaussian_binomial(m - 1, n - 1) + gaussian_binomial(m - 1, n).shifted(n)
    _gaussian_cache[key] = value
    return value


def vector_gaussian_binomial(a: Sequence[int], b: Sequence[int]) -> QPolynomial:
    """Componentwise product of Gaussian binomials; zero if any factor is."""
    if len(a) != len(b):
        raise ValueError("vector length mismatch")
    out = _ONE
    for m, n in zip(a, b):
        factor = gaussian_binomial(m, n)
        if factor.is_zero():
            return _ZERO
        out = out * factor
    return out


class QSeriesTruncated:
    """Truncated q-series: q**offset * (c_0 + c_1 q + ... + c_order q**order).

    The offset is an exact rational and may fall off the quarter grid; the
    tail always steps by integer powers. Operations never claim coefficients
    beyond the stated order.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Sequence[int], offset: Fraction | int = 0):
        if len(coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        self.offset = Fraction(offset)
        self.coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def hi_exponent(self) -> Fraction:
        """Largest absolute exponent whose coefficient is known."""
        return self.offset + self.order

    def coefficient(self, n: int) -> int:
        """Coefficient of q**(offset + n)."""
        if n < 0 or n > self.order:
            raise IndexError("coefficient beyond the truncation order")
        return self.coeffs[n]

    def coefficient_at(self, exponent: Fraction) -> int | None:
        """Coefficient at an absolute exponent; None when outside the known window."""
        rel = Fraction(exponent) - self.offset
        if rel < 0 or rel > self.order:
            return None
        if rel.denominator != 1:
            return 0
        return self.coeffs[int(rel)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeriesTruncated):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __mul__(self, other: "QSeriesTruncated") -> "QSeriesTruncated":
        if not isinstance(other, QSeriesTruncated):
            return NotImplemented
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, ci in enumerate(self.coeffs[: order + 1]):
            if ci == 0:
                continue
            for j in range(0, order + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return QSeriesTruncated(out, self.offset + other.offset)

    def times_polynomial(self, p: QPolynomial) -> "QSeriesTruncated":
        """Multiply by an exact integer-grid polynomial; order is preserved."""
        if p.is_zero():
            return QSeriesTruncated([0] * (self.order + 1), self.offset)
        if not p.is_integer_grid():
            raise ValueError("series multiplication needs an integer-grid polynomial")
        low = p.min_exponent()
        out = [0] * (self.order + 1)
        for num, coeff in p.terms():
            shift = num // EXPONENT_DENOMINATOR - int(low)
            for n in range(0, self.order + 1 - shift):
                c = self.coeffs[n]
                if c:
                    out[n + shift] += coeff * c
        return QSeriesTruncated(out, self.offset + low)

    def __str__(self) -> str:
        return f"q^({self.offset}) * {list(self.coeffs)}"

    def __repr__(self) -> str:
        return f"QSeriesTruncated(offset={self.offset}, coeffs={list(self.coeffs)})"


def partition_series(order: int) -> QSeriesTruncated:
    """Truncation of 1/(q)_infinity: coefficient of q^n counts partitions of n."""
    return bounded_partition_series(order, order)


def bounded_partition_series(max_part: int, order: int) -> QSeriesTruncated:
    """Truncation of 1/(q)_max_part: partitions with parts of size <= max_part.

    A negative max_part stands for an empty reciprocal: terms whose
    quasi-particle count went negative contribute nothing, so the zero
    series is returned.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if max_part < 0:
        return QSeriesTruncated([0] * (order + 1))
    counts = [1] + [0] * order
    for part in range(1, min(max_part, order) + 1):
        for n in range(part, order + 1):
            counts[n] += counts[n - part]
    return QSeriesTruncated(counts)
