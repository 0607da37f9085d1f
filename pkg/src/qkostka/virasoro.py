"""Minimal-model characters three ways.

Rocha-Caridi theta quotients give the reference series. The coset branching
route reaches the same series as a stabilized limit of reversed restricted
Kostka polynomials. The fermionic route reaches it as a quasi-particle sum
whose terms are N->infinity limits of single reversed-fermionic-formula
terms. The published closed form for the linear part of the fermionic
exponent fails at the smallest instance, so the derived exponent is
authoritative here and the published one is evaluated alongside as an
audit, with the difference reported as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .compositions import Composition
from .kostka import reversed_restricted
from .qexact import (
    QPolynomial,
    QSeriesTruncated,
    bounded_partition_series,
    partition_series,
    vector_gaussian_binomial,
)


@dataclass(frozen=True)
class MinimalModel:
    p: int
    p_prime: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 2 or self.p_prime < 2 or gcd(self.p, self.p_prime) != 1:
            raise ValueError("model labels must be coprime and at least 2")
        if not (1 <= self.r <= self.p - 1 and 1 <= self.s <= self.p_prime - 1):
            raise ValueError("field labels out of range")


@dataclass(frozen=True)
class BranchingSeries:
    series: QSeriesTruncated
    route: str
    stabilized_at: int | None = None

    @property
    def offset(self) -> Fraction:
        return self.series.offset

    def coefficients(self) -> list[int]:
        return [self.series.coefficient(n) for n in range(self.series.order + 1)]


class StabilizationCapExceeded(RuntimeError):
    pass


def conformal_weight(mm: MinimalModel) -> Fraction:
    """Lowest grade of the (r,s) field: ((p'r - ps)^2 - (p'-p)^2) / (4pp')."""
    num = (mm.p_prime * mm.r - mm.p * mm.s) ** 2 - (mm.p_prime - mm.p) ** 2
    return Fraction(num, 4 * mm.p * mm.p_prime)


def coset_central_charge(k: int) -> Fraction:
    """Central charge of the level-(1,k) coset: (k^2+5k)/((k+2)(k+3))."""
    if k < 1:
        raise ValueError("level must be positive")
    return Fraction(k * k + 5 * k, (k + 2) * (k + 3))


def _theta_coefficients(mm: MinimalModel, order: int) -> list[int]:
    """Coefficients of the numerator theta sum, exponents 0..order."""
    p, pp, r, s = mm.p, mm.p_prime, mm.r, mm.s
    coeffs = [0] * (order + 1)

    def add(exponent: int, sign: int) -> bool:
        if 0 <= exponent <= order:
            coeffs[exponent] += sign
            return True
        return False

    n = 0
    while True:
        hit = False
        for nn in ({0} if n == 0 else {n, -n}):
            e1 = p * pp * nn * nn + (pp * r - p * s) * nn
            e2 = p * pp * nn * nn + (pp * r + p * s) * nn + r * s
            hit |= add(e1, +1)
            hit |= add(e2, -1)
        # the quadratic term dominates, so once a full |n| shell misses
        # the window every later shell does too
        if not hit and n > 0:
            return coeffs
        n += 1


def rocha_caridi(mm: MinimalModel, order: int) -> BranchingSeries:
    """Truncated minimal-model character: q^Delta * theta sum / (q)_infinity."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    theta = _theta_coefficients(mm, order)
    parts = partition_series(order)
    coeffs = [
        sum(theta[e] * parts.coefficient(d - e) for e in range(d + 1))
        for d in range(order + 1)
    ]
    series = QSeriesTruncated(coeffs, offset=conformal_weight(mm))
    return BranchingSeries(series, route="rocha-caridi")


def series_mismatches(
    a: QSeriesTruncated, b: QSeriesTruncated
) -> list[tuple[Fraction, int, int]]:
    """Coefficient disagreements of two series over their common window.

    Compares absolute exponents from the lower of the two offsets up to the
    lower of the two truncation edges; a grid point outside one series'
    window but above its edge is not comparable and is not reported.
    """
    lo = min(a.offset, b.offset)
    hi = min(a.hi_exponent(), b.hi_exponent())
    grid: set[Fraction] = set()
    for s in (a, b):
        e = s.offset
        while e <= hi:
            if e >= lo:
                grid.add(e)
            e += 1
    out = []
    for e in sorted(grid):
        ca = a.coefficient_at(e)
        cb = b.coefficient_at(e)
        ca = 0 if ca is None and e < a.offset else ca
        cb = 0 if cb is None and e < b.offset else cb
        if ca is None or cb is None:
            continue
        if ca != cb:
            out.append((e, ca, cb))
    return out


def coset_prefactor_exponent(i: int, j: int, k: int, l: int) -> Fraction:
    """Grade offset carried by the branching space inside the coset."""
    return (
        Fraction(i * (i + 2), 12)
        + Fraction(j * (j + 2), 4 * (k + 2))
        - Fraction(l * (l + 2), 4 * (k + 3))
    )


def _limit_composition(n: int, i: int, j: int) -> Composition:
    """Multiplicity vector of 2n+i-1 spin-1 factors and one spin-(j+1) factor."""
    count = 2 * n + i - 1
    if count < 0:
        raise ValueError("factor count must be nonnegative")
    parts = [0] * (j + 1)
    parts[0] = count
    parts[j] += 1
    return Composition(parts)


def branching_via_kostka_limit(
    i: int, j: int, k: int, l: int, order: int, n_cap: int | None = None
) -> BranchingSeries:
    """Branching function as a stabilized limit of reversed restricted Kostka data.

    Computes the degree reversal of K^(k+1) on 2n+i-1 spin-1 factors plus one
    spin-(j+1) factor for growing n until the coefficient window through
    `order` agrees at two consecutive n, then attaches the coset grade
    offset. Odd i+j+l means the branching space is absent; the zero series
    is returned.
    """
    if i not in (0, 1):
        raise ValueError("i selects a parity and must be 0 or 1")
    if not (0 <= j <= k and 0 <= l <= k + 1):
        raise ValueError("labels out of range")
    if order < 0:
        raise ValueError("order must be nonnegative")
    offset = coset_prefactor_exponent(i, j, k, l)
    if (i + j + l) % 2:
        return BranchingSeries(
            QSeriesTruncated([0] * (order + 1), offset), route="kostka-limit"
        )
    if n_cap is None:
        n_cap = order + j + 4
    n = max(1 - i, (l - i - j + 3) // 2, 1)
    prev: list[int] | None = None
    while n <= n_cap:
        poly = reversed_restricted(l, _limit_composition(n, i, j), k + 1)
        window = [poly.coefficient(d) for d in range(order + 1)]
        if window == prev:
            series = QSeriesTruncated(window, offset)
            return BranchingSeries(series, route="kostka-limit", stabilized_at=n - 1)
        prev = window
        n += 1
    raise StabilizationCapExceeded(
        f"no agreement through order {order} for n up to {n_cap}"
    )


def stabilization_order(n: int, s: int, i: int) -> int:
    """Guaranteed-agreement order n + s(s+i-1) used to pre-size adaptive loops."""
    return n + s * (s + i - 1)


@dataclass(frozen=True)
class LimitTermData:
    """One quasi-particle term of the limiting fermionic character.

    t indexes occupation numbers of the species 2..k+1; exponent is the
    N-independent limit exponent of the reversed term (on the quarter grid);
    tops are the surviving binomial numerators; pochhammer_index d gives the
    1/(q)_d factor, with d < 0 meaning the term vanishes.
    """

    t: tuple[int, ...]
    exponent: Fraction
    tops: tuple[int, ...]
    pochhammer_index: int

    def binomial_product(self) -> QPolynomial:
        return vector_gaussian_binomial(self.tops, self.t)


def _reversed_term_data(
    t: tuple[int, ...], j: int, l: int, k: int, N: int
) -> tuple[Fraction, tuple[int, ...], int]:
    """Exponent/tops/pochhammer index of one reversed term at finite N."""
    level = k + 1
    m = [0] * level
    m[0] = N + (1 if j == 0 else 0)
    if j >= 1:
        m[j] += 1
    weighted = sum(a * ma for a, ma in enumerate(m, start=1))
    assert (weighted - l) % 2 == 0, "inadmissible N parity"
    s = [0] * level
    s[0] = (weighted - l) // 2 - sum(b * tb for b, tb in zip(range(2, level + 1), t))
    for b, tb in zip(range(2, level + 1), t):
        s[b - 1] = tb
    x = [Fraction(ma, 2) - sa for ma, sa in zip(m, s)]
    exponent = sum(
        min(a, b) * x[a - 1] * x[b - 1]
        for a in range(1, level + 1)
        for b in range(1, level + 1)
    )
    tops = []
    for a in range(1, level + 1):
        v = max(0, a - level + l)
        top = sum(min(a, b) * (m[b - 1] - 2 * s[b - 1]) for b in range(1, level + 1))
        tops.append(top - v + s[a - 1])
    d = tops[0] - s[0]
    return Fraction(exponent), tuple(tops[1:]), d


def fermionic_term_limit(
    t: tuple[int, ...] | list[int], j: int, l: int, k: int
) -> LimitTermData:
    """N->infinity limit of one reversed fermionic term, checked at two N.

    The occupation numbers of species 2..k+1 are frozen at t while the
    species-1 number grows with N; exponent, binomial tops and the
    pochhammer index all become N-independent, which is asserted by
    evaluating the finite-N term at two admissible N.
    """
    tvec = tuple(t)
    if len(tvec) != k or any(x < 0 for x in tvec):
        raise ValueError("t must be a nonnegative vector of width k")
    if not (0 <= j <= k and 0 <= l <= k + 1):
        raise ValueError("labels out of range")
    n0 = 2 * sum(b * tb for b, tb in zip(range(2, k + 2), tvec))
    n0 += abs(l - j) + j + 3
    if (n0 + j + 1 - l) % 2:
        n0 += 1
    first = _reversed_term_data(tvec, j, l, k, n0)
    second = _reversed_term_data(tvec, j, l, k, n0 + 2)
    if first != second:
        raise AssertionError(
            f"term data depends on N at t={tvec}, j={j}, l={l}, k={k}"
        )
    exponent, tops, d = first
    return LimitTermData(tvec, exponent, tops, d)


def quadratic_form_matrix(k: int) -> list[list[int]]:
    """B on species 2..k+1: B_ab = max(a,b)(min(a,b)-1)."""
    return [
        [max(a, b) * (min(a, b) - 1) for b in range(2, k + 2)]
        for a in range(2, k + 2)
    ]


def derived_linear_term(j: int, l: int, k: int) -> list[int]:
    """Linear exponent coefficients obtained from the term-wise limit."""
    return [(l - j) * (a - 1) + 1 - min(a, j + 1) for a in range(2, k + 2)]


def printed_linear_term(j: int, l: int, k: int) -> list[int]:
    """Published closed form for the linear exponent coefficients (audit only)."""
    return [(j + 1 - l) * (a - 1) + max(0, a - j - 1) for a in range(2, k + 2)]


def _coordinate_ranges(B: list[list[int]], u: list[int], order: int) -> list[int]:
    """Per-coordinate caps X_a so any t with some t_a > X_a has exponent > order.

    Cross terms of B are nonnegative, so the exponent is bounded below by
    the sum of the decoupled one-variable quadratics; each coordinate only
    needs to range while its own quadratic can stay under order minus the
    other coordinates' minima.
    """

    def g(a: int, x: int) -> int:
        return B[a][a] * x * x + u[a] * x

    mins = []
    for a in range(len(u)):
        best = 0
        x = 0
        while True:
            best = min(best, g(a, x))
            if g(a, x) > best and B[a][a] * x >= abs(u[a]):
                break
            x += 1
        mins.append(best)
    total_min = sum(mins)
    caps = []
    for a in range(len(u)):
        budget = order - (total_min - mins[a])
        cap = 0
        x = 0
        while True:
            if g(a, x) <= budget:
                cap = x
            if g(a, x) > budget and B[a][a] * x >= abs(u[a]):
                break
            x += 1
        caps.append(cap)
    return caps


def _enumerate_exponents(
    j: int, l: int, k: int, order: int, u: list[int]
) -> list[tuple[tuple[int, ...], int, LimitTermData]]:
    """All t with quadratic+linear exponent <= order, with their term data."""
    B = quadratic_form_matrix(k)
    caps = _coordinate_ranges(B, u, order)

    def expo(t: tuple[int, ...]) -> int:
        quad = sum(
            B[a][b] * t[a] * t[b] for a in range(k) for b in range(k)
        )
        return quad + sum(ua * ta for ua, ta in zip(u, t))

    out = []
    def rec(prefix: list[int], a: int) -> None:
        if a == k:
            t = tuple(prefix)
            n = expo(t)
            if n <= order:
                out.append((t, n, fermionic_term_limit(t, j, l, k)))
            return
        for x in range(caps[a] + 1):
            rec(prefix + [x], a + 1)

    rec([], 0)
    return out


@dataclass(frozen=True)
class FermionicCharacter:
    derived: BranchingSeries
    printed_minus_derived: QPolynomial
    printed_coefficients: dict[int, int]


def fermionic_character_sum(j: int, l: int, k: int, order: int) -> FermionicCharacter:
    """Quasi-particle character sum in both exponent conventions.

    The derived route uses the exponent taken directly from the term-wise
    limit (and cross-checks it against the quadratic form B with the derived
    linear term). The printed-constant route swaps in the published linear
    term; its deviation from the derived route is returned as a polynomial
    in relative exponents, possibly with negative powers, and is never an
    error.
    """
    if not (0 <= j <= k and 0 <= l <= k + 1):
        raise ValueError("labels out of range")
    if order < 0:
        raise ValueError("order must be nonnegative")
    delta = conformal_weight(MinimalModel(k + 2, k + 3, j + 1, l + 1))
    c0 = Fraction((l - j) ** 2 + j, 4)
    u_derived = derived_linear_term(j, l, k)
    u_printed = printed_linear_term(j, l, k)

    derived_acc = [0] * (order + 1)
    for t, n, data in _enumerate_exponents(j, l, k, order, u_derived):
        shift = data.exponent - c0
        assert shift == n, "limit exponent disagrees with its closed form"
        if data.pochhammer_index < 0:
            continue
        binprod = data.binomial_product()
        if binprod.is_zero():
            continue
        assert n >= 0, "contributing term with negative relative exponent"
        tail = bounded_partition_series(data.pochhammer_index, order - n)
        for e, c in binprod.terms():
            base = n + e // 4
            for dd in range(order - base + 1):
                derived_acc[base + dd] += c * tail.coefficient(dd)

    printed_acc: dict[int, int] = {}
    for t, n, data in _enumerate_exponents(j, l, k, order, u_printed):
        if data.pochhammer_index < 0:
            continue
        binprod = data.binomial_product()
        if binprod.is_zero():
            continue
        tail = bounded_partition_series(data.pochhammer_index, order - max(n, 0))
        for e, c in binprod.terms():
            base = n + e // 4
            for dd in range(tail.order + 1):
                if base + dd <= order:
                    printed_acc[base + dd] = printed_acc.get(base + dd, 0) + c * tail.coefficient(dd)

    assert all(c >= 0 for c in derived_acc), "character coefficients must be nonnegative"
    derived = BranchingSeries(
        QSeriesTruncated(derived_acc, offset=delta), route="fermionic-derived"
    )
    diff_terms: dict[int, int] = {}
    for e in range(min([0] + list(printed_acc)), order + 1):
        d = printed_acc.get(e, 0) - (derived_acc[e] if 0 <= e <= order else 0)
        if d:
            diff_terms[4 * e] = d
    residual = QPolynomial(diff_terms)
    printed_clean = {e: c for e, c in sorted(printed_acc.items()) if c}
    return FermionicCharacter(derived, residual, printed_clean)
