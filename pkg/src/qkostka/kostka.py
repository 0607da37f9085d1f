"""Production routes for unrestricted and level-restricted Kostka polynomials.

Three independent computations live here or nearby: the fermionic sum over
quasi-particle occupation vectors (this module), the signed theta-like sum
through unrestricted polynomials (this module, with the unrestricted input
taken either from level stabilization or from the tableau oracle), and the
graded Euler characteristic over shifted Weyl orbits (module weyl). Route
agreement across all of them is the central correctness argument.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Literal, Sequence

from . import charge as charge_oracle
from .compositions import (
    Composition,
    CompositionLike,
    as_composition,
    min_form,
    top_degree_h,
    weighted_size,
)
from .qexact import QPolynomial, vector_gaussian_binomial

Route = Literal["fermionic", "charge"]


class StabilizationError(AssertionError):
    """Internal error: level stabilization failed, the formula has a bug."""


def restriction_vector(l: int, k: int) -> tuple[int, ...]:
    """v_a = max(0, a - k + l) for a = 1..k."""
    return tuple(max(0, a - k + l) for a in range(1, k + 1))


def _occupation_vectors(total: int, width: int) -> Iterator[tuple[int, ...]]:
    """All s in Z_{>=0}^width with sum a*s_a equal to total."""

    def rec(a: int, left: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if a > width:
            if left == 0:
                yield tuple(prefix)
            return
        if a == width:
            if left % a == 0:
                yield tuple(prefix + [left // a])
            return
        for s in range(left // a + 1):
            yield from rec(a + 1, left - a * s, prefix + [s])

    if total < 0:
        return iter(())
    return rec(1, total, [])


def restricted_fermionic(l: int, m: CompositionLike, k: int) -> QPolynomial:
    """Level-k restricted Kostka polynomial by the fermionic sum.

    Sum over occupation vectors s with 2|s| = |m| - l of
    q**(sAs + v.s) * prod binom(A(m-2s) - v + s, s). Wrong parity gives the
    zero polynomial; a factor spin above the level makes the product vanish
    identically, so zero is returned for those without evaluating anything.
    """
    if k < 1:
        raise ValueError("level must be positive")
    if not 0 <= l <= k:
        raise ValueError("weight must satisfy 0 <= l <= k")
    comp = as_composition(m).trimmed()
    if comp.width > k:
        return QPolynomial.zero()
    comp = comp.padded(k)
    size = weighted_size(comp)
    if (size - l) % 2 or size < l:
        return QPolynomial.zero()
    v = restriction_vector(l, k)
    mparts = comp.parts
    out = QPolynomial.zero()
    for s in _occupation_vectors((size - l) // 2, k):
        tops = []
        ok = True
        for a in range(1, k + 1):
            t = sum(min(a, b) * (mparts[b - 1] - 2 * s[b - 1]) for b in range(1, k + 1))
            t += s[a - 1] - v[a - 1]
            if t < s[a - 1]:
                ok = False
                break
            tops.append(t)
        if not ok:
            continue
        exponent = min_form(s, s) + sum(va * sa for va, sa in zip(v, s))
        out = out + vector_gaussian_binomial(tops, s).shifted(exponent)
    return out


@lru_cache(maxsize=None)
def _unrestricted_cached(l: int, parts: tuple[int, ...]) -> QPolynomial:
    comp = Composition(parts)
    size = weighted_size(comp)
    k = max(size, l, comp.width, 1)
    value = restricted_fermionic(l, comp, k)
    check = restricted_fermionic(l, comp, k + 1)
    if value != check:
        raise StabilizationError(
            f"no stabilization at levels {k}, {k + 1} for l={l}, m={parts}"
        )
    return value


def unrestricted(l: int, m: CompositionLike) -> QPolynomial:
    """Unrestricted Kostka polynomial K_{l,m} via level stabilization.

    Evaluates the restricted sum at two consecutive large levels and insists
    on equality; that is cheaper to trust than an off-by-one-prone closed
    bound for where the limit is reached.
    """
    if l < 0:
        return QPolynomial.zero()
    return _unrestricted_cached(l, as_composition(m).trimmed().parts)


def _unrestricted_source(route: Route) -> Callable[[int, Composition], QPolynomial]:
    if route == "fermionic":
        return unrestricted
    if route == "charge":
        return charge_oracle.kostka_sl2_oracle
    raise ValueError(f"unknown unrestricted route {route!r}")


def alternating_sum_raw(
    l: int, m: CompositionLike, k: int, source: Route = "fermionic"
) -> QPolynomial:
    """The bare signed sum of unrestricted polynomials, without any level check.

    Sum over i >= 0 of q**((k+2)i^2 + (l+1)i) K_{2(k+2)i + l, m} minus the sum
    over i >= 1 of q**((k+2)i^2 - (l+1)i) K_{2(k+2)i - l - 2, m}. Both sums
    truncate themselves once the shifted weights pass |m|. This raw form
    represents the graded homology Euler characteristic only for compositions
    whose spins all fit below the level; restricted_alternating adds that
    admissibility check.
    """
    if k < 1:
        raise ValueError("level must be positive")
    if not 0 <= l <= k:
        raise ValueError("weight must satisfy 0 <= l <= k")
    comp = as_composition(m).trimmed()
    size = weighted_size(comp)
    kostka = _unrestricted_source(source)
    out = QPolynomial.zero()
    i = 0
    while True:
        w_plus = 2 * (k + 2) * i + l
        w_minus = 2 * (k + 2) * i - l - 2
        if i > 0 and w_plus > size and w_minus > size:
            break
        if w_plus <= size:
            term = kostka(w_plus, comp)
            out = out + term.shifted((k + 2) * i * i + (l + 1) * i)
        if i > 0 and w_minus <= size:
            term = kostka(w_minus, comp)
            out = out - term.shifted((k + 2) * i * i - (l + 1) * i)
        if i > 0 and w_minus > size:
            break
        i += 1
    return out


def restricted_alternating(
    l: int, m: CompositionLike, k: int, source: Route = "fermionic"
) -> QPolynomial:
    """Restricted Kostka polynomial through the signed unrestricted sum.

    A spin above the level kills the restricted module outright, so those
    compositions return zero directly; the signed sum itself is only a valid
    expression for the level-admissible ones.
    """
    comp = as_composition(m).trimmed()
    if comp.width > k:
        return QPolynomial.zero()
    return alternating_sum_raw(l, comp, k, source)


def reversed_restricted(l: int, m: CompositionLike, k: int) -> QPolynomial:
    """Degree reversal q**h(m) * K(1/q); exponents stay nonnegative."""
    comp = as_composition(m)
    poly = restricted_fermionic(l, comp, k)
    out = poly.substitute_inverse().shifted(top_degree_h(comp))
    if not out.is_zero() and out.min_exponent() < 0:
        raise StabilizationError("degree reversal produced a negative exponent")
    return out


@lru_cache(maxsize=None)
def _fusion_weight_cached(parts: tuple[int, ...], alpha: int) -> QPolynomial:
    comp = Composition(parts)
    size = weighted_size(comp)
    out = QPolynomial.zero()
    for l in range(abs(alpha), size + 1, 2):
        out = out + unrestricted(l, comp)
    return out


def fusion_weight_char(m: CompositionLike, alpha: int) -> QPolynomial:
    """Graded dimension of the weight-alpha slice of the fusion product.

    Telescopes the unrestricted polynomials: sum of K_{l,m} over l >= |alpha|
    with l = alpha (mod 2). Symmetric in alpha and -alpha, and zero once
    |alpha| exceeds |m|.
    """
    return _fusion_weight_cached(as_composition(m).trimmed().parts, abs(alpha))


def fusion_char_hook(N: int, j: int, l: int) -> QPolynomial:
    """Weight-l graded character of the hook family: N spin-1 factors, one spin j+1.

    A closed binomial form: sum_{s=0..j} binom(N+1, (N+j+1-l-2s)/2) minus
    sum_{s=0..j-1} binom(N, (N+j-1-l-2s)/2). Zero when l has the wrong
    parity relative to N+j+1.
    """
    if N < 0 or j < 0:
        raise ValueError("hook parameters must be nonnegative")
    if (N + j + 1 - l) % 2:
        return QPolynomial.zero()
    from .qexact import gaussian_binomial

    out = QPolynomial.zero()
    for s in range(j + 1):
        out = out + gaussian_binomial(N + 1, (N + j + 1 - l - 2 * s) // 2)
    for s in range(j):
        out = out - gaussian_binomial(N, (N + j - 1 - l - 2 * s) // 2)
    return out


def reversed_char_1N(n: int, i: int, s: int) -> QPolynomial:
    """Reversed weight-(2s+i) character of 2n+i spin-1 factors: q**(s(s+i)) binom(2n+i, n-s)."""
    if i not in (0, 1):
        raise ValueError("i selects a parity and must be 0 or 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    from .qexact import gaussian_binomial

    return gaussian_binomial(2 * n + i, n - s).shifted(s * (s + i))
