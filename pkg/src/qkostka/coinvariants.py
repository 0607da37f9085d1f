"""Functional-model oracle for restricted Kostka coefficients.

A restricted Kostka polynomial is realized as the Hilbert series of a space
of symmetric polynomials in s = (|m| - l)/2 variables cut out by vanishing
and diagonal-degree conditions. Everything here is exact integer linear
algebra: the conditions are linear in the coefficients on the monomial
symmetric basis, they preserve total degree, and the graded nullity is the
coefficient list we are after. This route shares no code with the fermionic
sum or the charge statistic, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .compositions import Composition, CompositionLike, as_composition, weighted_size
from .qexact import QPolynomial

DEFAULT_VARIABLE_CAP = 4


class OracleScaleExceeded(RuntimeError):
    """The instance needs more variables than the configured cap allows."""


@dataclass(frozen=True)
class FunctionalModelSpec:
    variable_count: int
    level: int
    weight: int
    composition: Composition

    def __post_init__(self):
        size = weighted_size(self.composition)
        if size < self.weight or (size - self.weight) % 2:
            raise ValueError("weight must not exceed |m| and must match its parity")
        if self.variable_count != (size - self.weight) // 2:
            raise ValueError("variable count must equal (|m| - l)/2")

    @classmethod
    def from_parameters(
        cls, l: int, m: CompositionLike, k: int
    ) -> "FunctionalModelSpec":
        comp = as_composition(m).trimmed()
        size = weighted_size(comp)
        if size < l or (size - l) % 2:
            raise ValueError("weight must not exceed |m| and must match its parity")
        return cls((size - l) // 2, k, l, comp)


def _partitions_of(d: int, parts: int, max_part: int) -> list[tuple[int, ...]]:
    """Partitions of d into at most `parts` parts, each at most max_part, padded."""
    out: list[tuple[int, ...]] = []

    def rec(left: int, slots: int, cap: int, prefix: list[int]) -> None:
        if left == 0:
            out.append(tuple(prefix + [0] * slots))
            return
        if slots == 0 or cap == 0 or left > slots * cap:
            return
        for first in range(min(left, cap), 0, -1):
            rec(left - first, slots - 1, first, prefix + [first])

    rec(d, parts, max_part, [])
    return out


def _orbit(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct exponent vectors of the monomial symmetric polynomial m_lam."""
    return sorted(set(permutations(lam)))


def _diagonal_rows(
    expansions: list[list[tuple[int, ...]]], a: int, keep
) -> list[dict[int, int]]:
    """Rows forcing selected coefficients of f(z,..,z,z_{a+1},..,z_s) to zero.

    The first a variables are collided to a single z. Each surviving
    monomial is keyed by (z-degree, sorted tail exponents); `keep` selects
    which z-degrees are constrained to vanish.
    """
    rows: dict[tuple, dict[int, int]] = {}
    for col, orbit in enumerate(expansions):
        for e in orbit:
            zdeg = sum(e[:a])
            if not keep(zdeg):
                continue
            key = (zdeg, tuple(sorted(e[a:])))
            row = rows.setdefault(key, {})
            row[col] = row.get(col, 0) + 1
    return [rows[key] for key in sorted(rows)]


def _zero_substitution_rows(
    expansions: list[list[tuple[int, ...]]]
) -> list[dict[int, int]]:
    """Rows forcing f(0, z_2, .., z_s) to vanish identically."""
    rows: dict[tuple, dict[int, int]] = {}
    for col, orbit in enumerate(expansions):
        for e in orbit:
            if e[0] != 0:
                continue
            key = tuple(sorted(e[1:]))
            row = rows.setdefault(key, {})
            row[col] = row.get(col, 0) + 1
    return [rows[key] for key in sorted(rows)]


def _integer_rank(rows: list[dict[int, int]], ncols: int) -> int:
    """Rank over the rationals via fraction-free elimination on integer rows."""
    from math import gcd

    dense = [[row.get(c, 0) for c in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(dense)):
            if dense[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        pv = dense[rank][col]
        for r in range(rank + 1, len(dense)):
            f = dense[r][col]
            if not f:
                continue
            new = [pv * x - f * y for x, y in zip(dense[r], dense[rank])]
            g = 0
            for x in new:
                g = gcd(g, x)
            if g > 1:
                new = [x // g for x in new]
            dense[r] = new
        rank += 1
        if rank == len(dense):
            break
    return rank


def build_constraint_matrix(
    spec: FunctionalModelSpec, degree: int
) -> tuple[list[tuple[int, ...]], list[dict[int, int]]]:
    """Basis partitions and constraint rows for one total-degree slice.

    Basis: monomial symmetric polynomials indexed by partitions of `degree`
    into at most s parts, each below the factor count of m. Conditions, all
    degree-preserving:
      (2) vanishing when k+1 variables collide          (s >= k+1)
      (3) for a = 2..s, collided degree in z at most sum_i min(a,i)m_i - a
      (4) vanishing at z_1 = 0
      (5) order >= k-l+2 in z when k-l+1 variables collide  (s >= k-l+1)
    """
    s = spec.variable_count
    k = spec.level
    l = spec.weight
    m = spec.composition
    factor_count = sum(m.parts)
    basis = _partitions_of(degree, s, factor_count - 1) if factor_count else (
        [tuple([0] * s)] if degree == 0 else []
    )
    if s == 0:
        return basis, []
    expansions = [_orbit(lam) for lam in basis]
    rows: list[dict[int, int]] = []
    if s >= k + 1:
        rows.extend(_diagonal_rows(expansions, k + 1, lambda zd: True))
    for a in range(2, s + 1):
        bound = sum(min(a, i) * mi for i, mi in enumerate(m.parts, start=1)) - a
        rows.extend(_diagonal_rows(expansions, a, lambda zd, b=bound: zd > b))
    rows.extend(_zero_substitution_rows(expansions))
    order = k - l + 2
    if s >= k - l + 1 and k - l + 1 >= 1:
        rows.extend(_diagonal_rows(expansions, k - l + 1, lambda zd: zd < order))
    return basis, rows


def restricted_kostka_oracle(
    spec: FunctionalModelSpec, variable_cap: int = DEFAULT_VARIABLE_CAP
) -> QPolynomial:
    """Hilbert series of the constrained space, as a polynomial in q.

    The orientation (this series versus its degree reversal) was calibrated
    once on the smallest nontrivial instance against the fermionic route and
    is asserted on every larger case by the test suite: the series matches
    restricted_fermionic directly, with no reversal.
    """
    s = spec.variable_count
    if s > variable_cap:
        raise OracleScaleExceeded(
            f"instance needs {s} variables, cap is {variable_cap}"
        )
    factor_count = sum(spec.composition.parts)
    top = s * max(factor_count - 1, 0)
    terms: dict[int, int] = {}
    for d in range(top + 1):
        basis, rows = build_constraint_matrix(spec, d)
        if not basis:
            continue
        nullity = len(basis) - _integer_rank(rows, len(basis))
        if nullity:
            terms[d] = nullity
    return QPolynomial.from_integer_terms(terms)
