from fractions import Fraction

import pytest

from qkostka.qexact import QPolynomial
from qkostka.virasoro import (
    BranchingSeries,
    MinimalModel,
    branching_via_kostka_limit,
    conformal_weight,
    coset_central_charge,
    coset_prefactor_exponent,
    derived_linear_term,
    fermionic_character_sum,
    fermionic_term_limit,
    printed_linear_term,
    quadratic_form_matrix,
    rocha_caridi,
    series_mismatches,
    stabilization_order,
)


def window(bs: BranchingSeries) -> list[int]:
    return list(bs.coefficients())


def test_minimal_model_validation():
    MinimalModel(3, 4, 1, 1)
    with pytest.raises(ValueError):
        MinimalModel(2, 4, 1, 1)  # not coprime
    with pytest.raises(ValueError):
        MinimalModel(3, 4, 3, 1)  # r out of range
    with pytest.raises(ValueError):
        MinimalModel(3, 4, 1, 4)  # s out of range


def test_conformal_weights():
    assert conformal_weight(MinimalModel(3, 4, 1, 1)) == 0
    assert conformal_weight(MinimalModel(3, 4, 2, 2)) == Fraction(1, 16)
    assert conformal_weight(MinimalModel(3, 4, 1, 3)) == Fraction(1, 2)
    assert conformal_weight(MinimalModel(4, 5, 2, 2)) == Fraction(3, 80)
    assert conformal_weight(MinimalModel(4, 5, 2, 1)) == Fraction(7, 16)
    assert conformal_weight(MinimalModel(4, 5, 1, 2)) == Fraction(1, 10)


def test_central_charge():
    assert coset_central_charge(1) == Fraction(1, 2)
    assert coset_central_charge(2) == Fraction(7, 10)
    for k in range(1, 7):
        t = Fraction(k + 3, k + 2)
        assert coset_central_charge(k) == 13 - 6 * (t + 1 / t)


def test_rocha_caridi_ising():
    vac = rocha_caridi(MinimalModel(3, 4, 1, 1), 6)
    assert window(vac) == [1, 0, 1, 1, 2, 2, 3]
    assert vac.offset == 0
    eps = rocha_caridi(MinimalModel(3, 4, 1, 3), 6)
    assert window(eps) == [1, 1, 1, 1, 2, 2, 3]
    sigma = rocha_caridi(MinimalModel(3, 4, 2, 2), 6)
    assert window(sigma) == [1, 1, 1, 2, 2, 3, 4]


def test_rocha_caridi_trivial_model():
    # (2,3) vacuum: the theta difference is Euler's pentagonal series,
    # cancelling the partition generating function exactly
    triv = rocha_caridi(MinimalModel(2, 3, 1, 1), 15)
    assert window(triv) == [1] + [0] * 15


def test_rocha_caridi_label_symmetry():
    # chi_{r,s} = chi_{p-r, p'-s}
    a = rocha_caridi(MinimalModel(3, 4, 1, 2), 10)
    b = rocha_caridi(MinimalModel(3, 4, 2, 2), 10)
    assert window(a) == window(b)
    assert a.offset == b.offset


def test_series_mismatches():
    a = rocha_caridi(MinimalModel(3, 4, 1, 1), 6).series
    b = rocha_caridi(MinimalModel(3, 4, 1, 3), 6).series
    assert series_mismatches(a, a) == []
    bad = series_mismatches(a, b)
    assert bad  # differ already at the offset


def test_coset_prefactor_five_term_identity():
    # residual conformal weight of the branching: offset difference between
    # the coset constituents and the minimal-model primary
    for k in (1, 2, 3):
        for i in (0, 1):
            for j in range(k + 1):
                for l in range(k + 2):
                    if (i + j + l) % 2:
                        continue
                    delta = Fraction((l - j) ** 2 - i, 4)
                    mm_weight = conformal_weight(
                        MinimalModel(k + 2, k + 3, j + 1, l + 1)
                    )
                    prefactor = coset_prefactor_exponent(i, j, k, l)
                    assert mm_weight == prefactor + delta, (i, j, k, l)


def test_branching_limit_ising_vacuum():
    bs = branching_via_kostka_limit(0, 0, 1, 0, 6)
    assert window(bs) == [1, 0, 1, 1, 2, 2, 3]
    assert bs.stabilized_at is not None
    assert bs.route == "kostka-limit"


def test_branching_limit_matches_rocha():
    for (i, j, l) in [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]:
        k = 1
        bs = branching_via_kostka_limit(i, j, k, l, 8)
        mm = rocha_caridi(MinimalModel(k + 2, k + 3, j + 1, l + 1), 8)
        assert series_mismatches(bs.series, mm.series) == [], (i, j, l)


def test_branching_parity_zero():
    bs = branching_via_kostka_limit(1, 0, 1, 0, 5)
    assert all(c == 0 for c in window(bs))


def test_stabilization_order():
    assert stabilization_order(3, 2, 0) == 3 + 2 * 1
    assert stabilization_order(5, 0, 1) == 5


def test_quadratic_and_linear_data():
    assert quadratic_form_matrix(1) == [[2]]
    assert quadratic_form_matrix(2) == [[2, 3], [3, 6]]
    # the printed and the derived linear terms disagree for k=1, j=0, l=0
    assert derived_linear_term(0, 0, 1) == [0]
    assert printed_linear_term(0, 0, 1) == [2]
    # they coincide exactly on the l = j+1 line
    for k in (1, 2):
        for j in range(k + 1):
            for l in range(k + 2):
                agree = derived_linear_term(j, l, k) == printed_linear_term(j, l, k)
                assert agree == (l == j + 1), (j, l, k)


def test_fermionic_term_limit_frozen():
    data = fermionic_term_limit((1,), 0, 0, 1)
    assert data.exponent == 2
    assert data.tops == (1,)
    assert data.pochhammer_index == 2


def test_fermionic_character_ising():
    fc = fermionic_character_sum(0, 0, 1, 6)
    assert window(fc.derived) == [1, 0, 1, 1, 2, 2, 3]
    # the printed constants give a genuinely different series
    assert not fc.printed_minus_derived.is_zero()
    assert fc.printed_coefficients[0] == 1


def test_fermionic_character_matches_rocha():
    for (j, l) in [(0, 0), (1, 1), (0, 2), (1, 3), (1, 0), (2, 1)]:
        k = 2
        fc = fermionic_character_sum(j, l, k, 8)
        mm = rocha_caridi(MinimalModel(k + 2, k + 3, j + 1, l + 1), 8)
        assert series_mismatches(fc.derived.series, mm.series) == [], (j, l)
