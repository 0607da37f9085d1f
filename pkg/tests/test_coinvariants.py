import pytest

from qkostka.coinvariants import (
    FunctionalModelSpec,
    OracleScaleExceeded,
    build_constraint_matrix,
    restricted_kostka_oracle,
)
from qkostka.compositions import Composition, weighted_size
from qkostka.kostka import restricted_fermionic
from qkostka.qexact import QPolynomial


def spec(l, parts, k):
    return FunctionalModelSpec.from_parameters(l, Composition(parts), k)


def test_spec_validation():
    s = spec(0, (4,), 2)
    assert s.variable_count == 2
    with pytest.raises(ValueError):
        spec(1, (4,), 2)  # parity
    with pytest.raises(ValueError):
        spec(4, (2,), 2)  # l exceeds |m|


def test_variable_cap():
    with pytest.raises(OracleScaleExceeded):
        restricted_kostka_oracle(spec(0, (12,), 3), variable_cap=4)


def test_empty_system_is_constants():
    # zero variables: the model degenerates to the constants, even for l > k
    assert restricted_kostka_oracle(spec(2, (2,), 1)) == QPolynomial.one()
    assert restricted_kostka_oracle(spec(0, (), 1)) == QPolynomial.one()


def test_hand_sized_instances():
    assert restricted_kostka_oracle(spec(0, (2,), 1)) == QPolynomial.q_power(1)
    assert restricted_kostka_oracle(spec(1, (1, 1), 2)) == QPolynomial.q_power(1)
    assert restricted_kostka_oracle(spec(0, (2, 1), 2)) == QPolynomial.q_power(2)
    assert restricted_kostka_oracle(spec(0, (6,), 2)) == QPolynomial.from_integer_terms(
        {5: 1, 6: 1, 7: 1, 9: 1}
    )


def test_basis_and_constraints_shape():
    s = spec(0, (2,), 1)
    basis, rows = build_constraint_matrix(s, 0)
    assert len(basis) == 1  # the constant
    assert rows  # killed by evaluation at zero
    basis, rows = build_constraint_matrix(s, 1)
    assert len(basis) == 1  # z
    assert not [r for r in rows if any(r)]


def test_wide_compositions_vanish():
    # a factor wider than the level is killed by the equal-variables condition
    for parts, l, k in [((0, 1), 0, 1), ((0, 2), 0, 1), ((1, 0, 1), 0, 2)]:
        assert restricted_kostka_oracle(spec(l, parts, k)).is_zero()


def test_oracle_matches_fermionic_small():
    # s <= 3 keeps this fast; the acceptance gate runs the full grid
    for k in (1, 2):
        for parts in [(2,), (4,), (6,), (2, 1), (1, 1), (2, 2), (0, 2)]:
            size = weighted_size(parts)
            for l in range(size % 2, k + 1, 2):
                if (size - l) // 2 > 3:
                    continue
                got = restricted_kostka_oracle(spec(l, parts, k))
                want = restricted_fermionic(l, parts, k)
                assert got == want, (k, parts, l)
