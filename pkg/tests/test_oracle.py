"""Brute-force symmetric-function checks of the closed-form ingredients."""

import itertools

import pytest

from torus_super.algebra import LaurentPolynomial
from torus_super.oracle import (
    QT,
    RationalFunction,
    macdonald_P,
    macdonald_P_mbasis,
    monomial_symmetric,
    power_sum,
    principal_value,
    verify_cauchy,
    verify_dimension,
    verify_expansion_limit,
    verify_orthogonality,
    verify_power_sum_expansion,
    verify_schur_degeneration,
    x_alphabet,
    z_factor,
)
from torus_super.partitions import enumerate_partitions


def qt(terms):
    return LaurentPolynomial(QT, terms)


RF_ONE = RationalFunction.const(1)


def test_z_factor_values():
    assert z_factor((1,)) == 1
    assert z_factor((2,)) == 2
    assert z_factor((1, 1)) == 2
    assert z_factor((2, 1)) == 2
    assert z_factor((3,)) == 3
    assert z_factor((1, 1, 1)) == 6


def test_power_sum_is_single_row_monomial_basis():
    xs = x_alphabet(3)
    assert power_sum(xs, 2) == monomial_symmetric(xs, (2,))
    assert monomial_symmetric(xs, (1, 1)).term_count == 3


def test_single_box_is_monomial_basis_element():
    assert macdonald_P_mbasis((1,)) == {(1,): RF_ONE}


def test_column_of_two_has_no_lower_terms():
    assert macdonald_P_mbasis((1, 1)) == {(1, 1): RF_ONE}


def test_row_of_two_mixing_coefficient():
    expansion = macdonald_P_mbasis((2,))
    assert set(expansion) == {(2,), (1, 1)}
    assert expansion[(2,)] == RF_ONE
    # (1 + q)(1 - t) / (1 - qt)
    expected = RationalFunction(
        qt({(0, 0): 1, (1, 0): 1, (0, 1): -1, (1, 1): -1}),
        qt({(0, 0): 1, (1, 1): -1}),
    )
    assert expansion[(1, 1)] == expected


def test_expanded_polynomials_are_symmetric():
    for y in [(2,), (2, 1), (2, 2)]:
        nx = 3
        concrete = macdonald_P(y, nx)
        for exps, coeff in concrete.items():
            for perm in itertools.permutations(exps):
                assert concrete[perm] == coeff


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orthogonality(n):
    assert verify_orthogonality(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_power_sum_expansion_matches_closed_form(n):
    assert verify_power_sum_expansion(n)


def test_principal_value_single_box():
    # m_[1](1, t, t^2) = 1 + t + t^2
    assert principal_value((1,), 3) == RationalFunction(qt({(0, 0): 1, (0, 1): 1, (0, 2): 1}))


@pytest.mark.parametrize("num_vars", [3, 4, 5])
def test_dimension_closed_form(num_vars):
    for n in range(1, 5):
        for y in enumerate_partitions(n):
            assert verify_dimension(y, num_vars)


def test_expansion_limit_identity():
    for n in range(1, 5):
        for y in enumerate_partitions(n):
            assert verify_expansion_limit(y)


def test_schur_degeneration():
    for n in range(1, 4):
        for y in enumerate_partitions(n):
            assert verify_schur_degeneration(y)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_cauchy_kernel(order):
    assert verify_cauchy(order, order, order)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_cauchy_kernel_principal_specialization(order):
    assert verify_cauchy(order, order, 0, principal_l=5)


def test_cauchy_kernel_capped():
    with pytest.raises(ValueError):
        verify_cauchy(4, 4, 4)
