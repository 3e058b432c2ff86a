from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.monomials import (
    MultiIndex,
    hyperplane_monomial,
    multinomial_consistency,
    restrict_to_hyperplane,
    symmetric_power,
    symmetric_product,
    zeta,
)
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.errors import DomainError, SignatureMismatchError, SizeLimitError

coordinate = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


def _exact(sig: AlgebraSignature, values) -> Multivector:
    return Multivector(sig, np.array([Fraction(v) for v in values], dtype=object))


def test_multi_index_arithmetic():
    beta = MultiIndex((2, 1))
    assert beta.order == 3
    assert beta.n == 2
    assert beta.factorial() == 2
    assert beta.multinomial() == 3
    assert beta.label == "(2,1)"


def test_multi_index_validation():
    with pytest.raises(ValueError):
        MultiIndex(())
    with pytest.raises(ValueError):
        MultiIndex((1, -1))


def test_all_up_to_counts_and_order():
    found = MultiIndex.all_up_to(2, 2)
    assert len(found) == 6
    assert found[0] == MultiIndex.zero(2)
    assert [b.order for b in found] == sorted(b.order for b in found)
    assert len(MultiIndex.all_up_to(3, 3)) == 20


@pytest.mark.parametrize("convention, s", [(SignConvention.LEDGER, -1), (SignConvention.PRINTED, 1)])
def test_zeta_follows_the_convention(convention, s):
    p = Point(y0=0.5, spatial=(2.0, 3.0))
    z = zeta(2, p, convention=convention)
    assert list(z.coeffs) == [s * 3.0, 0.0, 0.5, 0.0]


def test_zeta_index_range():
    p = Point.origin(2)
    with pytest.raises(DomainError):
        zeta(3, p)
    with pytest.raises(SignatureMismatchError):
        zeta(1, p, AlgebraSignature(3))


def test_symmetric_product_of_two_factors(rng):
    sig = AlgebraSignature(2)
    a = Multivector(sig, rng.normal(size=4))
    b = Multivector(sig, rng.normal(size=4))
    expected = (mul(a, b) + mul(b, a)) / 2.0
    assert modulus(symmetric_product([a, b]) - expected) <= 1e-14


def test_symmetric_product_is_order_independent_exactly():
    sig = AlgebraSignature(3)
    factors = [
        _exact(sig, [1, Fraction(1, 2), 0, 3, -1, 0, 2, 0]),
        _exact(sig, [0, 1, Fraction(-2, 3), 0, 0, 1, 0, 0]),
        _exact(sig, [2, 0, 0, 0, Fraction(1, 5), 0, 0, 1]),
    ]
    reference = symmetric_product(factors)
    for order in ([2, 0, 1], [1, 2, 0], [0, 2, 1]):
        shuffled = symmetric_product([factors[i] for i in order])
        assert list(shuffled.coeffs) == list(reference.coeffs)


def test_repeated_factor_is_a_power(rng):
    sig = AlgebraSignature(2)
    a = Multivector(sig, rng.normal(size=4))
    assert modulus(symmetric_product([a, a, a]) - a.power(3)) <= 1e-13


def test_symmetric_product_limits(sig2):
    with pytest.raises(ValueError):
        symmetric_product([])
    with pytest.raises(SizeLimitError):
        symmetric_product([Multivector.scalar(sig2)] * 9)


def test_order_zero_power_is_one():
    assert modulus(symmetric_power(Point.origin(2), MultiIndex.zero(2)) - 1.0) == 0.0


@settings(max_examples=30)
@given(st.lists(coordinate, min_size=3, max_size=3))
def test_unit_power_is_zeta(coords):
    p = Point.from_coords(coords)
    for j in (1, 2):
        assert modulus(symmetric_power(p, MultiIndex.unit(2, j)) - zeta(j, p)) == 0.0


@settings(max_examples=30)
@given(st.lists(coordinate, min_size=2, max_size=2))
def test_power_collapses_to_a_scalar_on_the_hyperplane(spatial):
    p = Point(y0=0.0, spatial=tuple(spatial))
    for beta in MultiIndex.all_up_to(2, 3):
        v = symmetric_power(p, beta)
        assert modulus(v - v.grade(0)) <= 1e-15
        assert abs(v.scalar_part() - hyperplane_monomial(beta, spatial)) <= 1e-14


def test_restriction_of_an_expansion(rng):
    sig = AlgebraSignature(2)
    expansion = {beta: Multivector(sig, rng.normal(size=4)) for beta in MultiIndex.all_up_to(2, 2)}
    spatial = (0.3, -0.4)
    expected = None
    for beta, coeff in expansion.items():
        term = coeff * hyperplane_monomial(beta, spatial)
        expected = term if expected is None else expected + term
    assert modulus(restrict_to_hyperplane(expansion, spatial) - expected) <= 1e-13
    with pytest.raises(ValueError):
        restrict_to_hyperplane({}, spatial)


@pytest.mark.parametrize("beta", [(1, 0), (1, 1), (2, 1), (0, 3), (2, 2)])
def test_power_is_the_multinomial_coefficient(beta):
    p = Point(y0=0.3, spatial=(-0.2, 0.7))
    assert multinomial_consistency(p, MultiIndex(beta)) <= 1e-12


def test_power_limits():
    with pytest.raises(SizeLimitError):
        symmetric_power(Point.origin(1), MultiIndex((9,)))
    with pytest.raises(SignatureMismatchError):
        symmetric_power(Point.origin(2), MultiIndex((1, 0, 0)))
