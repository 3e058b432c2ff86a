from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifford_workbench.algebra.exponential import clifford_exp, exp_series
from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus, mul
from clifford_workbench.errors import SeriesDivergenceError

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@given(angles)
def test_generator_exponential_is_a_rotation(theta):
    sig = AlgebraSignature(3)
    expected = Multivector.from_blades(sig, {0: math.cos(theta), 0b1: math.sin(theta)})
    assert modulus(clifford_exp(Multivector.generator(sig, 1, theta)) - expected) <= 1e-12


@given(angles)
def test_bivector_exponential_is_a_rotation(theta):
    sig = AlgebraSignature(2)
    expected = Multivector.from_blades(sig, {0: math.cos(theta), 0b11: math.sin(theta)})
    assert modulus(clifford_exp(Multivector.blade(sig, 0b11, theta)) - expected) <= 1e-12


@settings(max_examples=50)
@given(st.floats(min_value=-5.0, max_value=5.0))
def test_scalar_exponential(t):
    sig = AlgebraSignature(2)
    value = clifford_exp(Multivector.scalar(sig, t))
    assert abs(value.scalar_part() - math.exp(t)) <= 1e-13 * math.exp(t)
    assert value.grades_present() <= {0}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exponential_of_zero_is_one(n):
    sig = AlgebraSignature(n)
    assert modulus(clifford_exp(Multivector.zero(sig)) - 1.0) == 0.0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_commuting_sum_is_a_product(n, rng):
    sig = AlgebraSignature(n)
    for _ in range(5):
        a = Multivector(sig, rng.normal(scale=0.2, size=sig.dim))
        b = a * 0.7 + 0.3
        lhs = clifford_exp(a + b)
        rhs = mul(clifford_exp(a), clifford_exp(b))
        assert modulus(lhs - rhs) <= 1e-10 * modulus(lhs)


def test_disjoint_bivectors_commute():
    sig = AlgebraSignature(4)
    a = Multivector.blade(sig, 0b0011, 1.3)
    b = Multivector.blade(sig, 0b1100, -0.8)
    lhs = clifford_exp(a + b)
    assert modulus(lhs - mul(clifford_exp(a), clifford_exp(b))) <= 1e-12


def test_exponential_inverse(rng):
    sig = AlgebraSignature(3)
    a = Multivector(sig, rng.normal(scale=0.5, size=sig.dim))
    product = mul(clifford_exp(a), clifford_exp(-a))
    assert modulus(product - 1.0) <= 1e-10


def test_scaling_agrees_with_plain_series(rng):
    sig = AlgebraSignature(4)
    for _ in range(5):
        a = Multivector(sig, rng.normal(scale=0.1, size=sig.dim))
        assert modulus(clifford_exp(a) - exp_series(a)) <= 1e-13


def test_large_argument_is_squared_back():
    sig = AlgebraSignature(1)
    value = clifford_exp(Multivector.generator(sig, 1, 100.0))
    assert abs(value[0] - math.cos(100.0)) <= 1e-10
    assert abs(value[1] - math.sin(100.0)) <= 1e-10


def test_complex_exponential():
    sig = AlgebraSignature(1).complexified()
    value = clifford_exp(Multivector.generator(sig, 1, -1j * 0.5))
    assert value.signature.is_complex
    assert abs(value[0] - math.cosh(0.5)) <= 1e-14
    assert abs(value[1] + 1j * math.sinh(0.5)) <= 1e-14


def test_series_gives_up_after_max_terms():
    sig = AlgebraSignature(2)
    with pytest.raises(SeriesDivergenceError) as info:
        exp_series(Multivector.scalar(sig, 50.0), max_terms=5)
    assert info.value.last_term > 1.0


def test_non_finite_exponent():
    sig = AlgebraSignature(1)
    with pytest.raises(SeriesDivergenceError):
        clifford_exp(Multivector(sig, np.array([np.inf, 0.0])))


def test_exact_exponent_is_rejected():
    sig = AlgebraSignature(1)
    with pytest.raises(TypeError):
        clifford_exp(Multivector(sig, np.array([Fraction(1, 2), 0], dtype=object)))
