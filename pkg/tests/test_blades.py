from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifford_workbench.algebra.blades import (
    blade_label,
    blade_product,
    blade_product_bruteforce,
    conjugation_signs,
    generator_mask,
    grade_of,
    product_tables,
)


@st.composite
def blade_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    a = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    b = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    return n, a, b


@given(blade_pairs())
def test_product_matches_bruteforce(pair):
    n, a, b = pair
    assert blade_product(a, b, n) == blade_product_bruteforce(a, b, n)


@given(blade_pairs())
def test_product_mask_is_symmetric_difference(pair):
    n, a, b = pair
    sign, mask = blade_product(a, b, n)
    assert sign in (-1, 1)
    assert mask == a ^ b


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_generators_square_to_minus_one(n):
    for j in range(1, n + 1):
        assert blade_product(generator_mask(j), generator_mask(j), n) == (-1, 0)


def test_distinct_generators_anticommute():
    e1, e2 = generator_mask(1), generator_mask(2)
    assert blade_product(e1, e2, 2) == (1, 0b11)
    assert blade_product(e2, e1, 2) == (-1, 0b11)


def test_bivector_squares_to_minus_one():
    assert blade_product(0b11, 0b11, 2) == (-1, 0)


def test_mask_out_of_range():
    with pytest.raises(ValueError):
        blade_product(4, 1, 2)


def test_product_tables_are_read_only():
    index, sign = product_tables(3)
    assert index.shape == sign.shape == (8, 8)
    with pytest.raises(ValueError):
        sign[0, 0] = 0


def test_product_tables_reproduce_blade_products():
    n = 3
    index, sign = product_tables(n)
    for i in range(1 << n):
        for k in range(1 << n):
            assert index[i, k] == i ^ k
            assert sign[i, k] == blade_product(i, i ^ k, n)[0]


def test_conjugation_signs_by_grade():
    signs = conjugation_signs(3)
    expected = {0: 1, 1: -1, 2: -1, 3: 1}
    for mask in range(8):
        assert signs[mask] == expected[grade_of(mask)]
    assert np.all(conjugation_signs(1) == np.array([1, -1]))


def test_blade_labels():
    assert blade_label(0) == "e0"
    assert blade_label(0b1) == "e1"
    assert blade_label(0b101) == "e13"
    assert blade_label(0b111111) == "e123456"
