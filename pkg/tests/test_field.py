from __future__ import annotations

import pytest

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus
from clifford_workbench.algebra.point import Point
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.operators.field import CliffordField, FieldClass

SIG = AlgebraSignature(2)
E0 = Multivector.scalar(SIG)
E1 = Multivector.generator(SIG, 1)


def test_polynomial_evaluation():
    f = CliffordField.polynomial({(1, 0, 0): E0, (0, 2, 0): E1 * 2.0})
    value = f(Point(0.5, (3.0, 7.0)))
    assert list(value.coeffs) == [0.5, 18.0, 0.0, 0.0]
    assert f.declared_class is FieldClass.ARBITRARY


def test_polynomial_validation():
    with pytest.raises(ValueError):
        CliffordField.polynomial({})
    with pytest.raises(SignatureMismatchError):
        CliffordField.polynomial({(1, 0): E0})


def test_point_dimension_is_checked():
    f = CliffordField.constant(E0)
    with pytest.raises(SignatureMismatchError):
        f(Point.origin(3))


def test_constant_is_declared_monogenic():
    f = CliffordField.constant(E1, label="e1")
    assert f.declared_class is FieldClass.MONOGENIC
    assert f.label == "e1"
    assert f(Point(1.0, (2.0, 3.0))) is E1


def test_sum_keeps_a_shared_declaration():
    mass = MassTerm.right_scalar(0.5)
    a = CliffordField.constant(E0).declared(FieldClass.M_SOLUTION, mass)
    b = CliffordField.constant(E1).declared(FieldClass.M_SOLUTION, mass)
    total = a + b
    assert total.declared_class is FieldClass.M_SOLUTION
    assert total.mass == mass
    assert modulus(total(Point.origin(2)) - (E0 + E1)) == 0.0

    mixed = a + CliffordField.constant(E1)
    assert mixed.declared_class is FieldClass.ARBITRARY
    assert mixed.mass.is_zero


def test_right_multiplication():
    f = CliffordField.constant(E1).right_multiplied(Multivector.generator(SIG, 2))
    assert list(f(Point.origin(2)).coeffs) == [0.0, 0.0, 0.0, 1.0]
    assert f.relabel("e12").label == "e12"
