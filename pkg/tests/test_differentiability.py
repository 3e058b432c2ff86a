from __future__ import annotations

import math

import numpy as np
import pytest

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.differentiability import fit_lambda_linear_form, sample_directions
from clifford_workbench.basis.monomials import MultiIndex
from clifford_workbench.basis.taylor import random_monogenic_series, single_term_series
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.errors import DegenerateSampleError, DomainError
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.mass.transform import from_monogenic
from clifford_workbench.operators.field import CliffordField

P = Point(0.1, (0.5, 0.3))


def test_directions_come_in_antipodal_pairs(rng):
    d = sample_directions(2, rng)
    half = d.shape[0] // 2
    assert d.shape[1] == 3
    assert np.allclose(d[:half], -d[half:])
    assert np.allclose(np.linalg.norm(d, axis=1), 1.0)


@pytest.mark.parametrize("mass", [MassTerm.zero(), MassTerm.right_scalar(0.5)])
@pytest.mark.parametrize("convention", list(SignConvention))
def test_members_leave_a_quadratic_remainder(mass, convention, rng):
    sig = AlgebraSignature(2)
    f = random_monogenic_series(sig, rng, max_order=2, mass=mass, convention=convention).as_field()
    _, order = fit_lambda_linear_form(f, P, mass, convention=convention, rng=rng)
    assert order >= 1.9


def test_clifford_mass_member(rng):
    sig = AlgebraSignature(2)
    mass = MassTerm.right_clifford(Multivector.generator(sig, 2, 0.4))
    f = random_monogenic_series(sig, rng, max_order=2, mass=mass).as_field()
    _, order = fit_lambda_linear_form(f, P, mass, rng=rng)
    assert order >= 1.9


@pytest.mark.parametrize("mass", [MassTerm.zero(), MassTerm.right_scalar(0.5)])
def test_non_members_leave_a_linear_remainder(mass, rng):
    sig = AlgebraSignature(2)
    y1_squared = CliffordField.polynomial({(0, 2, 0): Multivector.scalar(sig)}, label="y1^2")
    f = from_monogenic(y1_squared, mass)
    _, order = fit_lambda_linear_form(f, P, mass, rng=rng)
    assert order <= 1.2


def test_constant_fits_exactly(rng):
    f = CliffordField.constant(Multivector.scalar(AlgebraSignature(2), 3.0))
    form, order = fit_lambda_linear_form(f, P, rng=rng)
    assert math.isinf(order)
    assert max(modulus(a) for a in form.coefficients) <= 1e-12


def test_linear_monomial_recovers_its_coefficient(rng):
    sig = AlgebraSignature(2)
    f = single_term_series(MultiIndex.unit(2, 1)).as_field()
    form, order = fit_lambda_linear_form(f, P, rng=rng)
    assert math.isinf(order)
    assert modulus(form.coefficients[0] - 1.0) <= 1e-10
    assert modulus(form.coefficients[1]) <= 1e-10
    delta = Point(0.01, (0.02, -0.01))
    assert modulus(form(delta) - (f(P + delta) - f(P))) <= 1e-12
    assert form.n == 2
    assert form.coefficients[0].signature == sig


def test_fit_does_not_depend_on_the_sample(rng):
    sig = AlgebraSignature(2)
    mass = MassTerm.right_scalar(0.5)
    f = random_monogenic_series(sig, rng, max_order=2, mass=mass).as_field()
    first, _ = fit_lambda_linear_form(f, P, mass, directions=sample_directions(2, rng))
    second, _ = fit_lambda_linear_form(f, P, mass, directions=sample_directions(2, rng))
    for a, b in zip(first.coefficients, second.coefficients):
        assert modulus(a - b) <= 1e-6


def test_fit_arguments_are_checked():
    f = CliffordField.constant(Multivector.scalar(AlgebraSignature(2)))
    with pytest.raises(DomainError):
        fit_lambda_linear_form(f, P, radius=0.0)
    with pytest.raises(DomainError):
        fit_lambda_linear_form(f, Point.origin(3))
    with pytest.raises(DomainError):
        fit_lambda_linear_form(f, P, directions=np.ones((4, 2)))


def test_collinear_samples_are_degenerate():
    f = single_term_series(MultiIndex.unit(2, 1)).as_field()
    with pytest.raises(DegenerateSampleError):
        fit_lambda_linear_form(f, P, directions=np.array([[1.0, 0.0, 0.0]]))
