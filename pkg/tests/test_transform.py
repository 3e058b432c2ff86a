from __future__ import annotations

import itertools

import pytest

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.taylor import random_monogenic_series
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.mass.transform import (
    TransformSpec,
    from_monogenic,
    group_law_residual,
    intertwine,
    to_monogenic,
)
from clifford_workbench.operators.field import CliffordField, FieldClass
from clifford_workbench.operators.stencil import StencilSpec, residual_norm

SIG = AlgebraSignature(2)
POINTS = [Point(0.1, (0.2, -0.3)), Point(-0.25, (0.05, 0.4)), Point(0.4, (-0.1, 0.0))]
ST = StencilSpec(1e-3)

MASSES = [
    MassTerm.zero(),
    MassTerm.right_scalar(0.5),
    MassTerm.right_scalar(-0.5),
    MassTerm.right_clifford(Multivector.generator(SIG, 1, 0.3)),
]


def _solution(mass: MassTerm, rng, convention=SignConvention.LEDGER) -> CliffordField:
    return random_monogenic_series(SIG, rng, max_order=2, mass=mass, convention=convention).as_field()


@pytest.mark.parametrize("convention", list(SignConvention))
@pytest.mark.parametrize("source, target", list(itertools.product(MASSES, repeat=2)))
def test_intertwine_carries_solutions(source, target, convention, rng):
    f = _solution(source, rng, convention)
    g = intertwine(f, TransformSpec(source, target), convention)
    assert g.mass == target
    assert residual_norm(g, target, POINTS, ST, convention, extrapolate=True) <= 1e-6


@pytest.mark.parametrize("source, target", list(itertools.product(MASSES, repeat=2)))
def test_round_trip(source, target, rng):
    f = _solution(source, rng)
    spec = TransformSpec(source, target)
    back = intertwine(intertwine(f, spec), spec.reversed())
    for p in POINTS:
        assert modulus(back(p) - f(p)) <= 1e-12


def test_group_law(rng):
    f = _solution(MASSES[1], rng)
    for a, b, c in itertools.product(MASSES, repeat=3):
        assert group_law_residual(f, a, b, c, POINTS) <= 1e-12


def test_noncommuting_masses():
    source = MassTerm.right_clifford(Multivector.generator(SIG, 1, 0.3))
    target = MassTerm.right_clifford(Multivector.generator(SIG, 2, 0.2))
    assert not source.commutes_with(target)
    f = CliffordField.constant(Multivector.scalar(SIG))
    f = from_monogenic(f, source)
    g = intertwine(f, TransformSpec(source, target))
    assert residual_norm(g, target, POINTS, ST, extrapolate=True) <= 1e-6


@pytest.mark.parametrize("convention", list(SignConvention))
def test_to_monogenic_inverts_from_monogenic(convention, rng):
    mass = MassTerm.right_scalar(0.5)
    g = random_monogenic_series(SIG, rng, max_order=2).as_field()
    f = from_monogenic(g, mass, convention)
    assert f.declared_class is FieldClass.M_SOLUTION
    assert residual_norm(f, mass, POINTS, ST, convention) <= 1e-5
    back = to_monogenic(f, mass, convention)
    assert back.declared_class is FieldClass.MONOGENIC
    for p in POINTS:
        assert modulus(back(p) - g(p)) <= 1e-14


def test_zero_mass_is_the_identity():
    f = CliffordField.constant(Multivector.scalar(SIG))
    assert to_monogenic(f, MassTerm.zero()) is f
    assert from_monogenic(f, MassTerm.zero()) is f


def test_masses_must_share_the_algebra():
    other = MassTerm.right_clifford(Multivector.generator(AlgebraSignature(3), 1))
    f = CliffordField.constant(Multivector.scalar(SIG))
    with pytest.raises(SignatureMismatchError):
        to_monogenic(f, other)
    with pytest.raises(SignatureMismatchError):
        TransformSpec(MASSES[3], other)


def test_transform_labels():
    spec = TransformSpec(MASSES[1], MASSES[3])
    assert spec.label == "0.5->0.3e1"
    assert spec.reversed().label == "0.3e1->0.5"


def test_group_law_needs_points(rng):
    with pytest.raises(ValueError):
        group_law_residual(_solution(MASSES[0], rng), MASSES[0], MASSES[1], MASSES[2], [])
