"""Exponential intertwining maps between solution spaces of D + M."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from clifford_workbench.algebra.multivector import Multivector, modulus
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm, exp_mass
from clifford_workbench.operators.field import CliffordField, FieldClass


@dataclass(frozen=True)
class TransformSpec:
    from_mass: MassTerm
    to_mass: MassTerm

    def __post_init__(self):
        a, b = self.from_mass.element, self.to_mass.element
        if a is not None and b is not None and a.n != b.n:
            raise SignatureMismatchError(f"masses from Cl(0,{a.n}) and Cl(0,{b.n})")

    def reversed(self) -> TransformSpec:
        return TransformSpec(self.to_mass, self.from_mass)

    @property
    def label(self) -> str:
        return f"{self.from_mass.label}->{self.to_mass.label}"


def _check_mass(f: CliffordField, mass: MassTerm) -> None:
    if mass.element is not None and mass.element.n != f.signature.n:
        raise SignatureMismatchError(
            f"mass in Cl(0,{mass.element.n}) applied to {f.label} in Cl(0,{f.signature.n})"
        )


def _solution_class(mass: MassTerm) -> FieldClass:
    return FieldClass.MONOGENIC if mass.is_zero else FieldClass.M_SOLUTION


def to_monogenic(
    f: CliffordField,
    mass: MassTerm,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> CliffordField:
    """y -> e^(kappa y0 M) f(y), monogenic whenever f is an M-solution."""
    _check_mass(f, mass)
    if mass.is_zero:
        return f
    kappa = convention.mass_sign
    return CliffordField(
        evaluator=lambda p: exp_mass(mass, kappa * p.y0, f(p)),
        signature=f.signature,
        declared_class=FieldClass.MONOGENIC,
        label=f"to_monogenic[{mass.label}]({f.label})",
    )


def from_monogenic(
    g: CliffordField,
    mass: MassTerm,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> CliffordField:
    """Inverse of to_monogenic: y -> e^(-kappa y0 M) g(y)."""
    _check_mass(g, mass)
    if mass.is_zero:
        return g
    kappa = convention.mass_sign
    return CliffordField(
        evaluator=lambda p: exp_mass(mass, -kappa * p.y0, g(p)),
        signature=g.signature,
        declared_class=FieldClass.M_SOLUTION,
        mass=mass,
        label=f"from_monogenic[{mass.label}]({g.label})",
    )


def intertwine(
    f: CliffordField,
    spec: TransformSpec,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> CliffordField:
    """Carry an M1-solution to an M2-solution.

    g(y) = e^(-kappa y0 M2) e^(kappa y0 M1) f(y); the inner exponential is
    applied first, so non-commuting masses keep this order.
    """
    _check_mass(f, spec.from_mass)
    _check_mass(f, spec.to_mass)
    kappa = convention.mass_sign

    def evaluate(p: Point) -> Multivector:
        inner = exp_mass(spec.from_mass, kappa * p.y0, f(p))
        return exp_mass(spec.to_mass, -kappa * p.y0, inner)

    return CliffordField(
        evaluator=evaluate,
        signature=f.signature,
        declared_class=_solution_class(spec.to_mass),
        mass=spec.to_mass,
        label=f"intertwine[{spec.label}]({f.label})",
    )


def group_law_residual(
    f: CliffordField,
    a: MassTerm,
    b: MassTerm,
    c: MassTerm,
    points: Sequence[Point],
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """Max |intertwine(intertwine(f, C->A), A->B) - intertwine(f, C->B)| over points."""
    if not points:
        raise ValueError("group law check needs at least one point")
    two_step = intertwine(intertwine(f, TransformSpec(c, a), convention), TransformSpec(a, b), convention)
    direct = intertwine(f, TransformSpec(c, b), convention)
    return max(modulus(two_step(p) - direct(p)) for p in points)
