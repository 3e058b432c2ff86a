"""Truncated Taylor series in the symmetric powers V_beta, with right coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.monomials import MultiIndex, symmetric_power
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm, exp_mass
from clifford_workbench.operators.field import CliffordField, FieldClass


@dataclass(frozen=True, eq=False)
class TaylorSeries:
    """f(y) = [sum_beta V_beta(y - a) c_beta] e^(-kappa y0 lambda)."""

    center: Point
    mass: MassTerm
    terms: Mapping[MultiIndex, Multivector]
    max_order: int
    convention: SignConvention = DEFAULT_CONVENTION
    label: str = field(default="taylor")

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a Taylor series needs at least one term")
        ns = {c.n for c in self.terms.values()}
        if len(ns) != 1:
            raise SignatureMismatchError(f"Taylor coefficients from different algebras: n in {sorted(ns)}")
        n = ns.pop()
        if self.center.n != n:
            raise SignatureMismatchError(f"center of dimension {self.center.n} for Cl(0,{n}) coefficients")
        for beta in self.terms:
            if beta.n != n:
                raise SignatureMismatchError(f"multi-index {beta.label} has length {beta.n}, expected {n}")
            if beta.order > self.max_order:
                raise ValueError(f"term {beta.label} exceeds max_order {self.max_order}")
        object.__setattr__(self, "terms", dict(sorted(self.terms.items())))

    @property
    def signature(self) -> AlgebraSignature:
        first = next(iter(self.terms.values()))
        sig = first.signature
        for c in self.terms.values():
            sig = sig.join(c.signature)
        return sig

    def polynomial_part(self, p: Point) -> Multivector:
        """sum_beta V_beta(p - a) c_beta, the monogenic part."""
        shifted = p - self.center
        total = None
        for beta, coeff in self.terms.items():
            term = mul(symmetric_power(shifted, beta, coeff.signature, self.convention), coeff)
            total = term if total is None else total + term
        return total

    def __call__(self, p: Point) -> Multivector:
        return taylor_eval(self, p)

    def as_field(self) -> CliffordField:
        declared = FieldClass.MONOGENIC if self.mass.is_zero else FieldClass.M_SOLUTION
        return CliffordField(
            evaluator=self.__call__,
            signature=self.signature,
            declared_class=declared,
            mass=self.mass,
            label=self.label,
        )

    def monogenic_field(self) -> CliffordField:
        return CliffordField(
            evaluator=self.polynomial_part,
            signature=self.signature,
            declared_class=FieldClass.MONOGENIC,
            label=f"{self.label}[monogenic]",
        )


def taylor_eval(series: TaylorSeries, p: Point) -> Multivector:
    kappa = series.convention.mass_sign
    return exp_mass(series.mass, -kappa * p.y0, series.polynomial_part(p))


def single_term_series(
    beta: MultiIndex,
    coeff: Multivector | None = None,
    mass: MassTerm | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> TaylorSeries:
    """The series V_beta c around the origin (c = e0 by default)."""
    coeff = coeff if coeff is not None else Multivector.scalar(AlgebraSignature(beta.n))
    return TaylorSeries(
        center=Point.origin(beta.n),
        mass=mass or MassTerm.zero(),
        terms={beta: coeff},
        max_order=beta.order,
        convention=convention,
        label=f"V{beta.label}",
    )


def random_monogenic_series(
    signature: AlgebraSignature,
    rng: np.random.Generator,
    max_order: int = 2,
    scale: float = 0.1,
    mass: MassTerm | None = None,
    center: Point | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
    label: str = "random",
) -> TaylorSeries:
    """Seeded random right coefficients, uniform in [-scale, scale], for every |beta| <= max_order."""
    terms = {
        beta: Multivector(signature, rng.uniform(-scale, scale, size=signature.dim))
        for beta in MultiIndex.all_up_to(signature.n, max_order)
    }
    return TaylorSeries(
        center=center or Point.origin(signature.n),
        mass=mass or MassTerm.zero(),
        terms=terms,
        max_order=max_order,
        convention=convention,
        label=label,
    )


def ck_extension(
    polynomial: Mapping[MultiIndex, Multivector],
    convention: SignConvention = DEFAULT_CONVENTION,
) -> TaylorSeries:
    """Monogenic extension of the spatial polynomial sum y^beta a_beta.

    V_beta restricts to (s y)^beta on y0 = 0, so V_beta s^|beta| a_beta
    restricts to y^beta a_beta.
    """
    if not polynomial:
        raise ValueError("empty polynomial")
    s = convention.monomial_sign
    terms = {beta: coeff * (s**beta.order) for beta, coeff in polynomial.items()}
    n = next(iter(terms)).n
    return TaylorSeries(
        center=Point.origin(n),
        mass=MassTerm.zero(),
        terms=terms,
        max_order=max(beta.order for beta in terms),
        convention=convention,
        label="ck_extension",
    )
