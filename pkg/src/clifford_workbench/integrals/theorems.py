"""Quadrature forms of the Cauchy, mean value and Bergman theorems for M-solutions.

Each integral is taken over to_monogenic(f) and the result is carried
back with the inverse exponential at the evaluation point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, ScalarMode, modulus, mul_batch
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.config.defaults import CLEARANCE_FACTOR
from clifford_workbench.errors import DomainError
from clifford_workbench.integrals.kernels import (
    KernelParams,
    bergman_kernel_batch,
    calibrate_bergman,
    cauchy_kernel_batch,
    mean_value_constant,
    oriented_paravectors,
)
from clifford_workbench.integrals.quadrature import BallVolume, QuadratureRule, pairwise_sum
from clifford_workbench.mass.terms import MassTerm, exp_mass
from clifford_workbench.mass.transform import to_monogenic
from clifford_workbench.operators.field import CliffordField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CauchyEvaluation:
    value: Multivector
    boundary_distance: float
    ill_conditioned: bool


def field_values(f: CliffordField, rule: QuadratureRule) -> np.ndarray:
    """Coefficients of f at every node, shape (m, 2**n)."""
    return np.array([f(p).coeffs for p in rule.points])


def _result(n: int, coeffs: np.ndarray) -> Multivector:
    mode = ScalarMode.COMPLEX if np.iscomplexobj(coeffs) else ScalarMode.REAL
    return Multivector(AlgebraSignature(n, mode), coeffs)


def _require_surface(rule: QuadratureRule) -> None:
    if not rule.is_surface:
        raise DomainError(f"a surface rule is required, got a {rule.domain.kind} rule")


def _check_dimension(f: CliffordField, rule: QuadratureRule) -> None:
    if f.signature.n != rule.n:
        raise DomainError(f"{f.label} lives in Cl(0,{f.signature.n}), rule is for n={rule.n}")


def boundary_integral(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """sum_k w_k nu_k e^(kappa y0 M) f(y_k)."""
    _require_surface(rule)
    _check_dimension(f, rule)
    g = to_monogenic(f, mass, convention)
    nu = oriented_paravectors(rule.normals, convention)
    integrand = mul_batch(nu, field_values(g, rule), rule.n) * rule.weights[:, None]
    return _result(rule.n, pairwise_sum(integrand))


def cauchy_theorem_residual(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    return modulus(boundary_integral(f, mass, rule, convention))


def cauchy_integral(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    x: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
    kp: KernelParams | None = None,
    clearance_factor: float = CLEARANCE_FACTOR,
) -> CauchyEvaluation:
    """e^(-kappa x0 M) sum_k w_k E(y_k - x) nu_k e^(kappa y0 M) f(y_k).

    Reproduces f(x) inside the surface and vanishes outside. Points
    closer to the surface than clearance_factor times the rule's node
    spacing are flagged as ill-conditioned.
    """
    _require_surface(rule)
    _check_dimension(f, rule)
    if x.n != rule.n:
        raise DomainError(f"evaluation point of dimension {x.n} for an n={rule.n} rule")
    kp = kp or KernelParams(rule.n)
    n = rule.n

    boundary_distance = rule.domain.boundary_distance(x)
    ill_conditioned = boundary_distance < clearance_factor * rule.spacing
    if ill_conditioned:
        logger.warning(
            "Cauchy integral at %s is %.3e from the surface (node spacing %.3e); result is unreliable",
            x.coords, boundary_distance, rule.spacing,
        )

    kernel = cauchy_kernel_batch(x, rule.nodes, kp, convention)
    nu = oriented_paravectors(rule.normals, convention)
    g = field_values(to_monogenic(f, mass, convention), rule)
    integrand = mul_batch(mul_batch(kernel, nu, n), g, n) * rule.weights[:, None]
    total = _result(n, pairwise_sum(integrand))
    value = exp_mass(mass, -convention.mass_sign * x.y0, total)
    return CauchyEvaluation(value=value, boundary_distance=boundary_distance, ill_conditioned=ill_conditioned)


def deformation_defect(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    x: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """|cauchy_integral(f, M) - e^(-kappa x0 M) cauchy_integral(to_monogenic(f), 0)|."""
    deformed = cauchy_integral(f, mass, rule, x, convention).value
    classical = cauchy_integral(to_monogenic(f, mass, convention), MassTerm.zero(), rule, x, convention).value
    return modulus(deformed - exp_mass(mass, -convention.mass_sign * x.y0, classical))


def mean_value(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    x: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """Ball average of e^(kappa y0 M) f, carried back to x."""
    domain = rule.domain
    if not isinstance(domain, BallVolume):
        raise DomainError(f"mean value needs a ball rule, got a {domain.kind} rule")
    _check_dimension(f, rule)
    if domain.center.distance(x) > 1e-12 * (1.0 + x.norm()):
        raise DomainError(f"ball rule is centred at {domain.center.coords}, not at {x.coords}")
    g = field_values(to_monogenic(f, mass, convention), rule)
    c = mean_value_constant(rule.n, domain.radius)
    total = _result(rule.n, c * pairwise_sum(g * rule.weights[:, None]))
    return exp_mass(mass, -convention.mass_sign * x.y0, total)


def bergman_reproduce(
    f: CliffordField,
    mass: MassTerm,
    rule: QuadratureRule,
    x: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
    calibration: float | None = None,
) -> Multivector:
    """sum_k w_k c B(x, y_k) f(y_k) e^(kappa (y0 - x0) lambda) over the unit ball."""
    domain = rule.domain
    if not isinstance(domain, BallVolume) or domain.radius != 1.0 or domain.center.norm() != 0.0:
        raise DomainError("Bergman reproduction needs a rule on the unit ball centred at the origin")
    _check_dimension(f, rule)
    if x.n != rule.n or x.norm() >= 1.0:
        raise DomainError(f"{x.coords} is not inside the open unit ball")
    if calibration is None:
        calibration = calibrate_bergman(rule.n, convention=convention).constant

    kernel = calibration * bergman_kernel_batch(x, rule.nodes, convention)
    g = field_values(to_monogenic(f, mass, convention), rule)
    integrand = mul_batch(kernel, g, rule.n) * rule.weights[:, None]
    total = _result(rule.n, pairwise_sum(integrand))
    return exp_mass(mass, -convention.mass_sign * x.y0, total)
