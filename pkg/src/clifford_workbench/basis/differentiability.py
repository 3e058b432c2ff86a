"""Least-squares lambda-linear forms and the decay order of their remainder."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from clifford_workbench.algebra.multivector import Multivector, left_multiplication_matrix, modulus, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.monomials import zeta
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.config.defaults import DEFAULT_SEED, FIT_EXACT_FLOOR, FIT_RADIUS
from clifford_workbench.errors import DegenerateSampleError, DomainError
from clifford_workbench.mass.terms import MassTerm, exp_mass
from clifford_workbench.mass.transform import to_monogenic
from clifford_workbench.operators.field import CliffordField

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LambdaLinearForm:
    """l(delta) = sum_j zeta_j(delta) A_j e^(-kappa y0 lambda)."""

    coefficients: tuple[Multivector, ...]
    mass: MassTerm
    base_y0: float
    convention: SignConvention = DEFAULT_CONVENTION

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def linear_part(self, delta: Point) -> Multivector:
        """sum_j zeta_j(delta) A_j, the increment of the monogenic companion."""
        sig = self.coefficients[0].signature
        total = None
        for j, a_j in enumerate(self.coefficients, start=1):
            term = mul(zeta(j, delta, sig, self.convention), a_j)
            total = term if total is None else total + term
        return total

    def __call__(self, delta: Point) -> Multivector:
        kappa = self.convention.mass_sign
        return exp_mass(self.mass, -kappa * self.base_y0, self.linear_part(delta))


def sample_directions(n: int, rng: np.random.Generator, count: int | None = None) -> np.ndarray:
    """Antipodal pairs of random unit directions in R^(n+1)."""
    count = count or max(4 * n, 2 * n + 1)
    half = math.ceil(count / 2)
    v = rng.normal(size=(half, n + 1))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return np.vstack([v, -v])


def fit_lambda_linear_form(
    f: CliffordField,
    p: Point,
    mass: MassTerm | None = None,
    radius: float = FIT_RADIUS,
    convention: SignConvention = DEFAULT_CONVENTION,
    rng: np.random.Generator | None = None,
    directions: np.ndarray | None = None,
) -> tuple[LambdaLinearForm, float]:
    """Fit l to the increments of f around p on spheres of radius r and r/2.

    The increments fitted are those of to_monogenic(f), so members of
    M_lambda leave a quadratic remainder and the reported decay order is
    close to 2. Generic non-members leave a linear remainder (order 1).
    An exactly linear increment reports order ``inf``.
    """
    if radius <= 0:
        raise DomainError(f"fit radius must be positive, got {radius}")
    mass = mass or MassTerm.zero()
    n = f.signature.n
    if p.n != n:
        raise DomainError(f"fit point of dimension {p.n} for a Cl(0,{n}) field")
    if directions is None:
        directions = sample_directions(n, rng or np.random.default_rng(DEFAULT_SEED))
    directions = np.asarray(directions, dtype=float)
    if directions.ndim != 2 or directions.shape[1] != n + 1:
        raise DomainError(f"directions must have shape (k, {n + 1})")

    g = to_monogenic(f, mass, convention)
    g_p = g(p)
    sig = g_p.signature

    deltas: list[Point] = []
    increments: list[Multivector] = []
    for r in (radius, radius / 2.0):
        for d in directions:
            delta = Point.from_coords(r * d)
            deltas.append(delta)
            increments.append(g(p + delta) - g_p)

    design = np.vstack([
        np.hstack([left_multiplication_matrix(zeta(j, delta, sig, convention)) for j in range(1, n + 1)])
        for delta in deltas
    ])
    rhs = np.concatenate([inc.coeffs for inc in increments])
    solution, _, rank, _ = np.linalg.lstsq(design, rhs, rcond=None)
    if rank < n * sig.dim:
        raise DegenerateSampleError(
            f"increment samples determine only {rank} of {n * sig.dim} coefficients"
        )

    coefficients = tuple(Multivector(sig, block) for block in np.split(solution, n))
    form = LambdaLinearForm(coefficients, mass, float(p.y0), convention)

    k = len(directions)
    errors = [
        max(modulus(inc - form.linear_part(delta)) for delta, inc in zip(deltas[i:i + k], increments[i:i + k]))
        for i in (0, k)
    ]
    floor = FIT_EXACT_FLOOR * (1.0 + modulus(g_p))
    if errors[0] <= floor:
        order = math.inf
    elif errors[1] == 0.0:
        order = math.inf
    else:
        order = math.log2(errors[0] / errors[1])
    logger.debug("lambda fit of %s at %s: remainders %.3e, %.3e, order %.3f",
                 f.label, p.coords, errors[0], errors[1], order)
    return form, order
