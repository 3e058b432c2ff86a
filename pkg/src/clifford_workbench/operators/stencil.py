"""Central finite-difference application of D, its conjugate, the perturbed operator and the Laplacian."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from clifford_workbench.algebra.multivector import Multivector, modulus, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.config.defaults import DEFAULT_STEP
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.operators.field import CliffordField, FieldClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StencilSpec:
    h: float = DEFAULT_STEP
    order: int = 2

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"step size must be positive, got {self.h}")
        if self.order != 2:
            raise ValueError("only second-order central differences are implemented")

    def halved(self) -> StencilSpec:
        return replace(self, h=self.h / 2.0)


def partial(f: CliffordField, p: Point, axis: int, st: StencilSpec) -> Multivector:
    """Central difference along coordinate ``axis`` (0 is y0)."""
    return (f(p.shifted(axis, st.h)) - f(p.shifted(axis, -st.h))) / (2.0 * st.h)


def _dirac(
    f: CliffordField, p: Point, st: StencilSpec, sign: int, with_y0: bool, right: bool = False
) -> Multivector:
    total = partial(f, p, 0, st) if with_y0 else None
    for j in range(1, p.n + 1):
        e_j = Multivector.generator(f.signature, j, float(sign))
        d_j = partial(f, p, j, st)
        term = mul(d_j, e_j) if right else mul(e_j, d_j)
        total = term if total is None else total + term
    return total


def apply_D(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """d0 f + sigma sum e_j dj f, e_j acting from the left."""
    return _dirac(f, p, st, convention.dirac_sign, with_y0=True)


def apply_D_right(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """d0 f + sigma sum dj f e_j, e_j acting from the right."""
    return _dirac(f, p, st, convention.dirac_sign, with_y0=True, right=True)


def apply_D_conj(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    return _dirac(f, p, st, -convention.dirac_sign, with_y0=True)


def spatial_dirac(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """A f = sigma sum e_j dj f."""
    return _dirac(f, p, st, convention.dirac_sign, with_y0=False)


def apply_perturbed(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    mass: MassTerm | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """Residual D f + kappa M f; zero exactly for M-solutions."""
    d = apply_D(f, p, st, convention)
    if mass is None or mass.is_zero:
        return d
    return d + mass.apply(f(p)) * convention.mass_sign


def laplacian(f: CliffordField, p: Point, st: StencilSpec = StencilSpec()) -> Multivector:
    center = f(p) * 2.0
    total = None
    for axis in range(p.n + 1):
        term = (f(p.shifted(axis, st.h)) - center + f(p.shifted(axis, -st.h))) / (st.h**2)
        total = term if total is None else total + term
    return total


def spatial_laplacian(f: CliffordField, p: Point, st: StencilSpec = StencilSpec()) -> Multivector:
    center = f(p) * 2.0
    total = None
    for axis in range(1, p.n + 1):
        term = (f(p.shifted(axis, st.h)) - center + f(p.shifted(axis, -st.h))) / (st.h**2)
        total = term if total is None else total + term
    return total


def operator_field(
    f: CliffordField,
    operator: Callable[[Point], Multivector],
    label: str,
) -> CliffordField:
    """Wrap p -> operator(p) as a field so operators can be composed."""
    return CliffordField(
        evaluator=operator,
        signature=f.signature,
        declared_class=FieldClass.ARBITRARY,
        label=f"{label}({f.label})",
    )


def factorization_residual(
    f: CliffordField,
    p: Point,
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> tuple[float, float]:
    """|conj(D) D f - lap f| and |D conj(D) f - lap f| by composed differences."""
    df = operator_field(f, lambda q: apply_D(f, q, st, convention), "D")
    dcf = operator_field(f, lambda q: apply_D_conj(f, q, st, convention), "Dbar")
    lap = laplacian(f, p, st)
    first = modulus(apply_D_conj(df, p, st, convention) - lap)
    second = modulus(apply_D(dcf, p, st, convention) - lap)
    return first, second


def helmholtz_factorization_residual(
    mass: MassTerm,
    fields: Sequence[CliffordField],
    points: Sequence[Point],
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """Max over fields and points of |(A + M)(A - M) f + (lap_spatial + M_(lambda^2)) f|."""
    if not fields or not points:
        raise ValueError("helmholtz check needs at least one field and one point")
    squared = mass.squared()
    worst = 0.0
    for f in fields:
        inner = operator_field(
            f, lambda q, f=f: spatial_dirac(f, q, st, convention) - mass.apply(f(q)), "A-M"
        )
        for p in points:
            left = spatial_dirac(inner, p, st, convention) + mass.apply(inner(p))
            right = -(spatial_laplacian(f, p, st) + squared.apply(f(p)))
            worst = max(worst, modulus(left - right))
    return worst


def residual_norm(
    f: CliffordField,
    mass: MassTerm | None,
    samples: Sequence[Point],
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
    extrapolate: bool = False,
) -> float:
    """Max over samples of |(D + kappa M) f|.

    With ``extrapolate`` the residuals at h and h/2 are combined as
    (4 R(h/2) - R(h)) / 3, which removes the h**2 truncation term.
    """
    if not samples:
        raise ValueError("residual_norm needs at least one sample point")
    worst = 0.0
    for p in samples:
        r = apply_perturbed(f, p, st, mass, convention)
        if extrapolate:
            r_half = apply_perturbed(f, p, st.halved(), mass, convention)
            r = (r_half * 4.0 - r) / 3.0
        worst = max(worst, modulus(r))
    return worst


def richardson_order(error_h: float, error_half: float) -> float:
    """Observed convergence order log2(e(h) / e(h/2))."""
    if error_half == 0.0:
        return math.inf if error_h > 0.0 else math.nan
    if error_h == 0.0:
        return -math.inf
    return math.log2(error_h / error_half)


def right_residual_norm(
    f: CliffordField,
    samples: Sequence[Point],
    st: StencilSpec = StencilSpec(),
    convention: SignConvention = DEFAULT_CONVENTION,
    extrapolate: bool = False,
) -> float:
    """Max over samples of |f D| with D acting from the right."""
    if not samples:
        raise ValueError("right_residual_norm needs at least one sample point")
    worst = 0.0
    for p in samples:
        r = apply_D_right(f, p, st, convention)
        if extrapolate:
            r = (apply_D_right(f, p, st.halved(), convention) * 4.0 - r) / 3.0
        worst = max(worst, modulus(r))
    return worst
