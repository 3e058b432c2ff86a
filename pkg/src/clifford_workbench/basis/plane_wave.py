"""Plane-wave solutions exp(-i sum eta_j zeta_j) w and their finite superpositions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from clifford_workbench.algebra.exponential import clifford_exp
from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, ScalarMode, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.basis.monomials import MultiIndex, zeta
from clifford_workbench.basis.taylor import TaylorSeries
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm, exp_mass
from clifford_workbench.operators.field import CliffordField, FieldClass


@dataclass(frozen=True, eq=False)
class PlaneWaveParam:
    """Frequency eta and a right weight, promoted to the complex algebra."""

    eta: tuple[float, ...]
    weight: Multivector

    def __post_init__(self):
        eta = tuple(float(e) for e in self.eta)
        if len(eta) != self.weight.n:
            raise SignatureMismatchError(f"eta has {len(eta)} entries, weight lives in Cl(0,{self.weight.n})")
        if self.weight.is_exact:
            raise TypeError("plane-wave weights need numeric coefficients")
        object.__setattr__(self, "eta", eta)
        if not self.weight.signature.is_complex:
            object.__setattr__(self, "weight", self.weight.to_complex())

    @property
    def frequency(self) -> float:
        return float(np.linalg.norm(self.eta))


def plane_wave(
    param: PlaneWaveParam,
    p: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    sig = param.weight.signature
    if p.n != sig.n:
        raise SignatureMismatchError(f"point of dimension {p.n} for a Cl(0,{sig.n}) plane wave")
    phase = Multivector.zero(sig)
    for j, eta_j in enumerate(param.eta, start=1):
        if eta_j:
            phase = phase + zeta(j, p, sig, convention) * eta_j
    return mul(clifford_exp(phase * -1j), param.weight)


def superpose_plane_waves(
    params: Sequence[PlaneWaveParam],
    mass: MassTerm | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
    label: str = "plane_waves",
) -> CliffordField:
    """y -> e^(-kappa y0 M) [sum_k plane_wave(params_k, y)], an M-solution."""
    if not params:
        raise ValueError("superposition needs at least one plane wave")
    params = tuple(params)
    mass = mass or MassTerm.zero()
    sig = params[0].weight.signature
    for param in params[1:]:
        sig = sig.join(param.weight.signature)
    kappa = convention.mass_sign

    def evaluate(p: Point) -> Multivector:
        total = plane_wave(params[0], p, convention)
        for param in params[1:]:
            total = total + plane_wave(param, p, convention)
        return exp_mass(mass, -kappa * p.y0, total)

    return CliffordField(
        evaluator=evaluate,
        signature=sig,
        declared_class=FieldClass.MONOGENIC if mass.is_zero else FieldClass.M_SOLUTION,
        mass=mass,
        label=label,
    )


def random_plane_waves(
    signature_n: int,
    rng: np.random.Generator,
    count: int = 3,
    max_frequency: float = 2.0,
) -> list[PlaneWaveParam]:
    """Seeded frequencies with |eta| <= max_frequency and random complex weights."""
    sig = AlgebraSignature(signature_n, ScalarMode.COMPLEX)
    params = []
    for _ in range(count):
        direction = rng.normal(size=signature_n)
        direction /= np.linalg.norm(direction)
        eta = direction * rng.uniform(0.0, max_frequency)
        weight = rng.uniform(-1, 1, sig.dim) + 1j * rng.uniform(-1, 1, sig.dim)
        params.append(PlaneWaveParam(eta=tuple(eta), weight=Multivector(sig, weight)))
    return params


def plane_wave_taylor_series(
    param: PlaneWaveParam,
    max_order: int,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> TaylorSeries:
    """Truncated expansion sum_beta V_beta (-i)^|beta| eta^beta / beta! w around the origin.

    Follows from expanding exp(-i sum eta_j zeta_j) with the multinomial
    theorem for the symmetric powers.
    """
    n = len(param.eta)
    terms = {}
    for beta in MultiIndex.all_up_to(n, max_order):
        monomial = math.prod(e**b for e, b in zip(param.eta, beta.entries))
        terms[beta] = param.weight * ((-1j) ** beta.order * monomial / beta.factorial())
    return TaylorSeries(
        center=Point.origin(n),
        mass=MassTerm.zero(),
        terms=terms,
        max_order=max_order,
        convention=convention,
        label=f"plane_wave_taylor[{max_order}]",
    )
