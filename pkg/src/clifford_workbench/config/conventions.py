"""Sign conventions for D, the monomials and the mass exponent."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SignConvention(Enum):
    LEDGER = "ledger"
    PRINTED = "printed"

    @property
    def signs(self) -> ConventionSigns:
        return CONVENTION_SIGNS[self]

    @property
    def dirac_sign(self) -> int:
        return CONVENTION_SIGNS[self].dirac_sign

    @property
    def monomial_sign(self) -> int:
        return CONVENTION_SIGNS[self].monomial_sign

    @property
    def mass_sign(self) -> int:
        return CONVENTION_SIGNS[self].mass_exponent_sign


@dataclass(frozen=True)
class ConventionSigns:
    """The three signs that must agree for the theorems to hold together."""

    dirac_sign: int  # sigma in D = d/dy0 + sigma * sum e_j d/dy_j
    monomial_sign: int  # s in zeta_j = y0 e_j + s y_j e0
    mass_exponent_sign: int  # kappa: to_monogenic(f) = exp(kappa y0 M) f
    description: str

    def as_dict(self) -> dict[str, int | str]:
        return {
            "dirac_sign": self.dirac_sign,
            "monomial_sign": self.monomial_sign,
            "mass_exponent_sign": self.mass_exponent_sign,
            "description": self.description,
            "kernel_sides": KERNEL_SIDES,
        }


CONVENTION_SIGNS: dict[SignConvention, ConventionSigns] = {
    SignConvention.LEDGER: ConventionSigns(
        dirac_sign=1, monomial_sign=-1, mass_exponent_sign=1,
        description="D = d0 + sum e_j dj, (D + M)f = 0, exp(y0 M) f is monogenic",
    ),
    SignConvention.PRINTED: ConventionSigns(
        dirac_sign=-1, monomial_sign=1, mass_exponent_sign=-1,
        description="D = d0 - sum e_j dj, d0 f = (sum e_j dj + M) f, exp(-y0 M) f is monogenic",
    ),
}

DEFAULT_CONVENTION = SignConvention.LEDGER

# Which side D acts from for each argument of the Cauchy kernel
KERNEL_SIDES = "y -> E(y - x): D f = 0 (left); x -> E(y - x): f D = 0 (right)"
