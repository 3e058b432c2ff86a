"""Mass operators M: zero or right multiplication by a Clifford number."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np
import sympy

from clifford_workbench.algebra.blades import blade_label
from clifford_workbench.algebra.exponential import clifford_exp
from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, mul
from clifford_workbench.errors import ConfigError, SignatureMismatchError


class MassKind(str, Enum):
    ZERO = "zero"
    RIGHT_SCALAR = "right_scalar"
    RIGHT_CLIFFORD = "right_clifford"


@dataclass(frozen=True, eq=False)
class MassTerm:
    """M f = f * lambda, normalized to the simplest kind that represents it.

    Use the ``zero``, ``right_scalar`` and ``right_clifford`` constructors
    rather than the raw dataclass so the normalization always applies.
    """

    kind: MassKind
    scalar: float = 0.0
    element: Multivector | None = None

    @classmethod
    def zero(cls) -> MassTerm:
        return cls(MassKind.ZERO)

    @classmethod
    def right_scalar(cls, value: float) -> MassTerm:
        value = float(value)
        if value == 0.0:
            return cls.zero()
        return cls(MassKind.RIGHT_SCALAR, scalar=value)

    @classmethod
    def right_clifford(cls, element: Multivector) -> MassTerm:
        if element.is_zero():
            return cls.zero()
        if element.grades_present() == {0}:
            value = complex(element.scalar_part())
            if value.imag == 0.0:
                return cls.right_scalar(value.real)
        return cls(MassKind.RIGHT_CLIFFORD, element=element)

    @classmethod
    def parse(cls, text: str | float, signature: AlgebraSignature | None = None) -> MassTerm:
        """Read a descriptor: ``0``, a real like ``0.5``, or 2**n comma-separated blade coefficients."""
        if isinstance(text, (int, float)):
            return cls.right_scalar(text)
        text = str(text).strip()
        if not text:
            raise ConfigError("empty mass descriptor")
        if "," not in text:
            try:
                return cls.right_scalar(float(text))
            except ValueError as exc:
                raise ConfigError(f"not a real number: {text!r}") from exc

        try:
            values = [float(part) for part in text.split(",")]
        except ValueError as exc:
            raise ConfigError(f"mass coefficients must be reals: {text!r}") from exc
        if signature is None:
            n = int(round(math.log2(len(values)))) if values else 0
            if n < 1 or len(values) != 1 << n:
                raise ConfigError(f"{len(values)} coefficients is not a power of two")
            signature = AlgebraSignature(n)
        if len(values) != signature.dim:
            raise ConfigError(
                f"mass descriptor has {len(values)} coefficients; Cl(0,{signature.n}) needs {signature.dim}"
            )
        return cls.right_clifford(Multivector(signature, np.array(values)))

    @property
    def is_zero(self) -> bool:
        return self.kind is MassKind.ZERO

    @property
    def is_scalar(self) -> bool:
        return self.kind is not MassKind.RIGHT_CLIFFORD

    def as_multivector(self, signature: AlgebraSignature) -> Multivector:
        """lambda as an element of the given algebra."""
        if self.kind is MassKind.RIGHT_CLIFFORD:
            if self.element.n != signature.n:
                raise SignatureMismatchError(
                    f"mass lives in Cl(0,{self.element.n}), field in Cl(0,{signature.n})"
                )
            return self.element
        return Multivector.scalar(signature, self.scalar)

    def apply(self, v: Multivector) -> Multivector:
        """M v = v * lambda."""
        if self.kind is MassKind.ZERO:
            return v * 0
        if self.kind is MassKind.RIGHT_SCALAR:
            return v * self.scalar
        return mul(v, self.as_multivector(v.signature))

    def squared(self) -> MassTerm:
        """M M = M_(lambda^2): right multiplications compose in order."""
        if self.kind is MassKind.ZERO:
            return self
        if self.kind is MassKind.RIGHT_SCALAR:
            return MassTerm.right_scalar(self.scalar**2)
        return MassTerm.right_clifford(mul(self.element, self.element))

    def commutes_with(self, other: MassTerm, tol: float = 1e-14) -> bool:
        if self.is_scalar or other.is_scalar:
            return True
        ab = mul(self.element, other.element)
        ba = mul(other.element, self.element)
        return ab.close_to(ba, atol=tol)

    @property
    def descriptor(self) -> str:
        """Text form accepted by ``parse``."""
        if self.kind is MassKind.ZERO:
            return "0"
        if self.kind is MassKind.RIGHT_SCALAR:
            return repr(self.scalar)
        return ",".join(repr(float(np.real(c))) for c in self.element.coeffs)

    @property
    def label(self) -> str:
        if self.kind is not MassKind.RIGHT_CLIFFORD:
            return "0" if self.is_zero else f"{self.scalar:g}"
        terms = [
            f"{np.real(c):g}{'' if m == 0 else blade_label(m)}"
            for m, c in enumerate(self.element.coeffs)
            if c != 0
        ]
        return "+".join(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassTerm):
            return NotImplemented
        if self.kind is not other.kind:
            return False
        if self.kind is MassKind.RIGHT_CLIFFORD:
            return self.element.n == other.element.n and bool(
                np.array_equal(self.element.coeffs, other.element.coeffs)
            )
        return self.scalar == other.scalar

    def __hash__(self) -> int:
        return hash((self.kind, self.descriptor))

    def __repr__(self) -> str:
        return f"MassTerm({self.kind.value}, {self.label})"


def exp_mass(mass: MassTerm, t: Any, v: Multivector) -> Multivector:
    """e^(t M) v.

    For right multiplication this is v * exp(t lambda), applied on the
    right. A sympy ``t`` is accepted for scalar masses.
    """
    if mass.kind is MassKind.ZERO:
        return v
    if mass.kind is MassKind.RIGHT_SCALAR:
        if isinstance(t, sympy.Basic):
            return v * sympy.exp(t * sympy.Float(mass.scalar))
        return v * math.exp(t * mass.scalar)
    if isinstance(t, sympy.Basic):
        raise TypeError("symbolic exponent of a Clifford-valued mass is not supported")
    lam = mass.as_multivector(v.signature)
    return mul(v, clifford_exp(lam * float(t)))
