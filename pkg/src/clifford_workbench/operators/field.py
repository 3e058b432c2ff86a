"""Evaluatable Clifford-valued fields on R^(n+1)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Mapping

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.errors import SignatureMismatchError
from clifford_workbench.mass.terms import MassTerm


class FieldClass(str, Enum):
    MONOGENIC = "monogenic"
    M_SOLUTION = "m_solution"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class CliffordField:
    """A function Point -> Multivector.

    ``declared_class`` and ``mass`` are advisory: they say what the field
    is supposed to solve, and the verification suites check the claim.
    """

    evaluator: Callable[[Point], Multivector]
    signature: AlgebraSignature
    declared_class: FieldClass = FieldClass.ARBITRARY
    mass: MassTerm = field(default_factory=MassTerm.zero)
    label: str = "field"

    def __call__(self, p: Point) -> Multivector:
        if p.n != self.signature.n:
            raise SignatureMismatchError(
                f"{self.label}: point of dimension {p.n} for a Cl(0,{self.signature.n}) field"
            )
        return self.evaluator(p)

    @classmethod
    def constant(cls, value: Multivector, label: str = "constant") -> CliffordField:
        return cls(
            evaluator=lambda p: value,
            signature=value.signature,
            declared_class=FieldClass.MONOGENIC,
            label=label,
        )

    @classmethod
    def polynomial(
        cls,
        terms: Mapping[tuple[int, ...], Multivector],
        label: str = "polynomial",
    ) -> CliffordField:
        """sum_alpha y^alpha c_alpha, alpha running over all n+1 coordinates.

        Not monogenic in general; used as trial input for operator checks.
        """
        if not terms:
            raise ValueError("a polynomial field needs at least one term")
        sig = next(iter(terms.values())).signature
        for alpha, c in terms.items():
            sig = sig.join(c.signature)
            if len(alpha) != sig.n + 1:
                raise SignatureMismatchError(f"exponent {alpha} does not match Cl(0,{sig.n})")
        items = sorted(terms.items())

        def evaluate(p: Point) -> Multivector:
            coords = p.coords
            total = None
            for alpha, c in items:
                monomial = 1
                for y, k in zip(coords, alpha):
                    if k:
                        monomial = monomial * y**k
                term = c * monomial
                total = term if total is None else total + term
            return total

        return cls(evaluator=evaluate, signature=sig, label=label)

    def declared(self, declared_class: FieldClass, mass: MassTerm | None = None) -> CliffordField:
        return replace(self, declared_class=declared_class, mass=mass or MassTerm.zero())

    def relabel(self, label: str) -> CliffordField:
        return replace(self, label=label)

    def right_multiplied(self, c: Multivector) -> CliffordField:
        """p -> f(p) * c; right coefficients keep every solution class."""
        return replace(self, evaluator=lambda p: mul(self.evaluator(p), c), label=f"{self.label}*c")

    def __add__(self, other: CliffordField) -> CliffordField:
        sig = self.signature.join(other.signature)
        same = self.declared_class is other.declared_class and self.mass == other.mass
        return CliffordField(
            evaluator=lambda p: self.evaluator(p) + other.evaluator(p),
            signature=sig,
            declared_class=self.declared_class if same else FieldClass.ARBITRARY,
            mass=self.mass if same else MassTerm.zero(),
            label=f"{self.label}+{other.label}",
        )
