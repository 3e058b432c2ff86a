"""Fueter-type monomials, symmetric products and their symmetric powers."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import sympy
from sympy.utilities.iterables import multiset_permutations

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, modulus, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.config.defaults import MAX_SYMMETRIC_FACTORS
from clifford_workbench.errors import DomainError, SignatureMismatchError, SizeLimitError


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Multi-index beta = (beta_1, ..., beta_n) of nonnegative integers."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(b) for b in self.entries)
        if not entries:
            raise ValueError("a multi-index needs at least one entry")
        if any(b < 0 for b in entries):
            raise ValueError(f"multi-index entries must be nonnegative: {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        return sum(self.entries)

    @classmethod
    def zero(cls, n: int) -> MultiIndex:
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, j: int) -> MultiIndex:
        """The multi-index with a single 1 in direction j (1-indexed)."""
        entries = [0] * n
        entries[j - 1] = 1
        return cls(tuple(entries))

    @classmethod
    def all_up_to(cls, n: int, max_order: int) -> list[MultiIndex]:
        """Every multi-index of order <= max_order, by order then descending entries."""
        found = [
            cls(entries)
            for entries in itertools.product(range(max_order + 1), repeat=n)
            if sum(entries) <= max_order
        ]
        return sorted(found, key=lambda b: (b.order, tuple(-e for e in b.entries)))

    def factorial(self) -> int:
        return math.prod(math.factorial(b) for b in self.entries)

    def multinomial(self) -> int:
        """|beta|! / beta!"""
        return math.factorial(self.order) // self.factorial()

    @property
    def label(self) -> str:
        return "(" + ",".join(str(b) for b in self.entries) + ")"


def zeta(
    j: int,
    p: Point,
    signature: AlgebraSignature | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """zeta_j(p) = y0 e_j + s y_j e0."""
    signature = signature or AlgebraSignature(p.n)
    if p.n != signature.n:
        raise SignatureMismatchError(f"point of dimension {p.n} in Cl(0,{signature.n})")
    if not 1 <= j <= signature.n:
        raise DomainError(f"monomial index {j} out of range 1..{signature.n}")
    s = convention.monomial_sign
    return Multivector.from_blades(signature, {0: s * p.spatial[j - 1], 1 << (j - 1): p.y0})


def symmetric_product(factors: Sequence[Multivector]) -> Multivector:
    """Average of the Clifford product over all orderings of the factors.

    Identical factor objects are grouped so only distinct orderings are
    multiplied out.
    """
    k = len(factors)
    if k == 0:
        raise ValueError("symmetric product of an empty factor list")
    if k > MAX_SYMMETRIC_FACTORS:
        raise SizeLimitError(f"symmetric product limited to {MAX_SYMMETRIC_FACTORS} factors, got {k}")

    first_seen: dict[int, int] = {}
    labels = [first_seen.setdefault(id(f), i) for i, f in enumerate(factors)]
    repeats = math.prod(math.factorial(labels.count(lab)) for lab in set(labels))

    total = None
    for order in multiset_permutations(labels):
        prod = factors[order[0]]
        for idx in order[1:]:
            prod = mul(prod, factors[idx])
        total = prod if total is None else total + prod
    return total * repeats / math.factorial(k)


def symmetric_power(
    p: Point,
    beta: MultiIndex,
    signature: AlgebraSignature | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """V_beta(p): symmetric product with zeta_j repeated beta_j times."""
    signature = signature or AlgebraSignature(p.n)
    if beta.n != signature.n:
        raise SignatureMismatchError(f"multi-index of length {beta.n} in Cl(0,{signature.n})")
    if beta.order > MAX_SYMMETRIC_FACTORS:
        raise SizeLimitError(f"|beta| = {beta.order} exceeds {MAX_SYMMETRIC_FACTORS}")
    if beta.order == 0:
        exact = any(isinstance(c, sympy.Basic) for c in p.coords)
        return Multivector.scalar(signature, sympy.Integer(1) if exact else 1.0)

    factors: list[Multivector] = []
    for j, count in enumerate(beta.entries, start=1):
        if count:
            z = zeta(j, p, signature, convention)
            factors.extend([z] * count)
    return symmetric_product(factors)


def restrict_to_hyperplane(
    expansion: Mapping[MultiIndex, Multivector],
    spatial: Sequence[float],
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """Evaluate sum V_beta c_beta at y0 = 0, where every zeta_j is s y_j e0."""
    if not expansion:
        raise ValueError("empty symmetric-power expansion")
    p = Point(y0=0.0, spatial=tuple(spatial))
    total = None
    for beta, coeff in expansion.items():
        term = mul(symmetric_power(p, beta, coeff.signature, convention), coeff)
        total = term if total is None else total + term
    return total


def hyperplane_monomial(
    beta: MultiIndex,
    spatial: Sequence[float],
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """(s y)^beta, the scalar V_beta collapses to on y0 = 0."""
    s = convention.monomial_sign
    return math.prod((s * y) ** b for y, b in zip(spatial, beta.entries))


def multinomial_consistency(
    p: Point,
    beta: MultiIndex,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """Distance between V_beta(p) and the t^beta coefficient of (sum t_j zeta_j)^|beta|.

    The coefficient is extracted symbolically and divided by the
    multinomial |beta|!/beta!.
    """
    signature = AlgebraSignature(p.n)
    ts = sympy.symbols(f"t1:{p.n + 1}")
    linear = None
    for j, t in enumerate(ts, start=1):
        term = zeta(j, p, signature, convention) * t
        linear = term if linear is None else linear + term
    expanded = linear.power(beta.order)

    monomial = sympy.Mul(*(t**b for t, b in zip(ts, beta.entries)))
    extracted = [
        sympy.Poly(sympy.expand(c), *ts).coeff_monomial(monomial) / beta.multinomial()
        for c in expanded.coeffs
    ]
    extracted_mv = Multivector(signature, [complex(c).real for c in extracted])
    return modulus(extracted_mv - symmetric_power(p, beta, signature, convention))
