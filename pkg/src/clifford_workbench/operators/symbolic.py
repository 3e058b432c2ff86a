"""Exact operator application with sympy.

A field is evaluated at a point whose coordinates are sympy symbols; the
resulting coefficients are expressions that are differentiated exactly.
Use exact right coefficients (integers or ``sympy.Rational``) when an
identity has to come out as exactly zero.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
import sympy

from clifford_workbench.algebra.multivector import Multivector, mul
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.operators.field import CliffordField

# rational sample points for expressions that are not polynomials
_PROBES = (sympy.Rational(1, 7), sympy.Rational(-2, 9), sympy.Rational(3, 11))


def coordinate_symbols(n: int) -> tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"y0:{n + 1}", real=True)


def symbolic_point(n: int) -> Point:
    return Point.from_coords(coordinate_symbols(n))


def evaluate_symbolic(f: CliffordField) -> Multivector:
    """f at the symbolic point (y0, ..., yn), with object coefficients."""
    value = f(symbolic_point(f.signature.n))
    return Multivector(value.signature, value.coeffs.astype(object))


def derivative(expr: Multivector, symbol: sympy.Symbol) -> Multivector:
    return Multivector(expr.signature, np.array([sympy.diff(c, symbol) for c in expr.coeffs], dtype=object))


def dirac_expr(expr: Multivector, sign: int, with_y0: bool = True) -> Multivector:
    """d0 + sign * sum e_j dj on an expression in the coordinate symbols."""
    ys = coordinate_symbols(expr.n)
    total = derivative(expr, ys[0]) if with_y0 else None
    for j in range(1, expr.n + 1):
        e_j = Multivector.from_blades(expr.signature, {1 << (j - 1): sympy.Integer(sign)})
        term = mul(e_j, derivative(expr, ys[j]))
        total = term if total is None else total + term
    return total


def laplacian_expr(expr: Multivector) -> Multivector:
    ys = coordinate_symbols(expr.n)
    total = None
    for y in ys:
        term = derivative(derivative(expr, y), y)
        total = term if total is None else total + term
    return total


def symbolic_apply_D(f: CliffordField, convention: SignConvention = DEFAULT_CONVENTION) -> Multivector:
    return dirac_expr(evaluate_symbolic(f), convention.dirac_sign)


def symbolic_apply_D_conj(f: CliffordField, convention: SignConvention = DEFAULT_CONVENTION) -> Multivector:
    return dirac_expr(evaluate_symbolic(f), -convention.dirac_sign)


def symbolic_laplacian(f: CliffordField) -> Multivector:
    return laplacian_expr(evaluate_symbolic(f))


def symbolic_apply_perturbed(
    f: CliffordField,
    mass: MassTerm,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    value = evaluate_symbolic(f)
    d = dirac_expr(value, convention.dirac_sign)
    if mass.is_zero:
        return d
    if not mass.is_scalar:
        lam = mass.as_multivector(value.signature)
        lam = Multivector(lam.signature, np.array([sympy.nsimplify(c) for c in lam.coeffs], dtype=object))
        return d + mul(value, lam) * convention.mass_sign
    return d + value * (sympy.nsimplify(mass.scalar) * convention.mass_sign)


def factorization_defects(
    f: CliffordField,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> tuple[Multivector, Multivector]:
    """(conj(D) D f - lap f, D conj(D) f - lap f) as exact expressions."""
    value = evaluate_symbolic(f)
    sigma = convention.dirac_sign
    lap = laplacian_expr(value)
    first = dirac_expr(dirac_expr(value, sigma), -sigma) - lap
    second = dirac_expr(dirac_expr(value, -sigma), sigma) - lap
    return first, second


def _coefficient_magnitude(c, symbols: Sequence[sympy.Symbol]) -> float:
    expr = sympy.expand(sympy.powsimp(sympy.expand(c)))
    if expr == 0:
        return 0.0
    try:
        poly = sympy.Poly(expr, *symbols)
    except sympy.PolynomialError:
        worst = 0.0
        for shift in range(len(_PROBES)):
            values = {y: _PROBES[(i + shift) % len(_PROBES)] for i, y in enumerate(symbols)}
            worst = max(worst, abs(complex(sympy.N(expr.subs(values)))))
        return worst
    return max((abs(complex(a)) for a in poly.coeffs()), default=0.0)


def symbolic_residual(expr: Multivector) -> float:
    """Largest coefficient magnitude left after expansion; 0.0 means identically zero."""
    symbols = coordinate_symbols(expr.n)
    return max((_coefficient_magnitude(c, symbols) for c in expr.coeffs), default=0.0)


def is_identically_zero(expr: Multivector) -> bool:
    return all(sympy.expand(sympy.powsimp(sympy.expand(c))) == 0 for c in expr.coeffs)
