"""Clifford exponential by truncated power series with scaling and squaring."""

from __future__ import annotations

import logging
import math

import numpy as np

from clifford_workbench.algebra.multivector import Multivector, modulus, mul
from clifford_workbench.config.defaults import MAX_SERIES_TERMS, SERIES_TOLERANCE
from clifford_workbench.errors import SeriesDivergenceError

logger = logging.getLogger(__name__)


def exp_series(
    a: Multivector,
    tol: float = SERIES_TOLERANCE,
    max_terms: int = MAX_SERIES_TERMS,
) -> Multivector:
    """Plain partial sums of sum a^j / j!.

    Stops once the added term's modulus is at most tol * (1 + |sum|).
    """
    total = Multivector.scalar(a.signature, 1.0)
    term = total
    last = math.inf
    for j in range(1, max_terms + 1):
        term = mul(term, a) / j
        total = total + term
        last = modulus(term)
        if last <= tol * (1.0 + modulus(total)):
            return total
    raise SeriesDivergenceError(f"exponential series did not settle within {max_terms} terms", last)


def clifford_exp(
    a: Multivector,
    tol: float = SERIES_TOLERANCE,
    max_terms: int = MAX_SERIES_TERMS,
) -> Multivector:
    """exp(a) for any numeric multivector.

    a is halved k times until |a| <= 2**(-1 - n/2), which bounds every
    series term by 2**-j / j! since |xy| <= 2**(n/2) |x| |y|. The series
    result is then squared k times.
    """
    if a.is_exact:
        raise TypeError("clifford_exp needs numeric coefficients")
    if not np.all(np.isfinite(a.coeffs)):
        raise SeriesDivergenceError("non-finite exponent", math.inf)

    norm = modulus(a)
    target = 2.0 ** (-1.0 - a.n / 2.0)
    squarings = 0 if norm <= target else int(math.ceil(math.log2(norm / target)))
    result = exp_series(a / (2.0**squarings), tol, max_terms)
    for _ in range(squarings):
        result = mul(result, result)

    if not np.all(np.isfinite(result.coeffs)):
        raise SeriesDivergenceError("exponential overflowed while squaring back", norm)
    if squarings > 30:
        logger.debug("clifford_exp squared %d times for |a| = %.3e", squarings, norm)
    return result
