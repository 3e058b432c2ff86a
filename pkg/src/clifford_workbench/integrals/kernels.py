"""Cauchy and Bergman kernels and the closed-form constants around them."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from clifford_workbench.algebra.blades import generator_mask
from clifford_workbench.algebra.exponential import clifford_exp
from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, mul, mul_batch
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import DEFAULT_CONVENTION, SignConvention
from clifford_workbench.config.defaults import (
    BERGMAN_CALIBRATION_REFINEMENT,
    CALIBRATION_DIAGNOSTIC_THRESHOLD,
)
from clifford_workbench.errors import DomainError, SingularityError
from clifford_workbench.integrals.quadrature import BallVolume, build_rule, pairwise_sum
from clifford_workbench.mass.terms import MassKind, MassTerm

logger = logging.getLogger(__name__)


def cauchy_normalization(n: int) -> float:
    """Gamma((n+1)/2) / (2 pi^((n+1)/2)), the reciprocal area of the unit n-sphere."""
    return math.gamma((n + 1) / 2) / (2.0 * math.pi ** ((n + 1) / 2))


def ball_volume(n: int, radius: float = 1.0) -> float:
    """Volume of the ball of given radius in R^(n+1)."""
    return math.pi ** ((n + 1) / 2) * radius ** (n + 1) / math.gamma((n + 3) / 2)


def mean_value_constant(n: int, radius: float = 1.0) -> float:
    """(n+1) Gamma((n+1)/2) / (2 R^(n+1) pi^((n+1)/2)), which equals 1 / ball_volume."""
    return (n + 1) * math.gamma((n + 1) / 2) / (2.0 * radius ** (n + 1) * math.pi ** ((n + 1) / 2))


@dataclass(frozen=True)
class KernelParams:
    n: int
    normalization: float | None = None

    def __post_init__(self):
        if self.normalization is None:
            object.__setattr__(self, "normalization", cauchy_normalization(self.n))
        if not self.normalization > 0:
            raise ValueError(f"kernel normalization must be positive, got {self.normalization}")


def oriented_paravectors(coords: np.ndarray, convention: SignConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Rows p0 + sigma sum p_j e_j as coefficient arrays, shape (m, 2**n)."""
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    n = coords.shape[1] - 1
    out = np.zeros((coords.shape[0], 1 << n))
    out[:, 0] = coords[:, 0]
    for j in range(1, n + 1):
        out[:, generator_mask(j)] = convention.dirac_sign * coords[:, j]
    return out


def oriented_normal(normal: np.ndarray, convention: SignConvention = DEFAULT_CONVENTION) -> Multivector:
    """The surface element direction nu0 + sigma sum nu_j e_j of an outward normal."""
    normal = np.asarray(normal, dtype=float)
    return Multivector(AlgebraSignature(normal.size - 1), oriented_paravectors(normal, convention)[0])


def _conjugate_rows(rows: np.ndarray) -> np.ndarray:
    """Clifford conjugate of paravector rows."""
    out = -rows
    out[:, 0] = rows[:, 0]
    return out


def cauchy_kernel_batch(
    x: Point,
    nodes: np.ndarray,
    kp: KernelParams,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> np.ndarray:
    """E(y - x) for every row y of ``nodes``."""
    diff = np.asarray(nodes, dtype=float) - x.as_array()[None, :]
    dist = np.linalg.norm(diff, axis=1)
    if np.any(dist == 0.0):
        raise SingularityError(f"Cauchy kernel evaluated at its pole {x.coords}")
    numer = _conjugate_rows(oriented_paravectors(diff, convention))
    return kp.normalization * numer / dist[:, None] ** (kp.n + 1)


def cauchy_kernel(
    x: Point,
    y: Point,
    kp: KernelParams | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """normalization * conj(y - x) / |y - x|^(n+1)."""
    kp = kp or KernelParams(x.n)
    if x.n != kp.n or y.n != kp.n:
        raise DomainError(f"kernel of dimension {kp.n} evaluated at points of dimension {x.n}, {y.n}")
    row = cauchy_kernel_batch(x, y.as_array()[None, :], kp, convention)[0]
    return Multivector(AlgebraSignature(kp.n), row)


def bergman_prefactor(n: int) -> float:
    return math.gamma((n + 1) / 2) * (n + 1) / (2.0 * math.pi ** ((n + 1) / 2))


def bergman_kernel_batch(
    x: Point,
    nodes: np.ndarray,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> np.ndarray:
    """Unit-ball kernel B(x, y) for every row y, without mass factor or calibration.

    (n+1)/q^((n+1)/2) - 2 conj(x) y / q^((n+1)/2)
    + (n+1) conj(y - x|y|^2) (x - y|x|^2) / q^((n+3)/2),
    with q = 1 - 2<y,x> + |y|^2 |x|^2.
    """
    n = x.n
    ys = np.atleast_2d(np.asarray(nodes, dtype=float))
    xs = x.as_array()
    x_sq = float(xs @ xs)
    y_sq = np.einsum("ij,ij->i", ys, ys)
    q = 1.0 - 2.0 * ys @ xs + y_sq * x_sq
    if np.any(q <= 0.0):
        raise DomainError("Bergman denominator is not positive; points must lie inside the unit ball")

    m = ys.shape[0]
    big_x = np.broadcast_to(oriented_paravectors(xs, convention), (m, 1 << n))
    big_y = oriented_paravectors(ys, convention)
    low = q ** ((n + 1) / 2)
    high = q ** ((n + 3) / 2)

    out = np.zeros((m, 1 << n))
    out[:, 0] = (n + 1) / low
    out -= 2.0 * mul_batch(_conjugate_rows(big_x), big_y, n) / low[:, None]
    left = _conjugate_rows(big_y - big_x * y_sq[:, None])
    right = big_x - big_y * x_sq
    out += (n + 1) * mul_batch(left, right, n) / high[:, None]
    return bergman_prefactor(n) * out


def _check_in_ball(p: Point, what: str) -> None:
    if p.norm() >= 1.0:
        raise DomainError(f"{what} {p.coords} is not inside the open unit ball")


def bergman_kernel(
    x: Point,
    y: Point,
    mass: MassTerm | None = None,
    convention: SignConvention = DEFAULT_CONVENTION,
    calibration: float = 1.0,
) -> Multivector:
    """calibration * B(x, y) times the mass factor e^(kappa (y0 - x0) lambda).

    For a Clifford lambda the factor multiplies from the right.
    """
    _check_in_ball(x, "x")
    _check_in_ball(y, "y")
    if x.n != y.n:
        raise DomainError("kernel points of different dimension")
    sig = AlgebraSignature(x.n)
    value = Multivector(sig, calibration * bergman_kernel_batch(x, y.as_array()[None, :], convention)[0])
    mass = mass or MassTerm.zero()
    t = convention.mass_sign * (y.y0 - x.y0)
    if mass.kind is MassKind.RIGHT_SCALAR:
        return value * math.exp(t * mass.scalar)
    if mass.kind is MassKind.RIGHT_CLIFFORD:
        return mul(value, clifford_exp(mass.as_multivector(sig) * t))
    return value


@dataclass(frozen=True)
class BergmanCalibration:
    constant: float
    raw_integral: float
    refinement: int
    diagnostic: str | None = None


@lru_cache(maxsize=None)
def calibrate_bergman(
    n: int,
    refinement: int = BERGMAN_CALIBRATION_REFINEMENT,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> BergmanCalibration:
    """Scale fixed by reproducing the constant e0 at the centre of the unit ball."""
    rule = build_rule(BallVolume(Point.origin(n), 1.0), refinement)
    values = bergman_kernel_batch(Point.origin(n), rule.nodes, convention)
    raw = float(pairwise_sum(values * rule.weights[:, None])[0])
    constant = 1.0 / raw
    diagnostic = None
    if abs(constant - 1.0) > CALIBRATION_DIAGNOSTIC_THRESHOLD:
        diagnostic = (
            f"unit-ball kernel integrates to {raw:.6f} instead of 1 at x = 0; "
            f"calibration constant {constant:.6f} applied"
        )
        logger.warning("Bergman calibration for n=%d: %s", n, diagnostic)
    return BergmanCalibration(constant=constant, raw_integral=raw, refinement=refinement, diagnostic=diagnostic)


def bergman_symmetry_defect(
    x: Point,
    y: Point,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> float:
    """|<B(x,y)>_0 - <B(y,x)>_0| for the massless kernel."""
    forward = bergman_kernel(x, y, convention=convention)
    backward = bergman_kernel(y, x, convention=convention)
    return abs(float(forward.scalar_part()) - float(backward.scalar_part()))


def coordinate_form_element(
    axis: int,
    side: float,
    n: int,
    convention: SignConvention = DEFAULT_CONVENTION,
) -> Multivector:
    """sum_j (-1)^j eps_j dx_0 ^ .. [dx_j] .. ^ dx_n restricted to a box face, per unit dS.

    eps_0 = e0 and eps_j = sigma e_j. On the face x_axis = const with
    outward normal side * E_axis only the j = axis term survives, and its
    form restricts to (-1)^axis side dS.
    """
    if not 0 <= axis <= n:
        raise DomainError(f"axis {axis} out of range 0..{n}")
    if side not in (-1.0, 1.0):
        raise DomainError(f"face side must be -1 or +1, got {side}")
    sig = AlgebraSignature(n)
    total = Multivector.zero(sig)
    for j in range(n + 1):
        restriction = (-1) ** j * side if j == axis else 0.0
        if restriction:
            eps = Multivector.scalar(sig) if j == 0 else Multivector.generator(sig, j, float(convention.dirac_sign))
            total = total + eps * ((-1) ** j * restriction)
    return total
