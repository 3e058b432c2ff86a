"""Quadrature rules on spheres, box boundaries and balls, with outward normals.

Rule files are plain text: ``#`` header lines followed by one row per
node with columns ``y0 .. yn weight`` and, for surface rules,
``nu0 .. nun``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np
from numpy.polynomial.legendre import leggauss

from clifford_workbench.algebra.point import Point
from clifford_workbench.config.defaults import (
    CIRCLE_NODES_PER_LEVEL,
    FACE_NODES_PER_LEVEL,
    POLAR_NODES_PER_LEVEL,
    RADIAL_NODES_PER_LEVEL,
)
from clifford_workbench.errors import DomainError, ReportIOError

logger = logging.getLogger(__name__)

SURFACE_DIMENSIONS = (1, 2, 3)
VOLUME_DIMENSIONS = (1, 2)


@dataclass(frozen=True)
class SphereSurface:
    center: Point
    radius: float = 1.0

    kind = "sphere"

    @property
    def n(self) -> int:
        return self.center.n

    def boundary_distance(self, p: Point) -> float:
        return abs(self.center.distance(p) - self.radius)

    def describe(self) -> str:
        return f"sphere center={_fmt(self.center.coords)} radius={self.radius!r}"


@dataclass(frozen=True)
class BoxBoundary:
    lo: tuple[float, ...]
    hi: tuple[float, ...]

    kind = "box"

    def __post_init__(self):
        object.__setattr__(self, "lo", tuple(float(v) for v in self.lo))
        object.__setattr__(self, "hi", tuple(float(v) for v in self.hi))
        if len(self.lo) != len(self.hi) or len(self.lo) < 2:
            raise DomainError("box corners need matching lengths n+1 >= 2")
        if any(b <= a for a, b in zip(self.lo, self.hi)):
            raise DomainError(f"degenerate box {self.lo} .. {self.hi}")

    @property
    def n(self) -> int:
        return len(self.lo) - 1

    @classmethod
    def unit_cube(cls, n: int) -> BoxBoundary:
        return cls(lo=(0.0,) * (n + 1), hi=(1.0,) * (n + 1))

    @classmethod
    def centered(cls, n: int, half_width: float = 1.0) -> BoxBoundary:
        return cls(lo=(-half_width,) * (n + 1), hi=(half_width,) * (n + 1))

    def contains(self, p: Point) -> bool:
        return all(a < c < b for a, c, b in zip(self.lo, p.coords, self.hi))

    def boundary_distance(self, p: Point) -> float:
        c = np.asarray(p.coords, dtype=float)
        lo, hi = np.array(self.lo), np.array(self.hi)
        if self.contains(p):
            return float(min(np.min(c - lo), np.min(hi - c)))
        return float(np.linalg.norm(np.maximum(np.maximum(lo - c, c - hi), 0.0)))

    def describe(self) -> str:
        return f"box lo={_fmt(self.lo)} hi={_fmt(self.hi)}"


@dataclass(frozen=True)
class BallVolume:
    center: Point
    radius: float = 1.0

    kind = "ball"

    @property
    def n(self) -> int:
        return self.center.n

    def describe(self) -> str:
        return f"ball center={_fmt(self.center.coords)} radius={self.radius!r}"


Domain = Union[SphereSurface, BoxBoundary, BallVolume]


def _fmt(values) -> str:
    return ",".join(repr(float(v)) for v in values)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes (m, n+1), positive weights (m,) and, for surfaces, unit outward normals (m, n+1)."""

    domain: Domain
    nodes: np.ndarray
    weights: np.ndarray
    normals: np.ndarray | None = None
    refinement: int = 0
    _points: list[Point] = field(init=False, default=None, repr=False, compare=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 2 or nodes.shape[1] != self.domain.n + 1:
            raise DomainError(f"nodes must have shape (m, {self.domain.n + 1}), got {nodes.shape}")
        if weights.shape != (nodes.shape[0],):
            raise DomainError("one weight per node required")
        if np.any(weights <= 0):
            raise DomainError("quadrature weights must be positive")
        if self.is_surface:
            if self.normals is None:
                raise DomainError(f"{self.domain.kind} rules need outward normals")
            normals = np.asarray(self.normals, dtype=float)
            if normals.shape != nodes.shape:
                raise DomainError("one normal per node required")
            if not np.allclose(np.linalg.norm(normals, axis=1), 1.0, atol=1e-12):
                raise DomainError("normals must have unit modulus")
            normals.setflags(write=False)
            object.__setattr__(self, "normals", normals)
        elif self.normals is not None:
            raise DomainError("volume rules carry no normals")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_points", [Point.from_coords(row) for row in nodes.tolist()])

    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def size(self) -> int:
        return self.nodes.shape[0]

    @property
    def is_surface(self) -> bool:
        return not isinstance(self.domain, BallVolume)

    @property
    def points(self) -> list[Point]:
        return self._points

    def total_weight(self) -> float:
        return float(pairwise_sum(self.weights))

    @property
    def spacing(self) -> float:
        """Typical node spacing: (measure / nodes) to the power 1 / dimension of the domain."""
        dim = self.n if self.is_surface else self.n + 1
        return (self.total_weight() / self.size) ** (1.0 / dim)


def pairwise_sum(values: np.ndarray, block: int = 8) -> np.ndarray:
    """Sum along axis 0 by recursive halving in a fixed order."""
    values = np.asarray(values)
    m = values.shape[0]
    if m == 0:
        return np.zeros(values.shape[1:], dtype=values.dtype)
    if m <= block:
        total = values[0].copy()
        for row in values[1:]:
            total = total + row
        return total
    mid = m // 2
    return pairwise_sum(values[:mid], block) + pairwise_sum(values[mid:], block)


def _unit_sphere(n: int, refinement: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes on S^n in R^(n+1) and their surface weights."""
    if n == 1:
        count = CIRCLE_NODES_PER_LEVEL * refinement
        theta = 2.0 * np.pi * np.arange(count) / count
        nodes = np.column_stack([np.cos(theta), np.sin(theta)])
        return nodes, np.full(count, 2.0 * np.pi / count)

    if n == 2:
        polar = POLAR_NODES_PER_LEVEL * refinement
        azimuthal = 2 * polar
        t, w_t = leggauss(polar)
        phi = 2.0 * np.pi * np.arange(azimuthal) / azimuthal
        tt, pp = np.meshgrid(t, phi, indexing="ij")
        ring = np.sqrt(1.0 - tt**2)
        nodes = np.column_stack([tt.ravel(), (ring * np.cos(pp)).ravel(), (ring * np.sin(pp)).ravel()])
        weights = np.repeat(w_t * (2.0 * np.pi / azimuthal), azimuthal)
        return nodes, weights

    if n == 3:
        count = POLAR_NODES_PER_LEVEL * refinement
        x, w_x = leggauss(count)
        chi = 0.5 * np.pi * (x + 1.0)
        w_chi = 0.5 * np.pi * w_x * np.sin(chi) ** 2
        inner, w_inner = _unit_sphere(2, refinement)
        shell = (np.sin(chi)[:, None, None] * inner[None, :, :]).reshape(-1, 3)
        nodes = np.column_stack([np.repeat(np.cos(chi), inner.shape[0]), shell])
        weights = np.outer(w_chi, w_inner).ravel()
        return nodes, weights

    raise DomainError(f"sphere rules exist for n in {SURFACE_DIMENSIONS}, got n={n}")


def _sphere_rule(domain: SphereSurface, refinement: int) -> QuadratureRule:
    unit, w = _unit_sphere(domain.n, refinement)
    nodes = domain.center.as_array()[None, :] + domain.radius * unit
    return QuadratureRule(
        domain=domain,
        nodes=nodes,
        weights=w * domain.radius**domain.n,
        normals=unit,
        refinement=refinement,
    )


def _box_rule(domain: BoxBoundary, refinement: int) -> QuadratureRule:
    n = domain.n
    if n not in SURFACE_DIMENSIONS:
        raise DomainError(f"box rules exist for n in {SURFACE_DIMENSIONS}, got n={n}")
    count = FACE_NODES_PER_LEVEL * refinement
    x, w = leggauss(count)
    lo, hi = np.array(domain.lo), np.array(domain.hi)

    nodes, weights, normals = [], [], []
    for axis in range(n + 1):
        others = [a for a in range(n + 1) if a != axis]
        grids = [0.5 * (hi[a] - lo[a]) * (x + 1.0) + lo[a] for a in others]
        scales = [0.5 * (hi[a] - lo[a]) * w for a in others]
        mesh = np.meshgrid(*grids, indexing="ij")
        wmesh = np.meshgrid(*scales, indexing="ij")
        face_w = np.prod(np.stack([m.ravel() for m in wmesh]), axis=0)
        for side, value in ((-1.0, lo[axis]), (1.0, hi[axis])):
            face = np.empty((face_w.size, n + 1))
            face[:, axis] = value
            for a, m in zip(others, mesh):
                face[:, a] = m.ravel()
            nu = np.zeros_like(face)
            nu[:, axis] = side
            nodes.append(face)
            weights.append(face_w)
            normals.append(nu)
    return QuadratureRule(
        domain=domain,
        nodes=np.vstack(nodes),
        weights=np.concatenate(weights),
        normals=np.vstack(normals),
        refinement=refinement,
    )


def _ball_rule(domain: BallVolume, refinement: int) -> QuadratureRule:
    n = domain.n
    if n not in VOLUME_DIMENSIONS:
        raise DomainError(f"ball rules exist for n in {VOLUME_DIMENSIONS}, got n={n}")
    x, w = leggauss(RADIAL_NODES_PER_LEVEL * refinement)
    rho = 0.5 * domain.radius * (x + 1.0)
    w_rho = 0.5 * domain.radius * w * rho**n
    unit, w_unit = _unit_sphere(n, refinement)
    nodes = domain.center.as_array()[None, :] + (rho[:, None, None] * unit[None, :, :]).reshape(-1, n + 1)
    return QuadratureRule(
        domain=domain,
        nodes=nodes,
        weights=np.outer(w_rho, w_unit).ravel(),
        refinement=refinement,
    )


def build_rule(domain: Domain, refinement: int) -> QuadratureRule:
    if refinement < 1:
        raise ValueError(f"refinement must be >= 1, got {refinement}")
    if isinstance(domain, SphereSurface):
        rule = _sphere_rule(domain, refinement)
    elif isinstance(domain, BoxBoundary):
        rule = _box_rule(domain, refinement)
    elif isinstance(domain, BallVolume):
        rule = _ball_rule(domain, refinement)
    else:
        raise DomainError(f"unknown quadrature domain {domain!r}")
    logger.debug("built %s rule, refinement %d: %d nodes", domain.kind, refinement, rule.size)
    return rule


def export_rule(rule: QuadratureRule, path: str | Path) -> Path:
    """Write the rule as a whitespace-separated table with a ``#`` header."""
    path = Path(path)
    n = rule.n
    columns = [f"y{a}" for a in range(n + 1)] + ["weight"]
    table = [rule.nodes, rule.weights[:, None]]
    if rule.is_surface:
        columns += [f"nu{a}" for a in range(n + 1)]
        table.append(rule.normals)
    header = "\n".join([
        "clifford-workbench quadrature rule",
        f"domain: {rule.domain.describe()}",
        f"refinement: {rule.refinement}",
        "columns: " + " ".join(columns),
    ])
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savetxt(path, np.hstack(table), fmt="%.17g", header=header, comments="# ")
    except OSError as exc:
        raise ReportIOError(path, str(exc)) from exc
    return path


def parse_domain(text: str) -> Domain:
    """Inverse of ``describe()`` on the three domain types."""
    kind, *fields = text.split()
    values = dict(item.split("=", 1) for item in fields)

    def floats(key: str) -> tuple[float, ...]:
        return tuple(float(v) for v in values[key].split(","))

    try:
        if kind == "sphere":
            return SphereSurface(Point.from_coords(floats("center")), float(values["radius"]))
        if kind == "ball":
            return BallVolume(Point.from_coords(floats("center")), float(values["radius"]))
        if kind == "box":
            return BoxBoundary(floats("lo"), floats("hi"))
    except (KeyError, ValueError) as exc:
        raise DomainError(f"malformed domain description {text!r}") from exc
    raise DomainError(f"unknown domain kind {kind!r}")


def import_rule(path: str | Path, domain: Domain | None = None) -> QuadratureRule:
    """Read a rule table; ``domain`` overrides the header for third-party tables."""
    path = Path(path)
    refinement = 0
    try:
        with path.open() as fh:
            header = [line[1:].strip() for line in fh if line.startswith("#")]
        table = np.loadtxt(path, comments="#", ndmin=2)
    except OSError as exc:
        raise ReportIOError(path, str(exc)) from exc

    for line in header:
        key, _, value = line.partition(":")
        if key == "domain" and domain is None:
            domain = parse_domain(value.strip())
        elif key == "refinement":
            refinement = int(value)
    if domain is None:
        raise DomainError(f"{path}: no '# domain:' header and no domain given")

    width = domain.n + 1
    normals = None
    if isinstance(domain, BallVolume):
        expected = width + 1
    else:
        expected = 2 * width + 1
        normals = table[:, width + 1:]
    if table.shape[1] != expected:
        raise DomainError(f"{path}: expected {expected} columns for n={domain.n}, found {table.shape[1]}")
    return QuadratureRule(
        domain=domain,
        nodes=table[:, :width],
        weights=table[:, width],
        normals=normals,
        refinement=refinement,
    )
