"""Points of R^(n+1) with a distinguished coordinate y0."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np


@dataclass(frozen=True)
class Point:
    """A point (y0, y1, ..., yn).

    Coordinates are usually floats; sympy symbols are accepted so that
    fields can be evaluated symbolically.
    """

    y0: Any
    spatial: tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "spatial", tuple(self.spatial))

    @classmethod
    def from_coords(cls, coords: Sequence[Any]) -> Point:
        coords = list(coords)
        if not coords:
            raise ValueError("a point needs at least the y0 coordinate")
        return cls(y0=coords[0], spatial=tuple(coords[1:]))

    @classmethod
    def origin(cls, n: int) -> Point:
        return cls(y0=0.0, spatial=(0.0,) * n)

    @property
    def n(self) -> int:
        return len(self.spatial)

    @property
    def coords(self) -> tuple[Any, ...]:
        return (self.y0, *self.spatial)

    def as_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=float)

    def shifted(self, axis: int, delta: float) -> Point:
        """Move along coordinate ``axis`` (0 is y0)."""
        coords = list(self.coords)
        coords[axis] = coords[axis] + delta
        return Point.from_coords(coords)

    def norm(self) -> float:
        return math.hypot(*(float(c) for c in self.coords))

    def distance(self, other: Point) -> float:
        return (self - other).norm()

    def __add__(self, other: Point) -> Point:
        self._check(other)
        return Point.from_coords([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: Point) -> Point:
        self._check(other)
        return Point.from_coords([a - b for a, b in zip(self.coords, other.coords)])

    def scaled(self, factor: float) -> Point:
        return Point.from_coords([factor * c for c in self.coords])

    def _check(self, other: Point) -> None:
        if other.n != self.n:
            raise ValueError(f"points of different dimension: {self.n} vs {other.n}")
