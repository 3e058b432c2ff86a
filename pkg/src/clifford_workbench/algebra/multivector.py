"""Dense multivectors of Cl(0,n) and the ring operations on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping, Sequence

import numpy as np

from clifford_workbench.algebra.blades import (
    MAX_GENERATORS,
    blade_label,
    conjugation_signs,
    generator_mask,
    grades,
    product_tables,
)
from clifford_workbench.algebra.point import Point
from clifford_workbench.errors import DomainError, SignatureMismatchError, SingularityError


class ScalarMode(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class AlgebraSignature:
    """Cl(0,n) with real or complex scalars."""

    n: int
    scalar_mode: ScalarMode = ScalarMode.REAL

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or not 1 <= self.n <= MAX_GENERATORS:
            raise ValueError(f"n must be an integer in 1..{MAX_GENERATORS}, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "scalar_mode", ScalarMode(self.scalar_mode))

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def dtype(self) -> type:
        return np.complex128 if self.scalar_mode is ScalarMode.COMPLEX else np.float64

    @property
    def is_complex(self) -> bool:
        return self.scalar_mode is ScalarMode.COMPLEX

    def complexified(self) -> AlgebraSignature:
        return AlgebraSignature(self.n, ScalarMode.COMPLEX)

    def join(self, other: AlgebraSignature) -> AlgebraSignature:
        """Common signature of two operands; real promotes to complex."""
        if other.n != self.n:
            raise SignatureMismatchError(f"cannot combine Cl(0,{self.n}) with Cl(0,{other.n})")
        if self.is_complex or other.is_complex:
            return self.complexified()
        return self


def _is_object(arr: np.ndarray) -> bool:
    return arr.dtype == object


@dataclass(frozen=True, eq=False)
class Multivector:
    """An element of Cl(0,n) as 2**n coefficients indexed by blade mask.

    Numeric coefficients are stored as float64 (real mode) or complex128
    (complex mode). Object arrays (Fractions, sympy expressions) are kept
    as they are so that products stay exact.
    """

    signature: AlgebraSignature
    coeffs: np.ndarray

    # numpy scalars on the left defer to __rmul__/__radd__
    __array_ufunc__ = None

    def __post_init__(self):
        arr = np.array(self.coeffs, copy=True)
        if arr.shape != (self.signature.dim,):
            raise ValueError(
                f"Cl(0,{self.signature.n}) needs {self.signature.dim} coefficients, got shape {arr.shape}"
            )
        if not _is_object(arr):
            if np.iscomplexobj(arr) and not self.signature.is_complex:
                if np.any(arr.imag != 0):
                    raise ValueError("complex coefficients in a real-mode multivector")
                arr = arr.real
            arr = arr.astype(self.signature.dtype)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, signature: AlgebraSignature) -> Multivector:
        return cls(signature, np.zeros(signature.dim, dtype=signature.dtype))

    @classmethod
    def scalar(cls, signature: AlgebraSignature, value: Any = 1.0) -> Multivector:
        return cls.blade(signature, 0, value)

    @classmethod
    def blade(cls, signature: AlgebraSignature, mask: int, value: Any = 1.0) -> Multivector:
        if not 0 <= mask < signature.dim:
            raise ValueError(f"blade mask {mask} out of range for n={signature.n}")
        return cls.from_blades(signature, {mask: value})

    @classmethod
    def generator(cls, signature: AlgebraSignature, j: int, value: Any = 1.0) -> Multivector:
        """value * e_j for 1 <= j <= n."""
        if not 1 <= j <= signature.n:
            raise ValueError(f"generator index {j} out of range 1..{signature.n}")
        return cls.blade(signature, generator_mask(j), value)

    @classmethod
    def from_blades(cls, signature: AlgebraSignature, terms: Mapping[int, Any]) -> Multivector:
        values: list[Any] = [0] * signature.dim
        for mask, value in terms.items():
            values[mask] = values[mask] + value
        arr = np.array(values)
        if not _is_object(arr) and not np.iscomplexobj(arr):
            arr = arr.astype(np.float64)
        return _wrap(signature, arr)

    @classmethod
    def paravector(cls, signature: AlgebraSignature, coords: Sequence[Any]) -> Multivector:
        """coords[0] + sum coords[j] e_j."""
        if len(coords) != signature.n + 1:
            raise SignatureMismatchError(
                f"paravector of Cl(0,{signature.n}) needs {signature.n + 1} coordinates, got {len(coords)}"
            )
        terms = {0: coords[0]}
        for j, c in enumerate(coords[1:], start=1):
            terms[generator_mask(j)] = c
        return cls.from_blades(signature, terms)

    # -- structure ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def is_exact(self) -> bool:
        return _is_object(self.coeffs)

    def __getitem__(self, mask: int) -> Any:
        return self.coeffs[mask]

    def grade(self, k: int) -> Multivector:
        """Projection onto grade k."""
        keep = grades(self.n) == k
        arr = np.where(keep, self.coeffs, 0) if not self.is_exact else np.array(
            [c if keep[m] else 0 for m, c in enumerate(self.coeffs)], dtype=object
        )
        return Multivector(self.signature, arr)

    def grades_present(self, tol: float = 0.0) -> set[int]:
        g = grades(self.n)
        return {int(g[m]) for m, c in enumerate(self.coeffs) if _magnitude(c) > tol}

    def scalar_part(self) -> Any:
        return self.coeffs[0]

    def is_paravector(self, tol: float = 0.0) -> bool:
        return self.grades_present(tol) <= {0, 1}

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(_magnitude(c) <= tol for c in self.coeffs)

    def close_to(self, other: Multivector, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        scale = max(modulus(self), modulus(other))
        return modulus(self - other) <= atol + rtol * scale

    def to_complex(self) -> Multivector:
        return Multivector(self.signature.complexified(), self.coeffs)

    def real_part(self) -> Multivector:
        sig = AlgebraSignature(self.n)
        return Multivector(sig, np.real(self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Any) -> Multivector:
        if isinstance(other, Multivector):
            sig = self.signature.join(other.signature)
            return _wrap(sig, self.coeffs + other.coeffs)
        return self + Multivector.scalar(self.signature, other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Multivector:
        if isinstance(other, Multivector):
            sig = self.signature.join(other.signature)
            return _wrap(sig, self.coeffs - other.coeffs)
        return self - Multivector.scalar(self.signature, other)

    def __rsub__(self, other: Any) -> Multivector:
        return Multivector.scalar(self.signature, other) - self

    def __neg__(self) -> Multivector:
        return Multivector(self.signature, -self.coeffs)

    def __mul__(self, other: Any) -> Multivector:
        if isinstance(other, Multivector):
            return mul(self, other)
        return _wrap(self.signature, self.coeffs * other)

    def __rmul__(self, other: Any) -> Multivector:
        # scalars commute with every blade
        return _wrap(self.signature, self.coeffs * other)

    def __truediv__(self, other: Any) -> Multivector:
        if isinstance(other, Multivector):
            raise TypeError("divide by a paravector with inverse_paravector()")
        return _wrap(self.signature, self.coeffs / other)

    def power(self, k: int) -> Multivector:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Multivector.scalar(self.signature, 1 if self.is_exact else 1.0)
        for _ in range(k):
            result = mul(result, self)
        return result

    def conjugate(self) -> Multivector:
        return conjugate(self)

    def __repr__(self) -> str:
        parts = [
            f"{c}*{blade_label(m)}" for m, c in enumerate(self.coeffs) if _magnitude(c) != 0
        ]
        body = " + ".join(parts) if parts else "0"
        return f"Multivector(n={self.n}, {self.signature.scalar_mode.value}: {body})"


def _magnitude(c: Any) -> float:
    try:
        return abs(complex(c))
    except TypeError:
        # unevaluated symbolic coefficient
        return math.inf if c != 0 else 0.0


def _wrap(signature: AlgebraSignature, arr: np.ndarray) -> Multivector:
    if not _is_object(arr) and np.iscomplexobj(arr) and not signature.is_complex:
        signature = signature.complexified()
    return Multivector(signature, arr)


def mul(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product a*b (bilinear extension of blade_product)."""
    sig = a.signature.join(b.signature)
    index, sign = product_tables(sig.n)
    if a.is_exact or b.is_exact:
        sign = sign.astype(object)
        coeffs = (a.coeffs.astype(object)[:, None] * sign * b.coeffs.astype(object)[index]).sum(axis=0)
    else:
        coeffs = (a.coeffs[:, None] * sign * b.coeffs[index]).sum(axis=0)
    return _wrap(sig, coeffs)


def mul_batch(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Row-wise Clifford product of stacked coefficient arrays of shape (m, 2**n)."""
    index, sign = product_tables(n)
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[-1] != 1 << n or b.shape[-1] != 1 << n:
        raise SignatureMismatchError(f"coefficient rows must have length {1 << n}")
    return (a[:, :, None] * sign[None, :, :] * b[:, index]).sum(axis=1)


def conjugate(a: Multivector) -> Multivector:
    """Clifford conjugation, the anti-automorphism negating every e_j."""
    signs = conjugation_signs(a.n)
    if a.is_exact:
        return Multivector(a.signature, a.coeffs * signs.astype(object))
    return Multivector(a.signature, a.coeffs * signs)


def embed_point(p: Point, signature: AlgebraSignature | None = None) -> Multivector:
    """y0 e0 + sum y_j e_j."""
    signature = signature or AlgebraSignature(p.n)
    if p.n != signature.n:
        raise SignatureMismatchError(f"point of dimension {p.n} does not embed in Cl(0,{signature.n})")
    return Multivector.paravector(signature, p.coords)


def modulus(a: Multivector) -> float:
    """Euclidean norm of the coefficient sequence."""
    if a.is_exact:
        return float(np.linalg.norm(np.array([complex(c) for c in a.coeffs])))
    return float(np.linalg.norm(a.coeffs))


def inverse_paravector(y: Multivector) -> Multivector:
    if not y.is_paravector():
        raise DomainError(f"not a paravector: grades {sorted(y.grades_present())}")
    if y.is_exact:
        norm_sq = sum(c * c for c in y.coeffs)
        if norm_sq == 0:
            raise SingularityError("inverse of the zero paravector")
        return conjugate(y) / norm_sq
    norm_sq = float(np.sum(np.abs(y.coeffs) ** 2))
    if norm_sq == 0.0:
        raise SingularityError("inverse of the zero paravector")
    if y.signature.is_complex:
        # y * conj(y) = sum y_k^2 for complex coordinates
        norm_sq = complex(np.sum(y.coeffs**2))
        if norm_sq == 0:
            raise SingularityError("paravector with vanishing quadratic form has no inverse")
    return conjugate(y) / norm_sq


def left_multiplication_matrix(a: Multivector) -> np.ndarray:
    """Matrix L with coeffs(a * b) = L @ coeffs(b)."""
    index, sign = product_tables(a.n)
    dim = a.signature.dim
    mat = np.zeros((dim, dim), dtype=a.coeffs.dtype)
    rows = np.broadcast_to(np.arange(dim)[None, :], (dim, dim))
    mat[rows, index] = a.coeffs[:, None] * sign
    return mat
