"""Basis blade arithmetic of Cl(0,n) on bitmask-indexed blades.

Bit j-1 of a mask set means generator e_j is present; mask 0 is e0 = 1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_GENERATORS = 6


def generator_mask(j: int) -> int:
    """Mask of the single generator e_j (1-indexed)."""
    return 1 << (j - 1)


def grade_of(mask: int) -> int:
    return mask.bit_count()


def blade_product(mask_a: int, mask_b: int, n: int) -> tuple[int, int]:
    """Return (sign, mask) with e_A e_B = sign * e_(A xor B).

    The sign counts the transpositions needed to bring the concatenated
    generator word into canonical order, plus one factor -1 for every
    generator shared by both blades (e_j^2 = -1).
    """
    if not (0 <= mask_a < (1 << n) and 0 <= mask_b < (1 << n)):
        raise ValueError(f"blade masks must be below 2**{n}: got {mask_a}, {mask_b}")

    swaps = 0
    a = mask_a >> 1
    while a:
        swaps += (a & mask_b).bit_count()
        a >>= 1
    swaps += (mask_a & mask_b).bit_count()
    sign = -1 if swaps % 2 else 1
    return sign, mask_a ^ mask_b


def blade_product_bruteforce(mask_a: int, mask_b: int, n: int) -> tuple[int, int]:
    """Reference product: bubble-sort the generator word and contract pairs."""
    word = [j for j in range(1, n + 1) if mask_a & generator_mask(j)]
    word += [j for j in range(1, n + 1) if mask_b & generator_mask(j)]

    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True

    reduced: list[int] = []
    for j in word:
        if reduced and reduced[-1] == j:
            reduced.pop()
            sign = -sign
        else:
            reduced.append(j)

    mask = 0
    for j in reduced:
        mask |= generator_mask(j)
    return sign, mask


@lru_cache(maxsize=None)
def product_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gather tables for the Clifford product.

    With ``index[i, k] = i ^ k`` and ``sign[i, k]`` the sign of
    ``e_i e_(i^k)``, the product coefficients are
    ``c[k] = sum_i a[i] * sign[i, k] * b[index[i, k]]``.
    """
    size = 1 << n
    masks = np.arange(size)
    index = masks[:, None] ^ masks[None, :]
    sign = np.empty((size, size), dtype=np.int8)
    for i in range(size):
        for k in range(size):
            sign[i, k] = blade_product(i, i ^ k, n)[0]
    index.setflags(write=False)
    sign.setflags(write=False)
    return index, sign


@lru_cache(maxsize=None)
def grades(n: int) -> np.ndarray:
    """Grade of every blade, indexed by mask."""
    out = np.array([grade_of(m) for m in range(1 << n)], dtype=np.int64)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def conjugation_signs(n: int) -> np.ndarray:
    """Clifford conjugation multiplies a grade-k blade by (-1)^(k(k+1)/2)."""
    k = grades(n)
    out = np.where((k * (k + 1) // 2) % 2 == 0, 1, -1).astype(np.int8)
    out.setflags(write=False)
    return out


def blade_label(mask: int) -> str:
    if mask == 0:
        return "e0"
    return "e" + "".join(str(j) for j in range(1, MAX_GENERATORS + 1) if mask & generator_mask(j))
