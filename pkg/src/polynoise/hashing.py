"""Permutation-polynomial hashing of lattice coordinates.

The production path evaluates ``(34*x + 1)*x mod 289`` in binary32 on
coordinates pre-reduced modulo 289, which keeps every intermediate below
2**24 and therefore exact.  The checker functions use Python integers as an
independent exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .f32core import F32, f32, floor32, mod32

MODULUS = F32(289.0)
_A = F32(34.0)
_B = F32(1.0)

#: largest |x| for which the naive polynomial stays below 2**24
NAIVE_EXACT_BOUND = 702


@dataclass(frozen=True)
class PermutationPolynomial:
    """``(A*x**2 + B*x) mod M`` over the residues ``0..M-1``."""

    A: int
    B: int
    M: int

    def __call__(self, x: int) -> int:
        return (self.A * x * x + self.B * x) % self.M

    def image(self) -> tuple[int, ...]:
        return tuple(self(x) for x in range(self.M))


PERMUTE_POLY = PermutationPolynomial(34, 1, 289)


def check_permutation_polynomial(poly: PermutationPolynomial) -> tuple[bool, tuple[int, ...]]:
    """Brute-force bijectivity check with exact integer arithmetic."""
    if poly.M < 1:
        raise ValueError("modulus must be positive")
    if poly.M > 10**6:
        raise ValueError("modulus too large for brute force")
    image = poly.image()
    return len(set(image)) == poly.M, image


def mod289(x):
    """Reduce integer-valued binary32 lattice coordinates into ``[0, 289)``."""
    x = f32(x)
    assert np.all(floor32(x) == x), "mod289 expects integer-valued input"
    return mod32(x, MODULUS)


def permute(x):
    """``((x*34)+1)*x mod 289`` in binary32.

    Exact as long as ``|x| <= 702``; callers feed pre-reduced coordinates
    plus small offsets, which stays far inside that bound.
    """
    return mod32((x * _A + _B) * x, MODULUS)


def hash_corner(*coords):
    """Nested permutation hash, last coordinate innermost.

    ``hash_corner(x, y)`` is ``permute(permute(y) + x)``; each argument is a
    pre-reduced lattice coordinate, optionally already offset by a corner
    step of 0 or 1.
    """
    h = permute(coords[-1])
    for c in reversed(coords[:-1]):
        h = permute(h + c)
    return h


def hash_corner2(i):
    return hash_corner(*i)


def hash_corner3(i):
    return hash_corner(*i)


def hash_corner4(i):
    return hash_corner(*i)


def naive_permute(x):
    """Polynomial hash WITHOUT the mod-289 pre-reduction (binary32)."""
    x = f32(x)
    return mod32((x * _A + _B) * x, MODULUS)


def naive_permute_truncation_probe(x: int) -> tuple[np.float32, int, bool]:
    """Compare the un-reduced binary32 hash against exact integer arithmetic."""
    if abs(x) >= 2**24:
        raise ValueError("|x| must be below 2**24")
    got = F32(naive_permute(F32(x)))
    exact = PERMUTE_POLY(x)
    return got, exact, float(got) == exact
