"""Arithmetic in Z_ell and its unit group.

Residues are plain ints kept as least nonnegative representatives.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd


def is_unit(x: int, ell: int) -> bool:
    if ell == 1:
        return True
    return gcd(x % ell, ell) == 1


@lru_cache(maxsize=None)
def _units(ell: int) -> tuple[int, ...]:
    if ell == 1:
        return (0,)
    return tuple(x for x in range(1, ell) if gcd(x, ell) == 1)


def units(ell: int) -> list[int]:
    """All units of Z_ell in increasing order (``[0]`` for ell = 1)."""
    if ell < 1:
        raise ValueError(f"modulus must be >= 1, got {ell}")
    return list(_units(ell))


def phi(ell: int) -> int:
    """Euler's totient by gcd scan."""
    if ell < 1:
        raise ValueError(f"modulus must be >= 1, got {ell}")
    return len(_units(ell))


def unit_inverse(b: int, ell: int) -> int:
    if ell == 1:
        return 0
    if not is_unit(b, ell):
        raise ValueError(f"{b} is not a unit modulo {ell}")
    return pow(b % ell, -1, ell)
