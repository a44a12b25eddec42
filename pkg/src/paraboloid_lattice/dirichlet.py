"""Quadratic Gauss sums, reduced binary forms, class numbers and L(1, chi_{-d}).

L-values of the odd quadratic characters ``(-d/.)`` with ``d = 3 (mod 4)``
are returned exactly as ``rational_part * pi / sqrt(d)``, obtained from the
class number formula for the fundamental part and Euler factors for the
conductor. The truncated character series lives only in the test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .arith import factorize, greatest_square_divisor, is_fundamental_discriminant, kronecker

GAUSS_DIRECT_MAX = 10**6


class NonFundamentalDiscriminantError(ValueError):
    """Raised when a class number is requested for a non-fundamental discriminant."""


@dataclass(frozen=True, order=True)
class BinaryFormClass:
    """Binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (a > 0 and self.discriminant < 0):
            return False
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class LValue:
    d: int
    rational_part: Fraction
    value: float
    fundamental: int  # D0 with -d = D0 * f^2
    conductor_factor: int  # f


def gauss_sum_direct(m: int, N: int) -> complex:
    """G(m; N) = sum_{n=1}^{N} e(m n^2 / N) by direct summation."""
    if m < 1 or N < 1:
        raise ValueError("m and N must be positive")
    if N > GAUSS_DIRECT_MAX:
        raise ValueError(f"N={N} above direct-summation limit {GAUSS_DIRECT_MAX}")
    n = np.arange(1, N + 1, dtype=np.int64)
    # reduce before multiplying so the residues stay exact in int64
    r = ((n * n) % N) * (m % N) % N
    theta = (2.0 * math.pi / N) * r
    return complex(math.fsum(np.cos(theta)), math.fsum(np.sin(theta)))


def gauss_sum_im_exact(m: int, N: int) -> Tuple[Fraction, int]:
    """Im G(m; N) for odd N as ``(coeff, radicand)``, value ``coeff * sqrt(radicand)``."""
    if N < 1 or N % 2 == 0:
        raise ValueError(f"closed form needs odd positive N, got {N}")
    if m < 1:
        raise ValueError("m must be positive")
    dm = N // math.gcd(m, N)
    if dm % 4 == 1:
        return Fraction(0), 1
    # N / sqrt(dm) == (N / dm) * sqrt(dm)
    symbol = kronecker(m * dm // N, dm)
    return Fraction(N, dm) * symbol, dm


def gauss_sum_im_closed(m: int, N: int) -> float:
    coeff, radicand = gauss_sum_im_exact(m, N)
    return float(coeff) * math.sqrt(radicand)


def reduced_forms(D: int, primitive_only: bool = False) -> List[BinaryFormClass]:
    """All reduced forms of negative discriminant D, sorted lexicographically."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"invalid negative discriminant {D}")
    forms = []
    a_max = math.isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            f = BinaryFormClass(a, b, c)
            if primitive_only and not f.is_primitive():
                continue
            forms.append(f)
    return sorted(forms)


@lru_cache(maxsize=None)
def _class_number(D: int) -> int:
    return len(reduced_forms(D, primitive_only=True))


def class_number(d: int) -> int:
    """h(-d) for a fundamental discriminant -d (d > 0)."""
    if d < 1 or not is_fundamental_discriminant(-d):
        raise NonFundamentalDiscriminantError(f"-{d} is not a fundamental discriminant")
    return _class_number(-d)


def units_count(D: int) -> int:
    """Number of units w(D) of the imaginary quadratic order of discriminant D."""
    return {-3: 6, -4: 4}.get(D, 2)


def _fundamental_split(d: int) -> Tuple[int, int]:
    # -d = D0 * f^2 with D0 fundamental; d = 3 (mod 4) forces f odd, D0 = 1 (mod 4)
    f2 = greatest_square_divisor(d)
    f = math.isqrt(f2)
    return -(d // f2), f


@lru_cache(maxsize=None)
def l_value(d: int) -> LValue:
    """L(1, chi_{-d}) for d = 3 (mod 4), exact as rational * pi / sqrt(d)."""
    if d < 1 or d % 4 != 3:
        raise ValueError(f"l_value needs d = 3 (mod 4), got {d}")
    D0, f = _fundamental_split(d)
    h = _class_number(D0)
    # L(1, chi_D0) = 2 pi h / (w sqrt|D0|); sqrt|D0| * f = sqrt(d)
    rational = Fraction(2 * h * f, units_count(D0))
    for p, _ in factorize(f):
        rational *= 1 - Fraction(kronecker(D0, p), p)
    value = float(rational) * math.pi / math.sqrt(d)
    return LValue(d=d, rational_part=rational, value=value, fundamental=D0, conductor_factor=f)
