"""Closed form for the error term of the planar parabola |y| <= 1 - x^2 at odd dilations.

For odd N the error E(N) = N_2(N) - (8/3) N^2 equals

    1/3 + 2 sqrt(N*) - (4/pi) * sum_{d | N, d = 3 (4)} sqrt(d) L(1, chi_{-d})

with N* the largest square dividing N. Each L-value is pi/sqrt(d) times a
rational, so every summand is rational and E(N) is computed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ._parallel import ordered_map
from .arith import divisors_congruent, factorize, greatest_square_divisor
from .dirichlet import class_number, l_value
from .lattice import COUNT_2D_MAX, count_parabola_2d

PARABOLA_AREA = Fraction(8, 3)
VERIFY_MAX = 10**5


@dataclass(frozen=True)
class FormulaTerms:
    """Pieces of the closed form: E = constant + square_term - sum(class_terms)."""

    N: int
    constant: Fraction
    square_term: int
    class_terms: Tuple[Tuple[int, Fraction], ...]

    @property
    def value(self) -> Fraction:
        return self.constant + self.square_term - sum((t for _, t in self.class_terms), Fraction(0))


@dataclass(frozen=True)
class Mismatch:
    N: int
    formula: Fraction
    brute: Fraction

    @property
    def delta(self) -> Fraction:
        return self.brute - self.formula


def _check_odd(N: int) -> None:
    if N < 1 or N % 2 == 0:
        raise ValueError(f"closed form covers odd positive N only, got {N}")
    if N > COUNT_2D_MAX:
        raise ValueError(f"N={N} above supported bound {COUNT_2D_MAX}")


def error_terms(N: int) -> FormulaTerms:
    _check_odd(N)
    root = math.isqrt(greatest_square_divisor(N))
    # (4/pi) * sqrt(d) * (r pi / sqrt(d)) = 4 r
    terms = tuple((d, 4 * l_value(d).rational_part) for d in divisors_congruent(N, 3, 4))
    return FormulaTerms(N, Fraction(1, 3), 2 * root, terms)


def error_term_exact(N: int) -> Fraction:
    """E(N) for odd N, as an exact rational."""
    return error_terms(N).value


def error_term_cor_4k1(N: int) -> Fraction:
    """E(N) = 1/3 + 2 sqrt(N*) when every prime factor of N is 1 mod 4."""
    if N < 1:
        raise ValueError("N must be positive")
    for p, _ in factorize(N):
        if p % 4 != 1:
            raise ValueError(f"prime factor {p} of {N} is not 1 mod 4")
    return Fraction(1, 3) + 2 * math.isqrt(greatest_square_divisor(N))


def error_term_cor_sqfree(N: int) -> Fraction:
    """E(N) = 7/3 - 4 sum_{d | N, d = 3 (4)} w_d h(-d) for odd squarefree N (w_3 = 1/3)."""
    _check_odd(N)
    for p, e in factorize(N):
        if e > 1:
            raise ValueError(f"{N} is not squarefree (p={p} divides it {e} times)")
    total = Fraction(0)
    for d in divisors_congruent(N, 3, 4):
        weight = Fraction(1, 3) if d == 3 else Fraction(1)
        total += weight * class_number(d)
    return Fraction(7, 3) - 4 * total


def brute_error(N: int) -> Fraction:
    return count_parabola_2d(N) - PARABOLA_AREA * N * N


def _check_one(N: int):
    formula = error_term_exact(N)
    brute = brute_error(N)
    if abs(brute - formula) > Fraction(1, 10**6):
        return Mismatch(N, formula, brute)
    return None


def verify_formula_range(N_max: int, jobs: int = 1) -> List[Mismatch]:
    """Compare the closed form against direct counting for all odd N <= N_max."""
    if N_max > VERIFY_MAX:
        raise ValueError(f"N_max={N_max} above supported bound {VERIFY_MAX}")
    results = ordered_map(_check_one, range(1, N_max + 1, 2), jobs)
    return [m for m in results if m is not None]
