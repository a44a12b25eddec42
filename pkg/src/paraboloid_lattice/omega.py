"""Witnesses for large positive and negative error terms, and boundary point growth."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ._parallel import ordered_map
from .arith import factorize, is_squarefree
from .formula import error_term_cor_4k1, error_term_cor_sqfree
from .lattice import ParaboloidSpec, RatQuadForm, boundary_count

log = logging.getLogger(__name__)

SCAN_MAX = 10**5


@dataclass(frozen=True)
class OmegaRecord:
    N: int
    error: Fraction
    normalized: float  # E(N) / sqrt(N)


@dataclass(frozen=True)
class GrowthRecord:
    R: int
    boundary: int
    ratio: float


def boundary_family_2d(M: int) -> List[Tuple[int, int]]:
    """The 4M points (kM, +-(M^2 - k^2)), |k| <= M, on the boundary of M^2 * P_2."""
    if M < 1:
        raise ValueError("M must be positive")
    R = M * M
    pts = set()
    for k in range(-M, M + 1):
        x, y = k * M, R - k * k
        pts.add((x, y))
        pts.add((x, -y))
    for x, y in pts:
        # |y| = R - x^2 / R
        if abs(y) * R != R * R - x * x:
            raise AssertionError(f"({x}, {y}) is not on the boundary")
    return sorted(pts)


def _sqfree_record(N: int) -> OmegaRecord:
    E = error_term_cor_sqfree(N)
    return OmegaRecord(N, E, float(E) / math.sqrt(N))


def omega_minus_scan(N_max: int, jobs: int = 1) -> List[OmegaRecord]:
    """E(N)/sqrt(N) for odd squarefree N <= N_max, most negative first."""
    if N_max > SCAN_MAX:
        raise ValueError(f"N_max={N_max} above supported bound {SCAN_MAX}")
    Ns = [N for N in range(1, N_max + 1, 2) if is_squarefree(N)]
    records = ordered_map(_sqfree_record, Ns, jobs)
    return sorted(records, key=lambda r: (r.normalized, r.N))


def _admissible(M: int) -> bool:
    return all(p % 4 == 1 for p, _ in factorize(M))


def omega_plus_family(M_max: int, Ms: Iterable[int] = None) -> List[OmegaRecord]:
    """E(M^2)/M for M built from primes 1 mod 4; the ratio is 2 + 1/(3M)."""
    out = []
    for M in Ms if Ms is not None else range(1, M_max + 1):
        if not _admissible(M):
            log.debug("skipping M=%d: has a prime factor not 1 mod 4", M)
            continue
        E = error_term_cor_4k1(M * M)
        out.append(OmegaRecord(M * M, E, float(E / M)))
    return out


def boundary_growth_3d(Q1: RatQuadForm, c, R_list: Sequence[int]) -> List[GrowthRecord]:
    """Boundary lattice points of R*P in dimension 3, for square dilations R."""
    if Q1.dim != 2 or not Q1.is_integral():
        raise ValueError("need an integral binary form")
    A = Q1.matrix
    g = math.gcd(math.gcd(int(A[0][0]), int(2 * A[0][1])), int(A[1][1]))
    if g != 1:
        raise ValueError("form is not primitive")
    spec = ParaboloidSpec(3, Q1, c=Fraction(c))
    out = []
    for R in R_list:
        if R < 1 or math.isqrt(R) ** 2 != R:
            raise ValueError(f"R={R} is not a perfect square")
        n = boundary_count(spec, R)
        out.append(GrowthRecord(R, n, n / R))
    return out
