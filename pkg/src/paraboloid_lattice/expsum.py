"""Farey dissection and empirical checks of two quadratic exponential sum bounds.

``prop31_ratio`` normalizes the elliptic theta partial sum
sum_{Q(n1,n2) <= N} e(alpha n1 + beta n2 + x Q(n1, n2)) by
N (log N)^2 / (q_x + N |q_x x - a_x|), and ``hl_ratio`` normalizes the
one-dimensional sum over |n| <= N of e(n^2 x) by N / sqrt(q_x). In both
cases a_x / q_x comes from the Farey dissection of order floor(sqrt(N)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from .lattice import RatQuadForm, representations

THETA_MAX = 10**6


@dataclass(frozen=True)
class FareyArc:
    """Half-open arc [lo, hi) of the Farey dissection around a/q."""

    a: int
    q: int
    lo: Fraction
    hi: Fraction

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) < self.hi


def _left_neighbor(a: int, q: int, F: int) -> Tuple[int, int]:
    # a q' - a' q = 1 with q' <= F maximal
    if q == 1:
        return a * F - 1, F
    inv = pow(a, -1, q)
    qn = F - ((F - inv) % q)
    return (a * qn - 1) // q, qn


def _right_neighbor(a: int, q: int, F: int) -> Tuple[int, int]:
    # a' q - a q' = 1 with q' <= F maximal
    if q == 1:
        return a * F + 1, F
    inv = (-pow(a, -1, q)) % q
    qn = F - ((F - inv) % q)
    return (a * qn + 1) // q, qn


def farey_neighbors(a: int, q: int, F: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Neighbors of a/q in the periodically extended Farey sequence of order F."""
    if not 1 <= q <= F or math.gcd(a, q) != 1:
        raise ValueError(f"{a}/{q} is not a reduced fraction of order {F}")
    return _left_neighbor(a, q, F), _right_neighbor(a, q, F)


def farey_arc(a: int, q: int, F: int) -> FareyArc:
    (al, ql), (ar, qr) = farey_neighbors(a, q, F)
    return FareyArc(a, q, Fraction(a + al, q + ql), Fraction(a + ar, q + qr))


def farey_locate(x, F: int) -> FareyArc:
    """The arc of the order-F Farey dissection that contains x.

    Floats are converted exactly. The Stern-Brocot descent runs on the
    fractional part; the resulting arc is shifted back by the integer part.
    """
    if F < 1:
        raise ValueError("Farey order must be positive")
    x = Fraction(x)
    k = math.floor(x)
    t = x - k
    (pa, qa), (pb, qb) = (0, 1), (1, 1)
    hit = None
    if t == 0:
        hit = (0, 1)
    while hit is None:
        ma, mq = pa + pb, qa + qb
        if mq > F:
            break
        m = Fraction(ma, mq)
        if t < m:
            pb, qb = ma, mq
        elif t > m:
            pa, qa = ma, mq
        else:
            hit = (ma, mq)
    if hit is None:
        # t strictly between consecutive Farey fractions pa/qa < pb/qb
        hit = (pa, qa) if t < Fraction(pa + pb, qa + qb) else (pb, qb)
    arc = farey_arc(hit[0], hit[1], F)
    return FareyArc(arc.a + k * arc.q, arc.q, arc.lo + k, arc.hi + k)


def _phase_sum(phases: np.ndarray) -> complex:
    theta = 2.0 * math.pi * np.mod(phases, 1.0)
    return complex(math.fsum(np.cos(theta)), math.fsum(np.sin(theta)))


def weighted_rep_sum(Q: RatQuadForm, n: int, alpha: float, beta: float) -> complex:
    """r_{alpha,beta}(n) = sum over Q(n1, n2) = n of e(alpha n1 + beta n2)."""
    reps = representations(Q, n)
    if not reps:
        return 0j
    pts = np.array(reps, dtype=float)
    return _phase_sum(alpha * pts[:, 0] + beta * pts[:, 1])


@lru_cache(maxsize=32)
def ellipse_points(Q: RatQuadForm, N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(n1, n2, Q(n1, n2)) for all integer points with Q <= N; Q integral binary."""
    if Q.dim != 2 or not Q.is_integral():
        raise ValueError("need an integral binary form")
    a, c = int(Q.matrix[0][0]), int(Q.matrix[1][1])
    b = int(2 * Q.matrix[0][1])
    disc = 4 * a * c - b * b
    xmax = math.isqrt(4 * c * N // disc) + 1
    ymax = math.isqrt(4 * a * N // disc) + 1
    xs, ys = np.meshgrid(
        np.arange(-xmax, xmax + 1, dtype=np.int64), np.arange(-ymax, ymax + 1, dtype=np.int64), indexing="ij"
    )
    xs, ys = xs.ravel(), ys.ravel()
    vals = a * xs * xs + b * xs * ys + c * ys * ys
    keep = vals <= N
    out = (xs[keep], ys[keep], vals[keep])
    for arr in out:
        arr.setflags(write=False)
    return out


def theta_partial_sum(Q: RatQuadForm, alpha: float, beta: float, x: float, N: int) -> complex:
    """sum_{0 <= n <= N} r_{alpha,beta}(n) e(n x), summed over the ellipse directly."""
    if N < 0 or N > THETA_MAX:
        raise ValueError(f"N={N} outside [0, {THETA_MAX}]")
    n1, n2, v = ellipse_points(Q, N)
    phases = alpha * n1 + beta * n2 + np.mod(v * float(x), 1.0)
    return _phase_sum(phases)


def _prop31(Q, alpha, beta, x, N) -> Tuple[FareyArc, complex, float]:
    S = theta_partial_sum(Q, alpha, beta, x, N)
    arc = farey_locate(x, math.isqrt(N))
    if S == 0:
        return arc, S, 0.0
    scale = arc.q + N * abs(float(arc.q * Fraction(x) - arc.a))
    return arc, S, abs(S) * scale / (N * math.log(N) ** 2)


def prop31_ratio(Q: RatQuadForm, alpha: float, beta: float, x: float, N: int) -> float:
    """|theta partial sum| * (q_x + N |q_x x - a_x|) / (N (log N)^2)."""
    if N < 2:
        raise ValueError("need N >= 2")
    return _prop31(Q, alpha, beta, x, N)[2]


def hl_sum(x: float, N: int) -> complex:
    """sum_{n=-N}^{N} e(n^2 x)."""
    n = np.arange(1, N + 1, dtype=np.int64)
    xf = Fraction(x)
    den = xf.denominator
    if den * den < 2**62:
        # small-denominator rationals: exact residues n^2 * num mod den
        r = ((n * n) % den) * (xf.numerator % den) % den
        half = _phase_sum(r / den)
    else:
        half = _phase_sum(np.mod((n * n).astype(float) * float(x), 1.0))
    return 1 + 2 * half


def _hl(x, N) -> Tuple[FareyArc, float, float]:
    arc = farey_locate(x, max(1, math.isqrt(N)))
    S = abs(hl_sum(x, N))
    return arc, S, S * math.sqrt(arc.q) / N


def hl_ratio(x: float, N: int) -> float:
    """|sum_{|n| <= N} e(n^2 x)| * sqrt(q_x) / N."""
    if N < 1:
        raise ValueError("need N >= 1")
    return _hl(x, N)[2]


@dataclass(frozen=True)
class SweepSample:
    N: int
    index: int
    x: float
    alpha: float
    beta: float
    a: int
    q: int
    abs_sum: float
    ratio: float


def sweep_samples(seed: int, count: int) -> np.ndarray:
    """Deterministic (x, alpha, beta) triples in [0, 1)^3 from a seeded PCG64."""
    rng = np.random.default_rng(seed)
    return rng.random((count, 3))


def prop31_sweep(Q: RatQuadForm, Ns: Sequence[int], samples: int = 200, seed: int = 0) -> List[SweepSample]:
    """Ratios at the same seeded (x, alpha, beta) triples for every N."""
    triples = sweep_samples(seed, samples)
    out = []
    for N in Ns:
        for i, (x, al, be) in enumerate(triples):
            arc, S, ratio = _prop31(Q, al, be, x, N)
            out.append(SweepSample(N, i, float(x), float(al), float(be), arc.a, arc.q, abs(S), ratio))
    return out


def hl_sweep(Ns: Sequence[int], samples: int = 200, seed: int = 0) -> List[SweepSample]:
    """Hardy-Littlewood ratios at the x-components of the seeded triples."""
    triples = sweep_samples(seed, samples)
    out = []
    for N in Ns:
        for i, (x, _, _) in enumerate(triples):
            arc, S, ratio = _hl(x, N)
            out.append(SweepSample(N, i, float(x), 0.0, 0.0, arc.a, arc.q, S, ratio))
    return out
