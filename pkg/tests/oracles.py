"""Slow, independent reference implementations used only by the tests."""

import cmath
import math
from fractions import Fraction
from itertools import product

import numpy as np


def trial_factor(n):
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def legendre_by_residues(D, p):
    if D % p == 0:
        return 0
    squares = {x * x % p for x in range(1, p)}
    return 1 if D % p in squares else -1


def brute_gauss(m, N):
    return sum(cmath.exp(2j * math.pi * m * n * n / N) for n in range(1, N + 1))


def brute_reduced_forms(D):
    """Scan a, c over [1, |D|] and b over [-a, a]; keep reduced forms."""
    out = []
    for a in range(1, -D + 1):
        if 3 * a * a > -D:
            break
        for b in range(-a, a + 1):
            for c in range(a, -D + 1):
                if b * b - 4 * a * c != D:
                    continue
                if b < 0 and (-b == a or a == c):
                    continue
                out.append((a, b, c))
    return sorted(out)


def series_l_value(d, terms=10**6):
    """sum_{m <= terms} (-d/m) / m from one period of the character, tiled."""
    from paraboloid_lattice.arith import kronecker

    period = np.array([kronecker(-d, m) for m in range(d)], dtype=float)
    m = np.arange(1, terms + 1)
    return float(np.sum(period[m % d] / m))


def _quad(A, v):
    k = len(v)
    return sum(A[i][j] * v[i] * v[j] for i in range(k) for j in range(k))


def brute_count(A, beta, c, R, box):
    """Direct enumeration over (n, m) with Fraction arithmetic in a box of half-width ``box``."""
    k = len(A)
    c = Fraction(c)
    total = 0
    boundary = 0
    for n in product(range(-box, box + 1), repeat=k):
        x = [Fraction(ni, R) + Fraction(b) for ni, b in zip(n, beta)]
        h = c - _quad(A, x)
        if h < 0:
            continue
        for m in range(-box * box - R, box * box + R + 1):
            y = Fraction(m, R)
            if abs(y) <= h:
                total += 1
                if abs(y) == h:
                    boundary += 1
    return total, boundary


def parabola_enumeration(R):
    R = Fraction(R)
    count = 0
    lim = math.floor(R)
    for n in range(-lim, lim + 1):
        for m in range(-lim - 1, lim + 2):
            if abs(m) <= R - Fraction(n * n) / R:
                count += 1
    return count


def monte_carlo_volume(A, c, samples=10**7, seed=12345, chunk=10**6):
    """Hit-or-miss estimate of vol{|y| <= c - x^T A x}."""
    A = np.array([[float(v) for v in row] for row in A])
    c = float(c)
    k = A.shape[0]
    half = np.sqrt(c * np.diag(np.linalg.inv(A)))
    box = np.prod(2 * half) * 2 * c
    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < samples:
        n = min(chunk, samples - done)
        x = (rng.random((n, k)) * 2 - 1) * half
        y = (rng.random(n) * 2 - 1) * c
        q = np.einsum("ij,jk,ik->i", x, A, x)
        hits += int(np.count_nonzero(np.abs(y) <= c - q))
        done += n
    return box * hits / samples
