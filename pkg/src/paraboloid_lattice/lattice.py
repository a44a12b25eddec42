"""Paraboloid regions |y| <= c - Q(x + beta), exact lattice point counts and volumes.

Counting works fiber by fiber: for every x-point n with Q(n + R*beta) <= c R^2
the vertical fiber contributes 2*floor((c R^2 - Q(n + R*beta)) / R) + 1
points. When Q, beta and c are rational everything is cleared to a common
denominator and evaluated in integer arithmetic, so counts are exact. An
irrational (float) beta falls back to double precision, and fibers whose
boundary sits within 1e-9 of a lattice point are tallied as ambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

COUNT_2D_MAX = 10**7
AMBIGUITY_TOL = 1e-9
_INT64_SAFE = 2**62
_CHUNK = 1 << 20

Number = Union[int, Fraction, float]


class AmbiguousCountError(ArithmeticError):
    """Float-path count where some fiber boundary is too close to call."""

    def __init__(self, count: int, ambiguous: int):
        super().__init__(f"{ambiguous} fibers within {AMBIGUITY_TOL} of a lattice boundary")
        self.count = count
        self.ambiguous = ambiguous


def _lcm_denominators(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out


@dataclass(frozen=True)
class RatQuadForm:
    """Positive definite form Q(x) = x^T A x with an exact rational symmetric matrix A."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        A = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", A)
        k = len(A)
        if k == 0 or any(len(row) != k for row in A):
            raise ValueError("matrix must be square and non-empty")
        for i in range(k):
            for j in range(i):
                if A[i][j] != A[j][i]:
                    raise ValueError("matrix must be symmetric")
        for j in range(1, k + 1):
            if _det([row[:j] for row in A[:j]]) <= 0:
                raise ValueError("quadratic form is not positive definite")

    @classmethod
    def from_upper(cls, entries: Sequence[Number], dim: Optional[int] = None) -> "RatQuadForm":
        """Build from the row-major upper triangle a11, a12, ..., a1k, a22, ..."""
        n = len(entries)
        k = dim if dim is not None else int((math.isqrt(8 * n + 1) - 1) // 2)
        if k * (k + 1) // 2 != n:
            raise ValueError(f"{n} entries do not form an upper triangle")
        A = [[Fraction(0)] * k for _ in range(k)]
        it = iter(entries)
        for i in range(k):
            for j in range(i, k):
                A[i][j] = A[j][i] = Fraction(next(it))
        return cls(tuple(tuple(r) for r in A))

    @classmethod
    def binary(cls, a: Number, b: Number, c: Number) -> "RatQuadForm":
        """The form a x^2 + b x y + c y^2."""
        b = Fraction(b) / 2
        return cls(((Fraction(a), b), (b, Fraction(c))))

    @classmethod
    def identity(cls, k: int) -> "RatQuadForm":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> Fraction:
        return _det(self.matrix)

    def __call__(self, x: Sequence[Number]):
        k = self.dim
        return sum(self.matrix[i][j] * x[i] * x[j] for i in range(k) for j in range(k))

    def is_integral(self) -> bool:
        """Integer valued on Z^k: integer diagonal, half-integer off-diagonal."""
        A = self.matrix
        for i in range(self.dim):
            if A[i][i].denominator != 1:
                return False
            for j in range(i + 1, self.dim):
                if (2 * A[i][j]).denominator != 1:
                    return False
        return True

    def as_float(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.matrix])

    def scaled_integer_matrix(self) -> Tuple[np.ndarray, int]:
        """(B, L) with B = L * A integral and L minimal."""
        L = _lcm_denominators(v for row in self.matrix for v in row)
        B = [[int(v * L) for v in row] for row in self.matrix]
        return np.array(B, dtype=object), L


def _det(M) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    M = [list(map(Fraction, row)) for row in M]
    n = len(M)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            if f:
                for cc in range(col, n):
                    M[r][cc] -= f * M[col][cc]
    return det


@dataclass(frozen=True)
class ParaboloidSpec:
    """Region {(x, y) in R^(d-1) x R : |y| <= c - Q(x + beta)}."""

    d: int
    Q: RatQuadForm
    beta: Tuple[Number, ...] = ()
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if self.Q.dim != self.d - 1:
            raise ValueError(f"form has dimension {self.Q.dim}, expected {self.d - 1}")
        beta = tuple(self.beta) if self.beta else (Fraction(0),) * (self.d - 1)
        if len(beta) != self.d - 1:
            raise ValueError("beta must have d - 1 components")
        beta = tuple(b if isinstance(b, float) else Fraction(b) for b in beta)
        object.__setattr__(self, "beta", beta)
        c = Fraction(self.c)
        if c <= 0:
            raise ValueError("height c must be positive")
        object.__setattr__(self, "c", c)

    @property
    def beta_is_rational(self) -> bool:
        return all(isinstance(b, Rational) for b in self.beta)

    @classmethod
    def parabola(cls) -> "ParaboloidSpec":
        """The planar region |y| <= 1 - x^2."""
        return cls(2, RatQuadForm.identity(1))


@dataclass(frozen=True)
class ErrorRecord:
    R: int
    count: int
    volume_term: float
    error: float
    error_exact: Optional[Fraction] = None
    ambiguous: int = 0


# ---------------------------------------------------------------------------
# planar parabola


def count_parabola_2d(R) -> int:
    """#{(n, m) in Z^2 : |m| <= R - n^2 / R} for rational R > 0."""
    R = Fraction(R)
    if R <= 0:
        raise ValueError("R must be positive")
    if R > COUNT_2D_MAX:
        raise ValueError(f"R={R} above supported bound {COUNT_2D_MAX}")
    p, q = R.numerator, R.denominator
    nmax = p // q
    # (R^2 - n^2) / R = (p^2 - n^2 q^2) / (p q)
    if p * p * q < _INT64_SAFE:
        n = np.arange(1, nmax + 1, dtype=np.int64)
        fl = (p * p - n * n * (q * q)) // (p * q)
        side = int(fl.sum())
    else:
        side = sum((p * p - n * n * q * q) // (p * q) for n in range(1, nmax + 1))
    center = (p * p) // (p * q)
    # each n contributes 2*floor + 1; n and -n are symmetric
    return (2 * center + 1) + 2 * (2 * side + nmax)


# ---------------------------------------------------------------------------
# general paraboloids


def _shift(spec: ParaboloidSpec, R: int):
    """(fractional part, integer part) of R * beta; exact when beta is rational."""
    whole = tuple(math.floor(R * b) for b in spec.beta)
    if spec.beta_is_rational:
        return tuple(R * b - w for b, w in zip(spec.beta, whole)), whole
    return tuple(float(R * b) % 1.0 for b in spec.beta), whole


def _enumerate_ellipsoid(A: np.ndarray, center: np.ndarray, T: float) -> Iterator[np.ndarray]:
    """Yield chunks of integer points covering {x : (x - center)^T A (x - center) <= T}.

    Bounds come from float projections of the ellipsoid with a one-unit margin;
    callers apply the exact membership test, so extra points are harmless.
    """
    k = A.shape[0]
    Ainv = np.linalg.inv(A)
    proj = [np.linalg.inv(Ainv[: j + 1, : j + 1]) for j in range(k)]

    def expand(prefix: np.ndarray, j: int):
        P = proj[j]
        a = P[j, j]
        if j == 0:
            b = np.zeros(len(prefix))
            rest = np.zeros(len(prefix))
        else:
            u = prefix - center[:j]
            b = u @ P[:j, j]
            rest = np.einsum("ij,jk,ik->i", u, P[:j, :j], u)
        disc = b * b - a * (rest - T)
        disc = disc + 1e-9 * (b * b + a * abs(T) + 1.0)
        ok = disc >= 0
        root = np.sqrt(np.where(ok, disc, 0.0))
        lo = np.floor(center[j] + (-b - root) / a) - 1
        hi = np.ceil(center[j] + (-b + root) / a) + 1
        lo = lo.astype(np.int64)
        hi = hi.astype(np.int64)
        counts = np.where(ok, hi - lo + 1, 0)
        total = int(counts.sum())
        starts = np.repeat(lo, counts)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
        z = starts + offsets
        return np.column_stack([np.repeat(prefix, counts, axis=0), z])

    def walk(prefix: np.ndarray, j: int):
        if j == k:
            yield prefix
            return
        for start in range(0, len(prefix), _CHUNK):
            block = prefix[start : start + _CHUNK]
            nxt = expand(block, j)
            for s in range(0, len(nxt), _CHUNK):
                yield from walk(nxt[s : s + _CHUNK], j + 1)

    yield from walk(np.zeros((1, 0), dtype=np.int64), 0)


def _quad_int(B: np.ndarray, y: np.ndarray) -> np.ndarray:
    k = B.shape[0]
    out = None
    for i in range(k):
        for j in range(i, k):
            coeff = int(B[i, j]) * (1 if i == j else 2)
            if coeff == 0:
                continue
            term = coeff * y[:, i] * y[:, j]
            out = term if out is None else out + term
    return out if out is not None else np.zeros(len(y), dtype=y.dtype)


@dataclass
class FiberData:
    """Per-point fiber data for one dilation: x-points, floor heights, exact-boundary flags."""

    points: np.ndarray
    heights: np.ndarray
    on_boundary: np.ndarray
    ambiguous: np.ndarray = field(default=None)


def fibers(spec: ParaboloidSpec, R: int) -> Iterator[FiberData]:
    """Yield fiber data for all x-points n with Q(n + R beta) <= c R^2.

    ``heights`` holds floor((c R^2 - Q(n + R beta)) / R), so the fiber over n
    holds 2*height + 1 lattice points.
    """
    if R < 1 or int(R) != R:
        raise ValueError("R must be a positive integer")
    R = int(R)
    # the count is 1-periodic in R * beta; enumerate with the fractional shift
    s, whole = _shift(spec, R)
    A = spec.Q.as_float()
    T = float(spec.c) * R * R
    if spec.beta_is_rational:
        chunks = _fibers_exact(spec, R, s, A, T)
    else:
        chunks = _fibers_float(spec, R, np.array(s, dtype=float), A, T)
    offset = np.array(whole, dtype=np.int64)
    for fd in chunks:
        fd.points = fd.points - offset
        yield fd


def _fibers_exact(spec, R, s, A, T):
    B, L = spec.Q.scaled_integer_matrix()
    den = _lcm_denominators(s)
    t = [int(v * den) for v in s]
    cp, cq = spec.c.numerator, spec.c.denominator
    top = cp * R * R * L * den * den
    step = cq * L * den * den * R
    center = -np.array([float(v) for v in s])
    bound_hint = cq * int(np.abs(B).sum()) if B.size else 0
    for pts in _enumerate_ellipsoid(A, center, T):
        if len(pts) == 0:
            continue
        y = den * pts + np.array(t, dtype=np.int64)
        ymax = int(np.abs(y).max())
        if max(top, bound_hint * ymax * ymax, step) < _INT64_SAFE:
            W = cq * _quad_int(B, y)
            gap = top - W
        else:
            yo = y.astype(object)
            W = cq * _quad_int(B, yo)
            gap = top - W
        inside = gap >= 0
        if not np.any(inside):
            continue
        gap = gap[inside]
        yield FiberData(
            points=pts[inside],
            heights=np.asarray(gap // step).astype(np.int64),
            on_boundary=np.asarray(gap % step == 0, dtype=bool),
        )


def _fibers_float(spec, R, s, A, T):
    center = -s
    for pts in _enumerate_ellipsoid(A, center, T):
        if len(pts) == 0:
            continue
        y = pts + s
        Qv = np.einsum("ij,jk,ik->i", y, A, y)
        val = (T - Qv) / R
        near = np.abs(val - np.round(val)) < AMBIGUITY_TOL
        inside = (val >= 0) | (near & (val > -AMBIGUITY_TOL))
        if not np.any(inside):
            continue
        val = val[inside]
        heights = np.floor(val + np.where(near[inside], 0.5, 0.0))
        yield FiberData(
            points=pts[inside],
            heights=heights.astype(np.int64),
            on_boundary=near[inside] & (np.abs(val - heights) < AMBIGUITY_TOL),
            ambiguous=near[inside],
        )


def count_paraboloid_detailed(spec: ParaboloidSpec, R: int) -> Tuple[int, int]:
    """(count, ambiguous fibers). Ambiguity is always 0 on the rational path."""
    count = 0
    ambiguous = 0
    for fd in fibers(spec, R):
        count += int(2 * fd.heights.sum()) + len(fd.heights)
        if fd.ambiguous is not None:
            ambiguous += int(fd.ambiguous.sum())
    return count, ambiguous


def count_paraboloid(spec: ParaboloidSpec, R: int) -> int:
    """Number of n in Z^d with n / R in the region."""
    count, ambiguous = count_paraboloid_detailed(spec, R)
    if ambiguous:
        raise AmbiguousCountError(count, ambiguous)
    return count


def boundary_count(spec: ParaboloidSpec, R: int) -> int:
    """Lattice points with |m| R = c R^2 - Q(n + R beta) exactly."""
    if not spec.beta_is_rational:
        raise ValueError("boundary counting needs a rational shift")
    total = 0
    for fd in fibers(spec, R):
        hb = fd.heights[fd.on_boundary]
        total += 2 * int(np.count_nonzero(hb > 0)) + int(np.count_nonzero(hb == 0))
    return total


def boundary_points(spec: ParaboloidSpec, R: int) -> list:
    """Explicit boundary points (n_1, ..., n_{d-1}, m), for verification at small R."""
    if not spec.beta_is_rational:
        raise ValueError("boundary enumeration needs a rational shift")
    out = []
    for fd in fibers(spec, R):
        for p, h in zip(fd.points[fd.on_boundary], fd.heights[fd.on_boundary]):
            base = tuple(int(v) for v in p)
            out.append(base + (int(h),))
            if h > 0:
                out.append(base + (-int(h),))
    return sorted(out)


def unit_ball_volume(Q: RatQuadForm) -> float:
    """vol{x : Q(x) <= 1}."""
    k = Q.dim
    return math.pi ** (k / 2) / math.gamma(k / 2 + 1) / math.sqrt(Q.det)


def volume(spec: ParaboloidSpec) -> float:
    """|P| = 4 V1 c^((d+1)/2) / (d+1) with V1 the volume of {Q <= 1}."""
    d = spec.d
    return 4 * unit_ball_volume(spec.Q) * float(spec.c) ** ((d + 1) / 2) / (d + 1)


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def volume_exact(spec: ParaboloidSpec) -> Optional[Fraction]:
    """Exact |P| when it is rational (only possible for d = 2), else None."""
    if spec.d != 2:
        return None
    # |P| = 8/3 * sqrt(c^3 / a)
    root = _rational_sqrt(spec.c**3 / spec.Q.matrix[0][0])
    return None if root is None else Fraction(8, 3) * root


def error_record(spec: ParaboloidSpec, R: int) -> ErrorRecord:
    count, ambiguous = count_paraboloid_detailed(spec, R)
    vol_exact = volume_exact(spec)
    if vol_exact is not None:
        vt = vol_exact * R**spec.d
        return ErrorRecord(R, count, float(vt), count - float(vt), count - vt, ambiguous)
    vt = volume(spec) * R**spec.d
    return ErrorRecord(R, count, vt, count - vt, None, ambiguous)


def rep_count(Q: RatQuadForm, n: int) -> int:
    """Number of (x, y) in Z^2 with Q(x, y) = n, for an integral binary form."""
    return len(representations(Q, n))


def representations(Q: RatQuadForm, n: int) -> list:
    """All (x, y) in Z^2 with Q(x, y) = n, sorted."""
    if Q.dim != 2 or not Q.is_integral():
        raise ValueError("need an integral binary form")
    if n < 0:
        return []
    a = Q.matrix[0][0]
    b = 2 * Q.matrix[0][1]
    c = Q.matrix[1][1]
    a, b, c = int(a), int(b), int(c)
    disc = 4 * a * c - b * b
    # a x^2 + b x y + c y^2 = n; y-range from completing the square in x
    ymax = math.isqrt(4 * a * n // disc) + 1
    out = []
    for y in range(-ymax, ymax + 1):
        # a x^2 + (b y) x + (c y^2 - n) = 0
        D = b * b * y * y - 4 * a * (c * y * y - n)
        if D < 0:
            continue
        r = math.isqrt(D)
        if r * r != D:
            continue
        for num in {-b * y + r, -b * y - r}:
            if num % (2 * a) == 0:
                out.append((num // (2 * a), y))
    return sorted(out)
