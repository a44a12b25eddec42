import math
from fractions import Fraction

import pytest

from paraboloid_lattice.dirichlet import class_number
from paraboloid_lattice.lattice import ParaboloidSpec, RatQuadForm, boundary_points
from paraboloid_lattice.omega import (
    boundary_family_2d,
    boundary_growth_3d,
    omega_minus_scan,
    omega_plus_family,
)

DISK = RatQuadForm.identity(2)


def test_boundary_family_small():
    assert boundary_family_2d(1) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert len(boundary_family_2d(2)) == 8
    with pytest.raises(ValueError):
        boundary_family_2d(0)


def test_boundary_family_inside_boundary_set():
    P2 = ParaboloidSpec.parabola()
    for M in (1, 2, 3, 5, 8):
        fam = set(boundary_family_2d(M))
        assert len(fam) == 4 * M
        assert fam <= set(boundary_points(P2, M * M))


def test_omega_minus_small_values():
    recs = {r.N: r for r in omega_minus_scan(101)}
    assert recs[7].error == Fraction(-5, 3)
    assert recs[7].normalized == pytest.approx(-5 / (3 * math.sqrt(7)))
    assert recs[7].normalized == pytest.approx(-0.6299, abs=1e-4)
    assert 9 not in recs and 2 not in recs


def test_omega_minus_sorted_and_prime_cross_check():
    recs = omega_minus_scan(3000)
    vals = [r.normalized for r in recs]
    assert vals == sorted(vals)
    for r in recs:
        p = r.N
        if p % 4 == 3 and all(p % k for k in range(2, math.isqrt(p) + 1)):
            w = Fraction(1, 3) if p == 3 else 1
            expected = (Fraction(7, 3) - 4 * w * class_number(p)) / math.sqrt(p)
            assert r.normalized == pytest.approx(float(expected), rel=1e-12)


def test_omega_minus_product_of_3mod4_primes_is_extreme():
    # 3*7*11*19 = 4389 is the largest product of the first primes 3 mod 4 below 5000
    recs = omega_minus_scan(5000)
    rank = [r.N for r in recs].index(4389)
    assert rank < len(recs) // 10


@pytest.mark.parametrize("M, ratio", [(1, Fraction(7, 3)), (5, Fraction(31, 15)), (13, Fraction(79, 39))])
def test_omega_plus_examples(M, ratio):
    rec = next(r for r in omega_plus_family(M) if r.N == M * M)
    assert rec.error / M == ratio


def test_omega_plus_skips_inadmissible():
    Ns = [r.N for r in omega_plus_family(30)]
    assert Ns == [1, 25, 169, 289, 625, 841]


def test_boundary_growth_examples():
    recs = boundary_growth_3d(DISK, 1, [1, 4])
    assert recs[1].boundary == 22 and recs[1].ratio == 5.5
    assert recs[0].boundary >= 5
    with pytest.raises(ValueError):
        boundary_growth_3d(DISK, 1, [3])
    with pytest.raises(ValueError):
        boundary_growth_3d(RatQuadForm.binary(2, 2, 2), 1, [4])
