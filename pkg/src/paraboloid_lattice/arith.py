"""Exact integer utilities: factorization, square parts, divisors, Kronecker symbol."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Tuple

Factorization = List[Tuple[int, int]]

MAX_INPUT = 2**63
TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin bases for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _check_width(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > MAX_INPUT:
        raise OverflowError(f"{n} exceeds the supported bound 2^63")


@lru_cache(maxsize=1)
def _small_primes() -> Tuple[int, ...]:
    limit = TRIAL_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic for all n < 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _split(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as a sorted list of ``(prime, exponent)``.

    Trial division by primes below 10^6, then Pollard rho on any remaining
    cofactor. ``factorize(1) == []``.
    """
    _check_width(n)
    result: dict = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            result[p] = e
    if n > 1:
        if n < TRIAL_LIMIT * TRIAL_LIMIT:
            result[n] = result.get(n, 0) + 1
        else:
            _split(n, result)
    return sorted(result.items())


def greatest_square_divisor(n: int) -> int:
    """Largest perfect square dividing n."""
    out = 1
    for p, e in factorize(n):
        out *= p ** (2 * (e // 2))
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisors_congruent(n: int, r: int, m: int) -> List[int]:
    """Divisors d of n with d = r (mod m), ascending."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    return [d for d in divisors(n) if d % m == r]


def kronecker(D: int, m: int) -> int:
    """Kronecker symbol (D/m) for arbitrary integers D, m."""
    if m == 0:
        return 1 if D in (1, -1) else 0
    sign = 1
    if m < 0:
        m = -m
        if D < 0:
            sign = -1
    # factor 2 of the bottom argument
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 == 1 and D % 8 in (3, 5):
            sign = -sign
    return sign * jacobi(D, m)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False
