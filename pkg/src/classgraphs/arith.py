"""Small integer-arithmetic helpers: primality, factoring, orders mod m."""

from __future__ import annotations

import math

from .errors import NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^f with p prime, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = ps[0]
    f = 0
    while q > 1:
        q //= p
        f += 1
    return p, f


def multiplicative_order(g: int, m: int) -> int | None:
    """Order of g in (Z/m)^*, or None when gcd(g, m) > 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    g %= m
    if math.gcd(g, m) != 1:
        return None
    k = 1
    x = g
    while x != 1:
        x = x * g % m
        k += 1
    return k
