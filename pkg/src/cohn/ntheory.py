"""Small exact number-theory helpers (desk scale, trial division throughout)."""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    for p in prime_factors(n):
        result = result // p * (p - 1)
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)^*; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for p in prime_factors(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def smallest_generator_mod_prime_power(p: int, l: int) -> int:
    """Smallest t >= 2 generating the (cyclic) unit group of Z/p^l, p odd."""
    modulus = p**l
    target = euler_phi(modulus)
    for t in range(2, modulus):
        if t % p != 0 and multiplicative_order(t, modulus) == target:
            return t
    raise ValueError(f"no generator modulo {p}^{l}")


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """The residue mod m1*m2 congruent to r1 mod m1 and r2 mod m2 (coprime moduli)."""
    if math.gcd(m1, m2) != 1:
        raise ValueError("moduli must be coprime")
    return (r1 * m2 * pow(m2, -1, m1) + r2 * m1 * pow(m1, -1, m2)) % (m1 * m2)
