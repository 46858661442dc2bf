"""Independent reference computations used to pin expected test values.

Everything here is deliberately separate from the package's arithmetic:
complex floating sums, integer power scans and sympy polynomial division
stand in as oracles for the exact code paths they check.
"""

import cmath


def legendre(a: int, p: int) -> int:
    """Quadratic-residue symbol via Euler's criterion: 0, 1 or -1."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def unit_complex(m: int, e) -> complex:
    """Value of an exponent entry: 0 for None, e^(2 pi i e / m) otherwise."""
    if e is None:
        return 0j
    return cmath.exp(2j * cmath.pi * e / m)


def brute_autocorrelation(exponents, m: int, h: int) -> complex:
    """Floating autocorrelation of a prime-field exponent table at shift h."""
    p = len(exponents)
    values = [unit_complex(m, e) for e in exponents]
    return sum(values[x] * values[(x + h) % p].conjugate() for x in range(p))


def is_flat_table(exponents, m: int, tol: float = 1e-9) -> bool:
    """Floating check that every off-peak autocorrelation is -1."""
    p = len(exponents)
    return all(abs(brute_autocorrelation(exponents, m, h) + 1) < tol for h in range(1, p))


def brute_gauss_sum(exponents, m: int, t: int) -> complex:
    p = len(exponents)
    return sum(
        unit_complex(m, e) * cmath.exp(2j * cmath.pi * t * x / p)
        for x, e in enumerate(exponents)
    )


def brute_element_order(x: int, p: int) -> int:
    """Multiplicative order of x mod p by direct power scan."""
    acc = x % p
    order = 1
    while acc != 1:
        acc = (acc * x) % p
        order += 1
    return order
