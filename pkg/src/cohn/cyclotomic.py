"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is stored in canonical form: a coefficient vector of length
phi(m) over the power basis {1, zeta_m, ..., zeta_m^(phi(m)-1)}, reduced
modulo the m-th cyclotomic polynomial.  Equality is therefore a plain
vector comparison.  All arithmetic is exact (ints and Fractions);
floating point appears only in `complex_eval`, which is a screening aid
and never decides a verdict.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .ntheory import euler_phi

Rational = Union[int, Fraction]


def _norm(q: Rational) -> Rational:
    """Collapse Fractions with denominator 1 to plain ints."""
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q)
    return q


def _poly_mul(a: Sequence[Rational], b: Sequence[Rational]) -> list[Rational]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_monic(num: Sequence[Rational], den: Sequence[Rational]):
    """Quotient and remainder of num by a monic divisor; exact over Z and Q."""
    num = list(num)
    d = len(den) - 1
    quot = [0] * max(1, len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quot[i - d] = c
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    return quot, num[:d]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic, degree phi(m)) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by the product of the lower-level
    cyclotomic polynomials, memoized per process.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod_monic(num, den)
    assert not any(rem), "cyclotomic division must be exact"
    return tuple(int(c) for c in quot)


@lru_cache(maxsize=None)
def power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j is the canonical coefficient vector of zeta_m^j, for j in [0, m)."""
    phi = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    rows = []
    row = [0] * phi
    row[0] = 1
    rows.append(tuple(row))
    for _ in range(1, m):
        shifted = [0] + list(row)
        lead = shifted.pop()
        if lead:
            # x^phi = -(poly - x^phi), poly is monic
            for i in range(phi):
                shifted[i] -= lead * poly[i]
        row = shifted
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class CycloElement:
    """Canonical element of Q(zeta_m): modulus m and phi(m) exact coefficients."""

    modulus: int
    coeffs: tuple

    @staticmethod
    def from_coeffs(m: int, coeffs: Sequence[Rational]) -> "CycloElement":
        """Build from a coefficient vector of any length, reducing mod the m-th cyclotomic polynomial."""
        phi = euler_phi(m)
        coeffs = list(coeffs)
        if len(coeffs) > phi:
            _, coeffs = _poly_divmod_monic(coeffs, cyclotomic_polynomial(m))
        coeffs += [0] * (phi - len(coeffs))
        return CycloElement(m, tuple(_norm(c) for c in coeffs))

    @staticmethod
    def rational(m: int, value: Rational) -> "CycloElement":
        coeffs = [0] * euler_phi(m)
        coeffs[0] = _norm(value)
        return CycloElement(m, tuple(coeffs))

    @staticmethod
    def from_exponent_counts(m: int, counts: Sequence[Rational]) -> "CycloElement":
        """Exact value of sum_j counts[j] * zeta_m^j, counts indexed by j in [0, m)."""
        if len(counts) != m:
            raise ValueError("counts must have length m")
        table = power_table(m)
        acc = [0] * euler_phi(m)
        for j, c in enumerate(counts):
            if c:
                row = table[j]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += c * r
        return CycloElement(m, tuple(_norm(c) for c in acc))

    def _check_same(self, other: "CycloElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus} (embed first)"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement.rational(self.modulus, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_same(other)
        return CycloElement(
            self.modulus,
            tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.modulus, tuple(_norm(-c) for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement.rational(self.modulus, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(
                self.modulus, tuple(_norm(c * other) for c in self.coeffs)
            )
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_same(other)
        prod = _poly_mul(self.coeffs, other.coeffs)
        return CycloElement.from_coeffs(self.modulus, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by an exact rational scalar only."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = CycloElement.rational(self.modulus, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def to_json(self) -> dict:
        nums, dens = [], []
        for c in self.coeffs:
            f = Fraction(c)
            nums.append(f.numerator)
            dens.append(f.denominator)
        return {"modulus": self.modulus, "num": nums, "den": dens}

    @staticmethod
    def from_json(data: dict) -> "CycloElement":
        coeffs = [Fraction(n, d) for n, d in zip(data["num"], data["den"])]
        return CycloElement.from_coeffs(data["modulus"], coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.modulus}^{i}")
        return f"Cyclo({' + '.join(terms) or '0'})"


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_modulus^exponent with the exponent reduced mod the modulus."""

    modulus: int
    exponent: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    def as_cyclo(self, modulus: Optional[int] = None) -> CycloElement:
        target = self.modulus if modulus is None else modulus
        if target % self.modulus != 0:
            raise ValueError("target modulus must be a multiple of the root's order")
        return zeta(target, self.exponent * (target // self.modulus))


def zeta(m: int, e: int = 1) -> CycloElement:
    """The root of unity zeta_m^e as a canonical element of Q(zeta_m)."""
    return CycloElement(m, power_table(m)[e % m])


def galois(z: CycloElement, t: int) -> CycloElement:
    """Image of z under the automorphism zeta_m -> zeta_m^t; requires gcd(t, m) = 1."""
    m = z.modulus
    t %= m
    if math.gcd(t, m) != 1:
        raise ValueError(f"t = {t} is not coprime to the modulus {m}")
    table = power_table(m)
    acc = [0] * euler_phi(m)
    for i, c in enumerate(z.coeffs):
        if c:
            row = table[(i * t) % m]
            for j, r in enumerate(row):
                if r:
                    acc[j] += c * r
    return CycloElement(m, tuple(_norm(c) for c in acc))


def conjugate(z: CycloElement) -> CycloElement:
    """Complex conjugation, i.e. the automorphism zeta_m -> zeta_m^(-1)."""
    return galois(z, -1)


def embed(z: CycloElement, m_target: int) -> CycloElement:
    """Image of z under zeta_m -> zeta_target^(target/m); requires m | m_target."""
    m = z.modulus
    if m_target % m != 0:
        raise ValueError(f"cannot embed level {m} into non-multiple level {m_target}")
    if m_target == m:
        return z
    scale = m_target // m
    table = power_table(m_target)
    acc = [0] * euler_phi(m_target)
    for i, c in enumerate(z.coeffs):
        if c:
            row = table[(i * scale) % m_target]
            for j, r in enumerate(row):
                if r:
                    acc[j] += c * r
    return CycloElement(m_target, tuple(_norm(c) for c in acc))


def complex_eval(z: CycloElement) -> complex:
    """Double-precision value at zeta_m = e^(2 pi i / m); screening only."""
    m = z.modulus
    return sum(
        float(c) * cmath.exp(2j * cmath.pi * i / m)
        for i, c in enumerate(z.coeffs)
        if c
    ) + 0j


def recognize_root_of_unity(z: CycloElement) -> Optional[RootOfUnity]:
    """Identify z as a root of unity, if it is one.

    Scans the full set of roots of unity contained in Q(zeta_m), namely
    +/- zeta_m^e for e in [0, m), and returns the match with its order as
    modulus.  Returns None when z is not among them.
    """
    m = z.modulus
    table = power_table(m)
    two_m = 2 * m
    for e in range(m):
        row = table[e]
        if z.coeffs == row:
            j = 2 * e
        elif all(a == -b for a, b in zip(z.coeffs, row)):
            j = (2 * e + m) % two_m
        else:
            continue
        g = math.gcd(j, two_m)
        return RootOfUnity(two_m // g, j // g)
    return None
