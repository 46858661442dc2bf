"""Arithmetic in F_p and F_{p^k} at desk scale.

Fields are constructed deterministically: the modulus polynomial and the
multiplicative generator are the lexicographically smallest valid
candidates, so element indexing and discrete logs are reproducible run to
run.  Elements are indexed by the lexicographic order of their
polynomial-basis coordinate tuples (c_0, ..., c_{k-1}); for prime fields
this is just 0, 1, ..., p-1.  Discrete logs come from a full table, which
is fine for p^k up to ~10^4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import TrivialCaseError
from .ntheory import is_prime, prime_factors

_FIELD_CACHE: dict[tuple[int, int], "FieldDescriptor"] = {}


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise TrivialCaseError("p = 2 is a trivial case; only odd primes are supported")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


class FieldDescriptor:
    """F_p or F_{p^k} with a fixed modulus polynomial, generator and dlog table.

    Immutable after construction; all element operations are pure.
    """

    def __init__(self, p: int, k: int, modulus: Optional[tuple[int, ...]]):
        _check_odd_prime(p)
        if k < 1:
            raise ValueError("k must be positive")
        if k == 1 and modulus is not None:
            raise ValueError("prime fields take no modulus polynomial")
        if k >= 2:
            if modulus is None or len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.elements = tuple(
            FFElement(self, coeffs)
            for coeffs in itertools.product(range(p), repeat=k)
        )
        self._index = {e.coeffs: i for i, e in enumerate(self.elements)}
        self.zero = self.elements[0]
        self.one = self.element((1,) + (0,) * (k - 1))
        self.generator = self._find_generator()
        self._exp = [self.one]
        for _ in range(self.q - 2):
            self._exp.append(self._exp[-1] * self.generator)
        self._dlog = {x.coeffs: j for j, x in enumerate(self._exp)}

    # -- construction helpers -------------------------------------------------

    def _find_generator(self) -> "FFElement":
        order = self.q - 1
        factors = prime_factors(order)
        for x in self.elements:
            if x == self.zero:
                continue
            if all(x ** (order // f) != self.one for f in factors):
                return x
        raise ValueError("no generator found (field construction bug)")

    # -- identity and lookups -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldDescriptor)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; modulus={list(self.modulus)})"

    def element(self, coeffs) -> "FFElement":
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"need exactly {self.k} coordinates")
        return FFElement(self, coeffs)

    def from_int(self, c: int) -> "FFElement":
        """The constant c, i.e. the image of the integer c in the prime subfield."""
        return self.element((c % self.p,) + (0,) * (self.k - 1))

    def from_index(self, i: int) -> "FFElement":
        return self.elements[i]

    def index(self, x: "FFElement") -> int:
        return self._index[x.coeffs]

    def generator_power(self, j: int) -> "FFElement":
        return self._exp[j % (self.q - 1)]

    def dlog(self, a: "FFElement") -> int:
        """The unique e in [0, q-1) with generator^e = a; a must be nonzero."""
        if a == self.zero:
            raise ValueError("dlog of zero is undefined")
        return self._dlog[a.coeffs]

    # -- coefficient arithmetic ------------------------------------------------

    def _mul_coeffs(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        if self.k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.modulus
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d] % p
            prod[d] = 0
            if c:
                for i in range(self.k):
                    prod[d - self.k + i] -= c * mod[i]
        return tuple(c % p for c in prod[: self.k])

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus) if self.modulus else None,
            "generator": list(self.generator.coeffs),
        }


@dataclass(frozen=True)
class FFElement:
    """Element of a FieldDescriptor in polynomial-basis coordinates."""

    field: FieldDescriptor
    coeffs: tuple[int, ...]

    def _check_same(self, other: "FFElement") -> None:
        if self.field != other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "FFElement") -> "FFElement":
        self._check_same(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FFElement") -> "FFElement":
        self._check_same(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FFElement":
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FFElement") -> "FFElement":
        self._check_same(other)
        return FFElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> "FFElement":
        field = self.field
        if self == field.zero:
            if e == 0:
                return field.one
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return field.zero
        e %= field.q - 1
        out = field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __invert__(self) -> "FFElement":
        if self == self.field.zero:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: "FFElement") -> "FFElement":
        return self * ~other

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.coeffs[0]}"
        return f"{list(self.coeffs)}"


def make_prime_field(p: int) -> FieldDescriptor:
    """F_p with the smallest primitive root as generator; p an odd prime."""
    key = (p, 1)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldDescriptor(p, 1, None)
    return _FIELD_CACHE[key]


def _poly_rem_mod_p(num: list[int], den: list[int], p: int) -> list[int]:
    # den monic; remainder of num by den over F_p
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        num[i] = 0
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]]


def _is_irreducible(candidate: list[int], k: int, p: int) -> bool:
    # trial division by every monic polynomial of degree 1..k//2
    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            div = list(lower) + [1]
            if not any(_poly_rem_mod_p(candidate, div, p)):
                return False
    return True


def make_ext_field(p: int, k: int) -> FieldDescriptor:
    """F_{p^k} with the lexicographically smallest irreducible modulus, k >= 2."""
    _check_odd_prime(p)
    if k < 2:
        raise ValueError("extension fields require k >= 2; use make_prime_field")
    key = (p, k)
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    for j in range(p**k):
        lower = [(j // p**i) % p for i in range(k)]
        candidate = lower + [1]
        if _is_irreducible(candidate, k, p):
            field = FieldDescriptor(p, k, tuple(candidate))
            _FIELD_CACHE[key] = field
            return field
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p} (unreachable)")


@dataclass(frozen=True)
class LinearMap:
    """Invertible F_p-linear map on F_{p^k}, as a k x k matrix on coordinates."""

    field: FieldDescriptor
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k, p = self.field.k, self.field.p
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            raise ValueError("matrix must be k x k")
        if _det_mod_p(self.matrix, p) == 0:
            raise ValueError("matrix is singular mod p")

    def __call__(self, x: FFElement) -> FFElement:
        if x.field != self.field:
            raise ValueError("element belongs to a different field")
        p = self.field.p
        coords = tuple(
            sum(row[j] * x.coeffs[j] for j in range(self.field.k)) % p
            for row in self.matrix
        )
        return FFElement(self.field, coords)

    def is_identity(self) -> bool:
        k = self.field.k
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(k) for j in range(k))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]


def _det_mod_p(matrix, p: int) -> int:
    rows = [list(r) for r in matrix]
    n = len(rows)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = (det * rows[col][col]) % p
        inv = pow(rows[col][col], -1, p)
        for r in range(col + 1, n):
            factor = (rows[r][col] * inv) % p
            if factor:
                for c in range(col, n):
                    rows[r][c] = (rows[r][c] - factor * rows[col][c]) % p
    return det % p


def one_stabilizer_maps(field: FieldDescriptor) -> tuple[LinearMap, ...]:
    """All invertible F_p-linear maps on F_{p^k} fixing 1, lexicographic on entries.

    1 is the basis vector e_0, so the first matrix column is pinned to e_0
    and the count is |GL_k(F_p)| / (p^k - 1).
    """
    if field.k < 2:
        raise ValueError("stabilizer enumeration requires an extension field (k >= 2)")
    k, p = field.k, field.p
    e0 = tuple(1 if i == 0 else 0 for i in range(k))
    vectors = list(itertools.product(range(p), repeat=k))
    maps = []
    for cols in itertools.product(vectors, repeat=k - 1):
        columns = (e0,) + cols
        matrix = tuple(tuple(columns[j][i] for j in range(k)) for i in range(k))
        if _det_mod_p(matrix, p):
            maps.append(LinearMap(field, matrix))
    maps.sort(key=lambda lam: lam.matrix)
    return tuple(maps)
