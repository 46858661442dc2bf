"""Characteristic-p side: transport mu_n into a finite field and check the
flat-sum hypothesis and power-map conclusion on the reduced sequence.

Choosing an element omega of exact order n in F_{p^d} (d the order of p mod
n) fixes an injective multiplicative map zeta_n^e -> omega^e; this plays the
role of reduction modulo a prime above p, without materializing any ideal.
omega is the candidate with lexicographically smallest coordinates, making
the choice deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .characters import FunctionTable
from .errors import ContradictionError
from .finite_field import FFElement, FieldDescriptor, make_ext_field, make_prime_field
from .ntheory import multiplicative_order


@dataclass(frozen=True)
class ReductionMap:
    """zeta_n^e -> omega^e into F_{p^d}, with omega of exact multiplicative order n."""

    n: int
    p: int
    d: int
    target: FieldDescriptor
    omega: FFElement

    def reduce_root(self, e: int) -> FFElement:
        return self.omega ** (e % self.n)


def build_reduction(n: int, p: int) -> ReductionMap:
    """Deterministic reduction map for mu_n in characteristic p; needs gcd(n, p) = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(n, p) != 1:
        raise ValueError(f"n = {n} must be coprime to p = {p}")
    d = multiplicative_order(p, n) if n > 1 else 1
    target = make_prime_field(p) if d == 1 else make_ext_field(p, d)
    group_order = target.q - 1
    for x in target.elements:
        if x == target.zero:
            continue
        if group_order // math.gcd(target.dlog(x), group_order) == n:
            return ReductionMap(n=n, p=p, d=d, target=target, omega=x)
    raise ValueError(f"no element of order {n} in F_{{{p}^{d}}} (construction bug)")


@dataclass(frozen=True)
class BiroSequence:
    """Sequence a_i in F_{p^d} indexed by i in F_p with a_0 = 0, a_1 = 1 and
    a_i != 0 for i != 0."""

    p: int
    values: tuple[FFElement, ...]

    def __post_init__(self):
        if len(self.values) != self.p:
            raise ValueError("need one value per residue mod p")
        field = self.values[0].field
        if any(v.field != field for v in self.values):
            raise ValueError("values must share a field")
        if self.values[0] != field.zero:
            raise ValueError("a_0 must be 0")
        if self.values[1] != field.one:
            raise ValueError("a_1 must be 1")
        if any(v == field.zero for v in self.values[1:]):
            raise ValueError("a_i must be nonzero for i != 0")

    @property
    def field(self) -> FieldDescriptor:
        return self.values[0].field

    def to_json(self) -> dict:
        field = self.field
        return {
            "p": self.p,
            "d": field.k,
            "modulus": list(field.modulus) if field.modulus else None,
            "values": [list(v.coeffs) for v in self.values],
        }


def reduce_function(f: FunctionTable, rmap: ReductionMap) -> BiroSequence:
    """Transport a normalized mu_n-valued table on F_p along the reduction map."""
    field = f.field
    if field.k != 1:
        raise ValueError("reduction applies to tables over prime fields")
    if field.p != rmap.p:
        raise ValueError("table and reduction map disagree on p")
    if f.m != rmap.n:
        raise ValueError(f"order mismatch: table values lie in mu_{f.m}, map reduces mu_{rmap.n}")
    if not f.is_cohn_normalized():
        raise ValueError("reduction requires a normalized table (f(0)=0, f(1)=1)")
    values = tuple(
        rmap.target.zero if e is None else rmap.reduce_root(e) for e in f.exponents
    )
    return BiroSequence(p=field.p, values=values)


def biro_check(seq: BiroSequence) -> Optional[int]:
    """Verify sum_{i != 0} a_{i+j}/a_i = -1 for every j != 0 and, when it holds,
    return the exponent A in [1, p-2] with a_i = i^A for all i.

    Returns None when the sum condition fails.  The sum condition holding
    with no power-map identification contradicts the underlying theorem and
    raises ContradictionError.
    """
    p = seq.p
    field = seq.field
    minus_one = -field.one
    for j in range(1, p):
        total = field.zero
        for i in range(1, p):
            total = total + seq.values[(i + j) % p] / seq.values[i]
        if total != minus_one:
            return None
    for a in range(1, p - 1):
        if all(seq.values[i] == field.from_int(i) ** a for i in range(1, p)):
            return a
    raise ContradictionError(
        "flat sequence admits no power-map identification (internal bug)"
    )
