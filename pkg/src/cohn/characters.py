"""Function tables f: F_q -> mu_m union {0}, characters, Gauss sums and the
flat-autocorrelation (Cohn) predicate.

A table stores one exponent per field element, in the field's deterministic
element order: None encodes the value 0, an integer e in [0, m) encodes
zeta_m^e.  The JSON interchange schema is
{"p": int, "k": int, "m": int, "exponents": [null | int, ...]}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cyclotomic import CycloElement, conjugate
from .finite_field import (
    FFElement,
    FieldDescriptor,
    LinearMap,
    make_ext_field,
    make_prime_field,
)


@dataclass(frozen=True)
class FunctionTable:
    """A function F_q -> mu_m union {0} stored as an exponent table."""

    field: FieldDescriptor
    m: int
    exponents: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if len(self.exponents) != self.field.q:
            raise ValueError("exponent table must have one entry per field element")
        object.__setattr__(
            self,
            "exponents",
            tuple(None if e is None else e % self.m for e in self.exponents),
        )

    def exponent_at(self, x: FFElement) -> Optional[int]:
        return self.exponents[self.field.index(x)]

    def is_cohn_normalized(self) -> bool:
        """f(0) = 0, f(1) = 1, and every other value is a root of unity."""
        exps = self.exponents
        zero_i = self.field.index(self.field.zero)
        one_i = self.field.index(self.field.one)
        if exps[zero_i] is not None or exps[one_i] != 0:
            return False
        return all(exps[i] is not None for i in range(self.field.q) if i != zero_i)

    def sort_key(self) -> tuple:
        return tuple(-1 if e is None else e for e in self.exponents)

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "k": self.field.k,
            "m": self.m,
            "exponents": list(self.exponents),
        }

    @staticmethod
    def from_json(data: dict) -> "FunctionTable":
        p, k = data["p"], data["k"]
        field = make_prime_field(p) if k == 1 else make_ext_field(p, k)
        return FunctionTable(field, data["m"], tuple(data["exponents"]))


@dataclass(frozen=True)
class Character:
    """Nontrivial multiplicative character, indexed against the field generator:
    chi(g^j) = zeta_{q-1}^(A*j)."""

    field: FieldDescriptor
    A: int

    def __post_init__(self):
        if not 1 <= self.A <= self.field.q - 2:
            raise ValueError(f"character exponent must lie in [1, {self.field.q - 2}]")

    @property
    def order(self) -> int:
        q1 = self.field.q - 1
        return q1 // math.gcd(self.A, q1)


@dataclass(frozen=True)
class CohnCheck:
    """Verdict of the flat-autocorrelation test, with a witness on failure."""

    ok: bool
    witness_h: Optional[FFElement] = None
    value: Optional[CycloElement] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


def character_table(chi: Character, m: int) -> FunctionTable:
    """The table of chi with values embedded into mu_m; the character order must divide m."""
    field = chi.field
    q1 = field.q - 1
    d = math.gcd(chi.A, q1)
    order = q1 // d
    if m % order != 0:
        raise ValueError(f"character order {order} does not divide m = {m}")
    scale = m // order
    exps: list = [None] * field.q
    for j in range(q1):
        x = field.generator_power(j)
        exps[field.index(x)] = ((chi.A * j) % q1) // d * scale
    return FunctionTable(field, m, tuple(exps))


def gauss_sum(f: FunctionTable, t: int) -> CycloElement:
    """Exact sum_x f(x) zeta_p^(t x) in Q(zeta_M), M = lcm(m, p); prime fields only."""
    field = f.field
    if field.k != 1:
        raise ValueError("Gauss sums over extension fields are out of scope")
    p = field.p
    M = math.lcm(f.m, p)
    val_scale = M // f.m
    add_scale = M // p
    counts = [0] * M
    for x, e in enumerate(f.exponents):
        if e is not None:
            counts[(e * val_scale + t * x * add_scale) % M] += 1
    return CycloElement.from_exponent_counts(M, counts)


def autocorrelation(f: FunctionTable, h: FFElement) -> CycloElement:
    """Exact sum_x f(x) * conj(f(x + h)) as an element of Q(zeta_m)."""
    field = f.field
    if h.field != field:
        raise ValueError("shift h belongs to a different field")
    m = f.m
    exps = f.exponents
    counts = [0] * m
    if field.k == 1:
        p = field.p
        h_int = h.coeffs[0]
        for x, e1 in enumerate(exps):
            if e1 is None:
                continue
            e2 = exps[(x + h_int) % p]
            if e2 is not None:
                counts[(e1 - e2) % m] += 1
    else:
        for i, e1 in enumerate(exps):
            if e1 is None:
                continue
            e2 = exps[field.index(field.elements[i] + h)]
            if e2 is not None:
                counts[(e1 - e2) % m] += 1
    return CycloElement.from_exponent_counts(m, counts)


def is_cohn(f: FunctionTable) -> CohnCheck:
    """True iff f is normalized (f(0)=0, f(1)=1, unimodular elsewhere) and every
    off-peak autocorrelation equals -1 exactly; returns the first violation."""
    if not f.is_cohn_normalized():
        return CohnCheck(False, reason="normalization failed: need f(0)=0, f(1)=1, |f(x)|=1 otherwise")
    minus_one = CycloElement.rational(f.m, -1)
    for h in f.field.elements:
        if h == f.field.zero:
            continue
        value = autocorrelation(f, h)
        if value != minus_one:
            return CohnCheck(False, witness_h=h, value=value, reason="autocorrelation is not -1")
    return CohnCheck(True)


def is_multiplicative(f: FunctionTable) -> Optional[Character]:
    """The character equal to f, if f is multiplicative on units; None otherwise."""
    field = f.field
    exps = f.exponents
    if exps[field.index(field.zero)] is not None:
        raise ValueError("is_multiplicative requires f(0) = 0")
    units = [x for x in field.elements if x != field.zero]
    if any(f.exponent_at(x) is None for x in units):
        return None
    m = f.m
    for x in units:
        ex = f.exponent_at(x)
        for y in units:
            if (ex + f.exponent_at(y)) % m != f.exponent_at(x * y):
                return None
    q1 = field.q - 1
    e_gen = f.exponent_at(field.generator)
    if (e_gen * q1) % m != 0:
        return None
    A = (e_gen * q1 // m) % q1
    if A == 0:
        return None  # trivial character is excluded by the Character invariant
    return Character(field, A)


def spectrum_check(f: FunctionTable) -> bool:
    """True iff G(f, psi_t) * conj(...) = p exactly for all t != 0 and G(f, psi_0) = 0."""
    field = f.field
    if field.k != 1:
        raise ValueError("spectrum check is defined over prime fields only")
    p = field.p
    M = math.lcm(f.m, p)
    if gauss_sum(f, 0) != CycloElement.rational(M, 0):
        return False
    target = CycloElement.rational(M, p)
    for t in range(1, p):
        g = gauss_sum(f, t)
        if g * conjugate(g) != target:
            return False
    return True


def galois_on_values(f: FunctionTable, t: int) -> FunctionTable:
    """Apply zeta_m -> zeta_m^t to the values of f; requires gcd(t, m) = 1."""
    if math.gcd(t, f.m) != 1:
        raise ValueError(f"t = {t} is not coprime to m = {f.m}")
    return FunctionTable(
        f.field, f.m, tuple(None if e is None else (e * t) % f.m for e in f.exponents)
    )


def compose_with_linear(f: FunctionTable, lam: LinearMap) -> FunctionTable:
    """The table of x -> f(lam(x)) for a linear map over the same extension field."""
    field = f.field
    if field.k < 2:
        raise ValueError("linear composition is defined for extension fields (k >= 2)")
    if lam.field != field:
        raise ValueError("linear map belongs to a different field")
    exps = tuple(f.exponents[field.index(lam(x))] for x in field.elements)
    return FunctionTable(field, f.m, exps)
