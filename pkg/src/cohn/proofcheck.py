"""Exact execution of the identification pipeline on a concrete flat table.

For f with values in mu_m over F_p, write m = n * p^k with gcd(n, p) = 1 and
l = max(1, k).  The Gauss sum G = sum f(x) zeta_p^x lives in Q(zeta_M) with
M = n * p^l, and the generator sigma_t of the automorphisms fixing zeta_n
sends G to zeta_{p^l}^a * zeta_n^b * G for a unique (a, b).  The pipeline
checks, per instance:

* k = 0: a vanishes mod p, the shift relation f(t^-1 x) = f(x) zeta_n^b
  holds pointwise, and f is recovered as an explicit character.
* k >= 1: no zeta_{p^k}^s * G is fixed by sigma_t (the computable stand-in
  for membership in Q(zeta_n)), the value split f = f1 * f2 through
  mu_m = mu_{p^k} x mu_n has constant f1, and the mu_n-valued residual
  re-enters the k = 0 case.

Membership in the fixed field is decided by sigma_t-invariance throughout;
no ideal arithmetic is performed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .characters import (
    FunctionTable,
    gauss_sum,
    is_cohn,
    is_multiplicative,
    spectrum_check,
)
from .cyclotomic import CycloElement, conjugate, galois, zeta
from .errors import ContradictionError
from .ntheory import crt_pair, smallest_generator_mod_prime_power


def factor_m(m: int, p: int) -> tuple[int, int]:
    """The unique decomposition m = n * p^k with gcd(n, p) = 1."""
    if m < 1:
        raise ValueError("m must be positive")
    k = 0
    n = m
    while n % p == 0:
        n //= p
        k += 1
    return n, k


@dataclass(frozen=True)
class TransformationWitness:
    """Exact data of sigma_t(G) = zeta_{p^l}^a * zeta_n^b * G."""

    t: int
    a: int
    b: int
    l: int
    n: int
    k: int

    def to_json(self) -> dict:
        return {"t": self.t, "a": self.a, "b": self.b, "l": self.l, "n": self.n, "k": self.k}


@dataclass(frozen=True)
class SplitTable:
    """Pointwise factorization f = f1 * f2 with f1 valued in mu_{p^k}, f2 in mu_n."""

    f1: FunctionTable
    f2: FunctionTable

    def __post_init__(self):
        field = self.f1.field
        if self.f2.field != field:
            raise ValueError("split tables must share a field")
        m = self.f1.m * self.f2.m
        for i in range(field.q):
            e1, e2 = self.f1.exponents[i], self.f2.exponents[i]
            if (e1 is None) != (e2 is None):
                raise ValueError("split tables must share a support")


def _sigma_exponent(t: int, pl: int, n: int) -> int:
    """Exponent t' mod n*pl acting as zeta_{p^l} -> zeta_{p^l}^t while fixing zeta_n."""
    if n == 1:
        return t % pl
    return crt_pair(t, pl, 1, n)


def find_transformation(f: FunctionTable) -> TransformationWitness:
    """Witness (t, a, b) for a flat table: t is the smallest generator of the
    unit group mod p^l, and the unit sigma_t(G)/G is recognized exactly as
    zeta_{p^l}^a * zeta_n^b by a finite scan."""
    check = is_cohn(f)
    if not check:
        raise ValueError(f"find_transformation requires a flat table ({check.reason})")
    p = f.field.p
    n, k = factor_m(f.m, p)
    l = max(1, k)
    pl = p**l
    M = n * pl
    G = gauss_sum(f, 1)
    assert G.modulus == M
    conj_g = conjugate(G)
    if G * conj_g != CycloElement.rational(M, p):
        raise ContradictionError("flat table whose Gauss sum does not have squared modulus p")
    t = smallest_generator_mod_prime_power(p, l)
    sigma_g = galois(G, _sigma_exponent(t, pl, n))
    # G^-1 = conj(G)/p, valid because G * conj(G) = p was just certified
    u = (sigma_g * conj_g) / p
    for a in range(pl):
        for b in range(n):
            if u == zeta(M, (a * n + b * pl) % M):
                witness = TransformationWitness(t=t, a=a, b=b, l=l, n=n, k=k)
                assert sigma_g == zeta(M, (a * n + b * pl) % M) * G
                return witness
    raise ContradictionError(
        f"transformation unit {u!r} is not of the form zeta_{{p^l}}^a * zeta_n^b"
    )


def check_a_vanishes(f: FunctionTable) -> bool:
    """For gcd(m, p) = 1: whether the witness exponent a is congruent to 0 mod p."""
    p = f.field.p
    n, k = factor_m(f.m, p)
    if k != 0:
        raise ValueError("the vanishing check applies only when p does not divide m")
    witness = find_transformation(f)
    return witness.a % p == 0


def check_character_relation(f: FunctionTable, witness: TransformationWitness) -> bool:
    """For gcd(m, p) = 1: f(t^-1 x) = f(x) * zeta_n^b at every nonzero x, and
    zeta_n^b is a (p-1)-th root of unity."""
    p = f.field.p
    if witness.k != 0 or f.m != witness.n:
        raise ValueError("the relation check applies only when p does not divide m")
    n, b = witness.n, witness.b
    order = n // math.gcd(b, n) if b else 1
    if (p - 1) % order != 0:
        return False
    t_inv = pow(witness.t, -1, p)
    exps = f.exponents
    for x in range(1, p):
        if exps[(t_inv * x) % p] != (exps[x] + b) % n:
            return False
    return True


def zp_coefficient_collapse(
    a_list: Sequence[CycloElement], p: int, k: int
) -> Optional[list[CycloElement]]:
    """Decide whether sum_i a_list[i] * zeta_{p^k}^i lies in Q(zeta_n, zeta_p).

    Uses the coefficient relations forced by the minimal polynomial of
    zeta_{p^k}: membership holds iff a_i equals a_{(p-1)p^(k-1) + (i mod p^(k-1))}
    for every i not divisible by p^(k-1).  On success returns the collapsed
    coefficients (a_{p^(k-1) j}) for j = 0..p-1; otherwise None.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pk = p**k
    if len(a_list) != pk:
        raise ValueError(f"need exactly p^k = {pk} coefficients, got {len(a_list)}")
    pk1 = p ** (k - 1)
    for i in range((p - 1) * pk1):
        if i % pk1 == 0:
            continue
        if a_list[i] != a_list[(p - 1) * pk1 + i % pk1]:
            return None
    return [a_list[pk1 * j] for j in range(p)]


def first_fixed_s(G: CycloElement, p: int, k: int, n: int) -> Optional[int]:
    """Smallest s in [0, p^k) with zeta_{p^k}^s * G fixed by sigma_t, or None.

    sigma_t-invariance is the computable criterion for membership in the
    subfield Q(zeta_n); t is the smallest generator of the units mod p^k.
    """
    pk = p**k
    M = n * pk
    if G.modulus != M:
        raise ValueError(f"element must live at level n * p^k = {M}")
    t = smallest_generator_mod_prime_power(p, k)
    t_exp = _sigma_exponent(t, pk, n)
    for s in range(pk):
        y = zeta(M, (s * n) % M) * G
        if galois(y, t_exp) == y:
            return s
    return None


def check_no_s_in_K(f: FunctionTable) -> bool:
    """For p | m: no zeta_{p^k}^s * G(f, psi) lands in the fixed field Q(zeta_n)."""
    p = f.field.p
    n, k = factor_m(f.m, p)
    if k < 1:
        raise ValueError("the fixed-field scan applies only when p divides m")
    G = gauss_sum(f, 1)
    return first_fixed_s(G, p, k, n) is None


def split_and_check_f1_constant(f: FunctionTable) -> tuple[SplitTable, bool]:
    """CRT-split the values of f through mu_m = mu_{p^k} x mu_n and verify that
    the mu_{p^k} part f1 is constant (hence 1, since f1(1) = 1).

    Also verifies, for every r != 0, that the p-1 values f1(x) * zeta_p^(r x)
    are pairwise distinct; a non-constant f1 fails this scan at some r.
    """
    field = f.field
    p = field.p
    n, k = factor_m(f.m, p)
    if k < 1:
        raise ValueError("the value split applies only when p divides m")
    pk = p**k
    if n == 1:
        inv_n, inv_pk = 1, 0
    else:
        inv_n = pow(n, -1, pk)
        inv_pk = pow(pk, -1, n)
    exps1: list = [None] * field.q
    exps2: list = [None] * field.q
    for i, e in enumerate(f.exponents):
        if e is None:
            continue
        exps1[i] = (e * inv_n) % pk
        exps2[i] = (e * inv_pk) % n
        assert (exps1[i] * n + exps2[i] * pk) % f.m == e
    split = SplitTable(
        f1=FunctionTable(field, pk, tuple(exps1)),
        f2=FunctionTable(field, n, tuple(exps2)),
    )
    unit_exps1 = [exps1[x] for x in range(field.q) if exps1[x] is not None]
    constant = len(set(unit_exps1)) == 1
    pk1 = p ** (k - 1)
    distinct = all(
        len({(exps1[x] + r * x * pk1) % pk for x in range(1, p) if exps1[x] is not None})
        == p - 1
        for r in range(1, p)
    )
    return split, constant and distinct


@dataclass(frozen=True)
class TraceStage:
    stage: str
    verdict: bool
    detail: dict

    def to_json(self) -> dict:
        out = {"stage": self.stage, "verdict": self.verdict}
        for key, value in self.detail.items():
            out[key] = value.to_json() if hasattr(value, "to_json") else value
        return out


@dataclass(frozen=True)
class TraceReport:
    table: FunctionTable
    stages: tuple[TraceStage, ...]
    terminal_A: int

    def to_json(self) -> dict:
        return {
            "function": self.table.to_json(),
            "stages": [s.to_json() for s in self.stages],
            "terminal_A": self.terminal_A,
        }


def full_trace(f: FunctionTable) -> TraceReport:
    """Run the applicable identification pipeline on a flat table over F_p and
    return every intermediate exact value; the terminal claim is the character
    exponent A with f = chi_A.  Any stage failure raises with the stage name."""
    if f.field.k != 1:
        raise ValueError("traces are defined only for prime fields")
    check = is_cohn(f)
    if not check:
        raise ValueError(f"full_trace requires a flat table ({check.reason})")
    p = f.field.p
    stages: list[TraceStage] = []

    def fail(stage: str, value) -> ContradictionError:
        return ContradictionError(f"stage {stage!r} failed on offending value {value!r}")

    def run_coprime_case(g: FunctionTable) -> int:
        if not spectrum_check(g):
            raise fail("spectrum_check", gauss_sum(g, 0))
        stages.append(
            TraceStage("spectrum_check", True, {"gauss_sum": gauss_sum(g, 1)})
        )
        witness = find_transformation(g)
        stages.append(TraceStage("find_transformation", True, {"witness": witness}))
        if witness.a % p != 0:
            raise fail("check_a_vanishes", witness.a)
        stages.append(TraceStage("check_a_vanishes", True, {"a": witness.a}))
        if not check_character_relation(g, witness):
            raise fail("check_character_relation", witness.b)
        stages.append(TraceStage("check_character_relation", True, {"b": witness.b}))
        chi = is_multiplicative(g)
        if chi is None:
            raise fail("is_multiplicative", g.exponents)
        stages.append(TraceStage("is_multiplicative", True, {"A": chi.A}))
        return chi.A

    n, k = factor_m(f.m, p)
    if k == 0:
        terminal = run_coprime_case(f)
    else:
        if not check_no_s_in_K(f):
            raise fail("check_no_s_in_K", gauss_sum(f, 1))
        stages.append(TraceStage("check_no_s_in_K", True, {"n": n, "k": k}))
        split, f1_ok = split_and_check_f1_constant(f)
        if not f1_ok:
            raise fail("split_and_check_f1_constant", split.f1.exponents)
        stages.append(
            TraceStage(
                "split_and_check_f1_constant",
                True,
                {"f1": split.f1, "f2": split.f2},
            )
        )
        residual = split.f2
        if not is_cohn(residual):
            raise fail("residual_is_cohn", residual.exponents)
        stages.append(TraceStage("reduce_to_coprime_case", True, {"m": n}))
        terminal = run_coprime_case(residual)
    chi = is_multiplicative(f)
    if chi is None or chi.A != terminal:
        raise fail("terminal_identification", terminal)
    stages.append(TraceStage("terminal", True, {"A": terminal}))
    return TraceReport(table=f, stages=tuple(stages), terminal_A=terminal)
