"""Flat tables on F_{p^k}, k > 1, that are not multiplicative characters.

Composing an injective character with an invertible F_p-linear map fixing 1
preserves the flat-autocorrelation property; since the number of such maps
exceeds the number of injective characters, at least one composite cannot
itself be a character.  The scan below verifies both verdicts exactly for
every stabilizer map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    Character,
    FunctionTable,
    character_table,
    compose_with_linear,
    is_cohn,
    is_multiplicative,
)
from .finite_field import FieldDescriptor, LinearMap, make_ext_field, one_stabilizer_maps
from .ntheory import euler_phi


@dataclass(frozen=True)
class CounterexampleReport:
    field: FieldDescriptor
    base_character_A: int
    linear_map: LinearMap
    table: FunctionTable
    is_cohn: bool
    is_multiplicative: bool
    stabilizer_count: int
    injective_character_count: int

    def is_counterexample(self) -> bool:
        return self.is_cohn and not self.is_multiplicative

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "base_character_A": self.base_character_A,
            "linear_map": self.linear_map.to_json(),
            "table": self.table.to_json(),
            "verdicts": {
                "is_cohn": self.is_cohn,
                "is_multiplicative": self.is_multiplicative,
            },
            "counts": {
                "stabilizer_maps": self.stabilizer_count,
                "injective_characters": self.injective_character_count,
            },
        }


def injective_character(field: FieldDescriptor, m: int) -> FunctionTable:
    """The character g^j -> zeta_{q-1}^j embedded into mu_m; injective on units."""
    if field.k < 2:
        raise ValueError("injective-character construction expects k >= 2")
    if m % (field.q - 1) != 0:
        raise ValueError(f"m = {m} must be a multiple of q - 1 = {field.q - 1}")
    return character_table(Character(field, 1), m)


def find_counterexamples(p: int, k: int) -> list[CounterexampleReport]:
    """Verdicts for the injective character composed with every stabilizer map
    of F_{p^k}; every composite is flat, and at least one is not multiplicative."""
    if k < 2:
        raise ValueError("counterexamples exist only for k >= 2")
    field = make_ext_field(p, k)
    m = field.q - 1
    base = injective_character(field, m)
    maps = one_stabilizer_maps(field)
    injective_count = euler_phi(field.q - 1)
    reports = []
    for lam in maps:
        composite = compose_with_linear(base, lam)
        reports.append(
            CounterexampleReport(
                field=field,
                base_character_A=1,
                linear_map=lam,
                table=composite,
                is_cohn=bool(is_cohn(composite)),
                is_multiplicative=is_multiplicative(composite) is not None,
                stabilizer_count=len(maps),
                injective_character_count=injective_count,
            )
        )
    return reports
