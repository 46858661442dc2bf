import json
import random

import pytest

from cohn.characters import autocorrelation, compose_with_linear, is_cohn, FunctionTable
from cohn.counterexample import find_counterexamples, injective_character
from cohn.finite_field import make_ext_field, one_stabilizer_maps


def test_injective_character_values_are_distinct():
    F9 = make_ext_field(3, 2)
    table = injective_character(F9, 8)
    nonzero = [e for e in table.exponents if e is not None]
    assert len(nonzero) == 8 and len(set(nonzero)) == 8


def test_injective_character_is_flat():
    F9 = make_ext_field(3, 2)
    assert is_cohn(injective_character(F9, 8))


def test_injective_character_identifies_as_first_character():
    from cohn.characters import is_multiplicative

    F9 = make_ext_field(3, 2)
    chi = is_multiplicative(injective_character(F9, 8))
    assert chi is not None and chi.A == 1


def test_injective_character_requires_divisible_m():
    F9 = make_ext_field(3, 2)
    with pytest.raises(ValueError):
        injective_character(F9, 12)


def test_find_counterexamples_f9():
    reports = find_counterexamples(3, 2)
    assert len(reports) == 6
    assert all(r.is_cohn for r in reports)
    assert any(not r.is_multiplicative for r in reports)
    assert any(r.linear_map.is_identity() and r.is_multiplicative for r in reports)
    assert reports[0].stabilizer_count == 6
    assert reports[0].injective_character_count == 4


def test_find_counterexamples_rejects_prime_degree():
    with pytest.raises(ValueError):
        find_counterexamples(7, 1)


def test_autocorrelation_transport():
    # the exact mechanism behind flatness of composites:
    # autocorrelation(f o lam, h) = autocorrelation(f, lam(h))
    F9 = make_ext_field(3, 2)
    maps = one_stabilizer_maps(F9)
    rng = random.Random(59)
    for _ in range(200):
        exps = tuple(
            None if x == F9.zero else rng.randrange(8) for x in F9.elements
        )
        table = FunctionTable(F9, 8, exps)
        lam = rng.choice(maps)
        h = rng.choice(F9.elements)
        assert autocorrelation(compose_with_linear(table, lam), h) == autocorrelation(
            table, lam(h)
        )


def test_report_serialization():
    reports = find_counterexamples(3, 2)
    data = json.loads(json.dumps([r.to_json() for r in reports]))
    assert data[0]["counts"] == {"stabilizer_maps": 6, "injective_characters": 4}
    assert data[0]["field"]["p"] == 3 and data[0]["field"]["k"] == 2
    witnesses = [d for d in data if d["verdicts"]["is_cohn"] and not d["verdicts"]["is_multiplicative"]]
    assert witnesses, "at least one verified counterexample must be reported"
