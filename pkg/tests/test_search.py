import itertools
import json

import pytest

from cohn.characters import Character, character_table, is_cohn
from cohn.finite_field import make_prime_field
from cohn.search import (
    SearchConfig,
    candidate_count,
    enumerate_cohn,
    expected_solution_set,
    merge_shards,
    screen_survivor_tuples,
)
from oracles import is_flat_table


def brute_solution_tuples(p, m):
    """Independent enumeration: float screen at 1e-9 over the whole space."""
    out = []
    for tup in itertools.product(range(m), repeat=p - 2):
        if is_flat_table((None, 0) + tup, m):
            out.append(tup)
    return out


# ---------------------------------------------------------------------------
# enumeration against the independent oracle
# ---------------------------------------------------------------------------

def test_search_5_4_matches_brute_force():
    report = enumerate_cohn(SearchConfig(p=5, m=4))
    found = [t.exponents[2:] for t in report.solutions]
    assert found == brute_solution_tuples(5, 4)
    assert len(found) == 3
    assert report.candidates_examined == 64


def test_search_5_4_solutions_are_characters():
    report = enumerate_cohn(SearchConfig(p=5, m=4))
    expected = expected_solution_set(5, 4)
    assert [t.exponents for t in report.solutions] == [t.exponents for t in expected]
    field = make_prime_field(5)
    tables = {character_table(Character(field, a), 4).exponents for a in (1, 2, 3)}
    assert {t.exponents for t in report.solutions} == tables


def test_search_7_6_count():
    report = enumerate_cohn(SearchConfig(p=7, m=6))
    assert len(report.solutions) == 5
    assert report.candidates_examined == 6**5


def test_search_3_6_single_solution():
    # oracle: scan all six candidates by hand
    assert brute_solution_tuples(3, 6) == [(3,)]
    report = enumerate_cohn(SearchConfig(p=3, m=6))
    assert [t.exponents for t in report.solutions] == [(None, 0, 3)]


def test_solutions_pass_exact_verification():
    for p, m in [(5, 4), (7, 2), (3, 6)]:
        for table in enumerate_cohn(SearchConfig(p=p, m=m)).solutions:
            assert is_cohn(table)


# ---------------------------------------------------------------------------
# expected solution sets
# ---------------------------------------------------------------------------

def test_expected_solution_counts():
    import math

    for p, m in [(7, 2), (5, 8), (5, 3), (5, 4), (13, 4), (3, 6)]:
        assert len(expected_solution_set(p, m)) == math.gcd(m, p - 1) - 1


def test_expected_solutions_mod2_is_residue_symbol():
    tables = expected_solution_set(7, 2)
    assert len(tables) == 1
    chi = character_table(Character(make_prime_field(7), 3), 2)
    assert tables[0].exponents == chi.exponents


def test_expected_solutions_absorb_extra_value_room():
    four = expected_solution_set(5, 4)
    eight = expected_solution_set(5, 8)
    assert len(four) == len(eight) == 3
    for t4, t8 in zip(four, eight):
        assert all(
            (e4 is None) == (e8 is None) and (e4 is None or 2 * e4 == e8)
            for e4, e8 in zip(t4.exponents, t8.exponents)
        )


# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

def test_strategy_equivalence_small_grid():
    for p, m in [(3, 2), (3, 5), (3, 8), (5, 2), (5, 4), (5, 6), (7, 3)]:
        exhaustive = enumerate_cohn(SearchConfig(p=p, m=m, strategy="exhaustive"))
        screened = enumerate_cohn(SearchConfig(p=p, m=m, strategy="screened"))
        assert [t.exponents for t in exhaustive.solutions] == [
            t.exponents for t in screened.solutions
        ]


def test_screen_is_sound_on_a_small_space():
    survivors, examined = screen_survivor_tuples(7, 6)
    assert examined == 6**5
    exact = {t.exponents[2:] for t in enumerate_cohn(SearchConfig(p=7, m=6)).solutions}
    assert exact <= set(survivors)


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        SearchConfig(p=5, m=4, strategy="quantum")


# ---------------------------------------------------------------------------
# sharding
# ---------------------------------------------------------------------------

def test_single_shard_is_identity():
    whole = enumerate_cohn(SearchConfig(p=5, m=4))
    merged = merge_shards([enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 1)))])
    assert [t.exponents for t in merged.solutions] == [t.exponents for t in whole.solutions]
    assert merged.candidates_examined == whole.candidates_examined


def test_four_way_shard_merge():
    whole = enumerate_cohn(SearchConfig(p=7, m=6))
    parts = [enumerate_cohn(SearchConfig(p=7, m=6, shard=(i, 4))) for i in range(4)]
    merged = merge_shards(parts)
    assert [t.exponents for t in merged.solutions] == [t.exponents for t in whole.solutions]
    assert merged.candidates_examined == whole.candidates_examined == 6**5
    assert merged.config.shard is None


def test_overlapping_shards_rejected():
    parts = [
        enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 2))),
        enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 2))),
    ]
    with pytest.raises(ValueError):
        merge_shards(parts)


def test_incomplete_shards_rejected():
    with pytest.raises(ValueError):
        merge_shards([enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 2)))])


def test_mixed_configs_rejected():
    parts = [
        enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 2))),
        enumerate_cohn(SearchConfig(p=5, m=8, shard=(1, 2))),
    ]
    with pytest.raises(ValueError):
        merge_shards(parts)


def test_invalid_shard_index():
    with pytest.raises(ValueError):
        SearchConfig(p=5, m=4, shard=(2, 2))


# ---------------------------------------------------------------------------
# resource guard, determinism, serialization
# ---------------------------------------------------------------------------

def test_resource_guard():
    assert candidate_count(11, 10) == 10**9
    with pytest.raises(ValueError):
        enumerate_cohn(SearchConfig(p=11, m=10))
    with pytest.raises(ValueError):
        enumerate_cohn(SearchConfig(p=5, m=4, candidate_ceiling=10))
    # sharding brings the per-process workload under the ceiling
    report = enumerate_cohn(SearchConfig(p=5, m=4, shard=(0, 32), candidate_ceiling=10))
    assert report.candidates_examined == 2


def test_reports_are_deterministic():
    a = enumerate_cohn(SearchConfig(p=7, m=6, strategy="screened")).to_json()
    b = enumerate_cohn(SearchConfig(p=7, m=6, strategy="screened")).to_json()
    a["wall_time_seconds"] = b["wall_time_seconds"] = 0.0
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_report_json_shape():
    report = enumerate_cohn(SearchConfig(p=5, m=4, strategy="screened"))
    data = report.to_json()
    assert data["config"] == {
        "p": 5,
        "m": 4,
        "strategy": "screened",
        "shard": None,
        "screen_tolerance": 1e-6,
    }
    assert data["candidates_examined"] == 64
    assert data["screen_survivors"] == len(data["solutions"]) == 3
    assert report.summary_csv_line().startswith("5,4,64,3,")
