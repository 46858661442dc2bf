"""Exhaustive enumeration of flat-autocorrelation functions on F_p.

Candidates are the m^(p-2) exponent tuples (f(2), ..., f(p-1)) in
lexicographic order, with f(0) = 0 and f(1) = 1 pinned.  Two strategies:

* ``exhaustive`` runs the exact integer test on every candidate.
* ``screened`` first filters candidates with a vectorized floating-point
  test |autocorrelation + 1| < tolerance per shift (dropping a candidate at
  its first failing shift), then confirms every survivor exactly.  Final
  verdicts are always exact.

Sharding: shard (i, T) processes the candidates whose lexicographic index
is congruent to i mod T, so any full partition merges back to the
unsharded result.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from .characters import Character, FunctionTable, character_table, is_cohn
from .ntheory import euler_phi
from .cyclotomic import power_table
from .finite_field import make_prime_field

Shard = Optional[tuple[int, int]]


@dataclass(frozen=True)
class SearchConfig:
    p: int
    m: int
    strategy: str = "exhaustive"
    shard: Shard = None
    screen_tolerance: float = 1e-6
    candidate_ceiling: int = 10**8

    def __post_init__(self):
        if self.strategy not in ("exhaustive", "screened"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.shard is not None:
            i, total = self.shard
            if not (0 <= i < total):
                raise ValueError("shard index must lie in [0, total)")
        if self.screen_tolerance <= 0:
            raise ValueError("screen tolerance must be positive")

    def key(self) -> tuple:
        """Identity of the search space, ignoring the shard."""
        return (self.p, self.m, self.strategy, self.screen_tolerance)


@dataclass
class SearchReport:
    """Search outcome.  `screen_survivors` counts the candidates that reached the
    exact confirmation stage (for the exhaustive strategy that is every
    examined candidate)."""

    config: SearchConfig
    solutions: tuple[FunctionTable, ...]
    candidates_examined: int
    screen_survivors: int
    wall_time: float = dc_field(default=0.0)

    def to_json(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "p": cfg.p,
                "m": cfg.m,
                "strategy": cfg.strategy,
                "shard": list(cfg.shard) if cfg.shard else None,
                "screen_tolerance": cfg.screen_tolerance,
            },
            "solutions": [t.to_json() for t in self.solutions],
            "candidates_examined": self.candidates_examined,
            "screen_survivors": self.screen_survivors,
            "wall_time_seconds": self.wall_time,
        }

    def summary_csv_line(self) -> str:
        cfg = self.config
        return (
            f"{cfg.p},{cfg.m},{self.candidates_examined},"
            f"{len(self.solutions)},{self.wall_time:.3f}"
        )


CSV_HEADER = "p,m,candidates,solutions,wall_time_seconds"


def candidate_count(p: int, m: int) -> int:
    return m ** (p - 2)


def _tuple_to_table(field, m: int, tup: Sequence[int]) -> FunctionTable:
    return FunctionTable(field, m, (None, 0) + tuple(tup))


def _exact_flat_tuple(p: int, m: int, exps: Sequence, rows, offset) -> bool:
    """Exact test of the -1 autocorrelation identity for a full exponent list
    (exps[0] is None, exps[1] = 0).  Pure integer arithmetic."""
    for h in range(1, p):
        counts = [0] * m
        for x in range(1, p):
            y = x + h
            if y >= p:
                y -= p
            if y == 0:
                continue
            counts[(exps[x] - exps[y]) % m] += 1
        acc = list(offset)
        for d in range(m):
            c = counts[d]
            if c:
                row = rows[d]
                for i in range(len(acc)):
                    acc[i] += c * row[i]
        if any(acc):
            return False
    return True


def _shard_params(shard: Shard) -> tuple[int, int]:
    return shard if shard is not None else (0, 1)


def screen_survivor_tuples(
    p: int, m: int, tolerance: float = 1e-6, shard: Shard = None, batch: int = 1 << 16
) -> tuple[list[tuple[int, ...]], int]:
    """Floating-point screen over the candidate space.

    Returns (survivor exponent tuples in lexicographic order, number of
    candidates examined).  Never used for final verdicts.
    """
    total = candidate_count(p, m)
    shard_i, shard_t = _shard_params(shard)
    divisors = m ** np.arange(p - 3, -1, -1, dtype=np.int64)
    unit = np.exp(2j * np.pi * np.arange(m) / m)
    perms = [np.array([(x + h) % p for x in range(p)]) for h in range(p)]
    survivors: list[tuple[int, ...]] = []
    examined = 0
    for start in range(0, total, batch):
        idx = np.arange(start, min(start + batch, total), dtype=np.int64)
        if shard_t > 1:
            idx = idx[idx % shard_t == shard_i]
        if idx.size == 0:
            continue
        examined += int(idx.size)
        digits = (idx[:, None] // divisors) % m
        values = np.empty((idx.size, p), dtype=np.complex128)
        values[:, 0] = 0.0
        values[:, 1] = 1.0
        values[:, 2:] = unit[digits]
        for h in range(1, p):
            acf = (values * np.conj(values[:, perms[h]])).sum(axis=1)
            keep = np.abs(acf + 1.0) < tolerance
            idx = idx[keep]
            values = values[keep]
            if idx.size == 0:
                break
        for c in idx.tolist():
            survivors.append(tuple(int(c // m**e) % m for e in range(p - 3, -1, -1)))
    return survivors, examined


def enumerate_cohn(config: SearchConfig) -> SearchReport:
    """All tables with f(0)=0, f(1)=1, values in mu_m and every off-peak
    autocorrelation exactly -1, for the configured (p, m)."""
    start_time = time.perf_counter()
    field = make_prime_field(config.p)
    p, m = config.p, config.m
    total = candidate_count(p, m)
    shard_i, shard_t = _shard_params(config.shard)
    workload = total if config.shard is None else -(-total // shard_t)
    if workload > config.candidate_ceiling:
        raise ValueError(
            f"{workload} candidates exceed the ceiling of {config.candidate_ceiling}; "
            "shard the search or raise candidate_ceiling"
        )
    rows = power_table(m)
    offset = [0] * euler_phi(m)
    offset[0] = 1  # start from +1 so a flat candidate accumulates to the zero vector
    solution_tuples: list[tuple[int, ...]] = []

    if config.strategy == "screened":
        candidates, examined = screen_survivor_tuples(
            p, m, config.screen_tolerance, config.shard
        )
        survivors = len(candidates)
        for tup in candidates:
            if _exact_flat_tuple(p, m, (None, 0) + tup, rows, offset):
                solution_tuples.append(tup)
    else:
        examined = 0
        for index, tup in enumerate(itertools.product(range(m), repeat=p - 2)):
            if shard_t > 1 and index % shard_t != shard_i:
                continue
            examined += 1
            if _exact_flat_tuple(p, m, (None, 0) + tup, rows, offset):
                solution_tuples.append(tup)
        survivors = examined

    solutions = tuple(_tuple_to_table(field, m, tup) for tup in sorted(solution_tuples))
    for table in solutions:
        assert is_cohn(table), "solution failed the table-level exact check"
    return SearchReport(
        config=config,
        solutions=solutions,
        candidates_examined=examined,
        screen_survivors=survivors,
        wall_time=time.perf_counter() - start_time,
    )


def expected_solution_set(p: int, m: int) -> list[FunctionTable]:
    """Character tables of every nontrivial character whose order divides
    gcd(m, p-1); there are gcd(m, p-1) - 1 of them."""
    field = make_prime_field(p)
    out = []
    for a in range(1, p - 1):
        chi = Character(field, a)
        if m % chi.order == 0:
            out.append(character_table(chi, m))
    out.sort(key=FunctionTable.sort_key)
    return out


def merge_shards(reports: Sequence[SearchReport]) -> SearchReport:
    """Union of a full disjoint shard partition of one search configuration."""
    if not reports:
        raise ValueError("no reports to merge")
    base = reports[0].config
    seen = set()
    totals = set()
    for r in reports:
        cfg = r.config
        if cfg.key() != base.key():
            raise ValueError("reports come from different search configurations")
        if cfg.shard is None:
            if len(reports) != 1:
                raise ValueError("unsharded report mixed into a shard set")
            return r
        i, t = cfg.shard
        if i in seen:
            raise ValueError(f"duplicate shard index {i}")
        seen.add(i)
        totals.add(t)
    if len(totals) != 1:
        raise ValueError("reports disagree on the shard count")
    total = totals.pop()
    if seen != set(range(total)):
        raise ValueError(f"incomplete shard set: have {sorted(seen)}, need 0..{total - 1}")
    merged_solutions = sorted(
        (s for r in reports for s in r.solutions), key=FunctionTable.sort_key
    )
    keys = [s.sort_key() for s in merged_solutions]
    if len(set(keys)) != len(keys):
        raise ValueError("overlapping shards produced duplicate solutions")
    merged_config = SearchConfig(
        p=base.p,
        m=base.m,
        strategy=base.strategy,
        shard=None,
        screen_tolerance=base.screen_tolerance,
        candidate_ceiling=base.candidate_ceiling,
    )
    return SearchReport(
        config=merged_config,
        solutions=tuple(merged_solutions),
        candidates_examined=sum(r.candidates_examined for r in reports),
        screen_survivors=sum(r.screen_survivors for r in reports),
        wall_time=sum(r.wall_time for r in reports),
    )
