"""Exhaustive generator-set search: the brute-force oracle for extremal orders."""

from __future__ import annotations

import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import _kernels
from .bounds import mac_bound
from .core import GraphSpec, connection_set, make_graph_spec
from .errors import DisconnectedGraph, InvalidSpec, RangeTooLarge

__all__ = [
    "SearchReport",
    "DEFAULT_BUDGET",
    "graph_diameter",
    "canonical_form",
    "extremal_search",
    "find_witness",
    "candidate_count",
]

DEFAULT_BUDGET = 10**8
_WITNESS_CAP = 4096


@dataclass(frozen=True)
class SearchReport:
    degree: int
    diameter: int
    best_order: int
    witnesses: tuple[GraphSpec, ...]
    multiplier_classes: int
    explored: int
    searched_from: int = field(default=0)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "diameter": self.diameter,
            "best_order": self.best_order,
            "multiplier_classes": self.multiplier_classes,
            "explored": self.explored,
            "searched_from": self.searched_from,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def graph_diameter(spec: GraphSpec) -> int:
    """Diameter via the eccentricity of vertex 0 (vertex transitivity)."""
    n = spec.order
    conn = np.asarray(connection_set(spec), dtype=np.int64)
    e = _kernels.eccentricity(n, conn, np.empty(n, np.int64), np.empty(n, np.int64))
    if e < 0:
        raise DisconnectedGraph(f"{spec} is disconnected")
    return int(e)


def _units(n: int) -> np.ndarray:
    u = np.arange(1, n, dtype=np.int64)
    return u[np.gcd(u, n) == 1]


def canonical_form(spec: GraphSpec) -> GraphSpec:
    """Lexicographically least generator set over all unit multipliers of Z_n."""
    n = spec.order
    if not spec.generators:
        return spec
    gens = np.asarray(spec.generators, dtype=np.int64)
    images = (_units(n)[:, None] * gens[None, :]) % n
    images = np.minimum(images, n - images)
    images.sort(axis=1)
    order = np.lexsort(images.T[::-1])
    best = images[order[0]]
    return GraphSpec(n, tuple(int(g) for g in best), spec.include_half)


def _divisor_heads(n: int, f: int) -> list[int]:
    # the least element of a canonical set is a divisor of n below n/2
    return [g for g in range(1, (n - 1) // 2 + 1) if n % g == 0] if f else []


def candidate_count(d: int, n_values: Iterable[int]) -> int:
    """Upper bound on the number of generator sets a search would test."""
    f = d // 2
    total = 0
    for n in n_values:
        if d % 2 and n % 2:
            continue
        h = (n - 1) // 2
        total += sum(math.comb(h - g1, f - 1) for g1 in _divisor_heads(n, f))
    return total


def _shards(n: int, f: int, workers: int) -> list[tuple[int, int, int]]:
    """Split the space for order n into (g1, lo, hi) blocks on the second generator."""
    hmax = (n - 1) // 2
    out = []
    for g1 in _divisor_heads(n, f):
        if f == 1:
            out.append((g1, 0, 1))
            continue
        lo, hi = g1 + 1, hmax + 1
        pieces = max(1, min(hi - lo, 4 * workers)) if workers > 1 else 1
        # later second generators have fewer completions; even split is fine at this scale
        bounds = np.linspace(lo, hi, pieces + 1).round().astype(int)
        for a, b in zip(bounds[:-1], bounds[1:]):
            if b > a:
                out.append((g1, int(a), int(b)))
    return out


def _run_shard(args) -> tuple[int, int, list[tuple[int, ...]]]:
    n, k, f, half, g1, lo, hi, exact, first_only = args
    out = np.zeros((_WITNESS_CAP, max(f, 1)), dtype=np.int64)
    explored, found = _kernels.scan_block(n, k, f, half, g1, lo, hi, exact, first_only, out)
    rows = [tuple(int(x) for x in out[i, :f]) for i in range(min(found, _WITNESS_CAP))]
    return int(explored), int(found), rows


def _scan_order(n, k, d, exact, first_only, workers, pool):
    f = d // 2
    half = bool(d % 2)
    jobs = [(n, k, f, half, g1, lo, hi, exact, first_only) for g1, lo, hi in _shards(n, f, workers)]
    if pool is None:
        results = []
        for job in jobs:
            results.append(_run_shard(job))
            if first_only and results[-1][1]:
                break
    else:
        results = list(pool.map(_run_shard, jobs))
    explored = sum(r[0] for r in results)
    rows: list[tuple[int, ...]] = []
    for r in results:
        rows.extend(r[2])
        if first_only and r[1]:
            break
    return explored, rows


def _order_range(d: int, k: int, n_max: int | None) -> list[int]:
    top = mac_bound(d, k) if n_max is None else n_max
    orders = [n for n in range(top, d, -1) if not (d % 2 and n % 2)]
    return orders


def extremal_search(
    d: int,
    k: int,
    n_max: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    progress: Callable[[str], None] | None = None,
) -> SearchReport:
    """Largest order ``n <= n_max`` admitting a degree-d circulant of diameter <= k.

    ``n_max`` defaults to the Abelian Cayley bound, which makes the answer
    the true extremal order.
    """
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    orders = _order_range(d, k, n_max)
    need = candidate_count(d, orders)
    if need > budget:
        raise RangeTooLarge(f"up to {need} candidate sets for d={d}, k={k}; budget is {budget}")
    explored = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for n in orders:
            seen, rows = _scan_order(n, k, d, False, False, workers, pool)
            explored += seen
            if progress:
                progress(f"d={d} k={k} n={n}: explored {explored}, hits {len(rows)}")
            if rows:
                canon = sorted(
                    {canonical_form(make_graph_spec(n, r, bool(d % 2))) for r in rows},
                    key=lambda s: s.generators,
                )
                return SearchReport(d, k, n, tuple(canon), len(canon), explored, orders[0])
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchReport(d, k, 0, (), 0, explored, orders[0] if orders else 0)


def find_witness(
    d: int, k: int, n: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> GraphSpec | None:
    """First canonical generator set of order n with diameter exactly k."""
    if d % 2 and n % 2:
        return None
    if candidate_count(d, [n]) > budget:
        raise RangeTooLarge(f"order {n} exceeds the search budget {budget}")
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        _, rows = _scan_order(n, k, d, True, True, workers, pool)
    finally:
        if pool is not None:
            pool.shutdown()
    if not rows:
        return None
    try:
        return make_graph_spec(n, rows[0], bool(d % 2))
    except InvalidSpec:
        return None


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)
