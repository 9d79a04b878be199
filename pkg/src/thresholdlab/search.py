"""Exhaustive search for minimum conversion sets on small graphs.

Candidate seeds always contain every vertex of degree below ``k`` (those can
never be colored by their neighbours), and are enumerated in lexicographic
order of vertex ids so witnesses are reproducible. Each size level is split
into contiguous rank ranges; ranges can run on a thread pool and their tallies
are merged in rank order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb

import numpy as np

from .closed_form import ConversionNumber, conversion_number
from .dynamics import converts_batch, required_low_degree_vertices, seeds_to_matrix
from .graph_core import Graph

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "THRESHOLDLAB_BUDGET"
CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    """The enumeration would need more simulations than the budget allows."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} simulations, budget is {budget}")
        self.needed = needed
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class SearchReport:
    k: int
    minimum: ConversionNumber | None
    witness: frozenset[int] | None
    sets_examined: int
    # size -> (examined, converting), only for fully enumerated sizes
    tallies: dict[int, tuple[int, int]] = field(default_factory=dict)
    required: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "minimum": None if self.minimum is None else str(self.minimum),
            "witness": None if self.witness is None else sorted(self.witness),
            "sets_examined": self.sets_examined,
            "tallies": {str(m): list(t) for m, t in sorted(self.tallies.items())},
            "required": sorted(self.required),
        }


@dataclass
class _Tally:
    examined: int = 0
    converting: int = 0
    first: tuple[int, ...] | None = None

    def merge(self, other: _Tally) -> _Tally:
        # `self` covers the lower ranks, so its witness wins
        return _Tally(
            self.examined + other.examined,
            self.converting + other.converting,
            self.first if self.first is not None else other.first,
        )


def _scan_range(graph: Graph, k: int, base: np.ndarray, pool: list[int], r: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    combos = islice(combinations(pool, r), start, stop)
    while True:
        chunk = list(islice(combos, CHUNK))
        if not chunk:
            return tally
        rows = seeds_to_matrix(np.array(chunk, dtype=np.intp).reshape(len(chunk), r), graph.num_vertices)
        rows |= base
        ok = converts_batch(graph, rows, k)
        hits = np.flatnonzero(ok)
        tally.examined += len(chunk)
        tally.converting += int(hits.size)
        if tally.first is None and hits.size:
            tally.first = chunk[int(hits[0])]


def _scan_level(graph: Graph, k: int, required: frozenset[int], pool: list[int], r: int, workers: int) -> _Tally:
    total = comb(len(pool), r)
    base = np.zeros(graph.num_vertices, dtype=bool)
    base[list(required)] = True
    if workers <= 1 or total <= CHUNK:
        return _scan_range(graph, k, base, pool, r, 0, total)
    step = -(-total // workers)
    bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(lambda b: _scan_range(graph, k, base, pool, r, *b), bounds))
    merged = _Tally()
    for part in parts:
        merged = merged.merge(part)
    return merged


def _prepare(graph: Graph, k: int, prune: bool) -> tuple[frozenset[int], list[int]]:
    required = required_low_degree_vertices(graph, k) if prune else frozenset()
    pool = [v for v in graph.vertices if v not in required]
    return required, pool


def brute_force_min(
    graph: Graph,
    k: int,
    size_limit: int | None = None,
    *,
    budget: int | None = None,
    workers: int = 1,
    prune: bool = True,
) -> SearchReport:
    """Smallest conversion set by exhaustive enumeration, size by size.

    The size level where the first conversion set appears is enumerated in
    full, so its tally counts every minimum conversion set. If no set up to
    ``size_limit`` converts, ``minimum`` is ``None``. Raises
    :class:`BudgetExceeded` before starting a level that would push the total
    number of simulations past ``budget``.
    """
    budget = default_budget() if budget is None else budget
    n = graph.num_vertices
    size_limit = n if size_limit is None else size_limit
    if not 0 <= size_limit <= n:
        raise ValueError(f"size_limit must lie in [0, {n}]")
    required, pool = _prepare(graph, k, prune)
    report = SearchReport(k, None, None, 0, {}, required)
    for m in range(len(required), size_limit + 1):
        r = m - len(required)
        level = comb(len(pool), r)
        if report.sets_examined + level > budget:
            raise BudgetExceeded(report.sets_examined + level, budget)
        tally = _scan_level(graph, k, required, pool, r, workers)
        report.sets_examined += tally.examined
        report.tallies[m] = (tally.examined, tally.converting)
        if tally.first is not None:
            report.witness = frozenset(required) | frozenset(tally.first)
            report.minimum = conversion_number(m, n)
            break
    return report


def count_converting_sets(
    graph: Graph,
    k: int,
    size: int,
    *,
    budget: int | None = None,
    workers: int = 1,
    prune: bool = True,
) -> int:
    """Number of ``size``-subsets of ``V`` that convert the whole graph."""
    budget = default_budget() if budget is None else budget
    if not 0 <= size <= graph.num_vertices:
        raise ValueError(f"size must lie in [0, {graph.num_vertices}]")
    required, pool = _prepare(graph, k, prune)
    if size < len(required):
        return 0
    r = size - len(required)
    needed = comb(len(pool), r)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    return _scan_level(graph, k, required, pool, r, workers).converting
