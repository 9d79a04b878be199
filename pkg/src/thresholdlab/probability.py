"""Success probability of uniformly random seeding.

Exact values are :class:`fractions.Fraction` throughout; floats only appear
in the Monte-Carlo estimator and in :func:`render_decimal` output.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .closed_form import ceil_half
from .dynamics import converts_batch, seeds_to_matrix
from .graph_core import Graph
from .search import count_converting_sets

Z_95 = 1.96
MC_CHUNK = 1 << 14


def _check_corona(n: int, p: int, k: int) -> None:
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    if p < 1:
        raise ValueError("the closed-form probability needs p >= 1; use enumeration_probability for p = 0")
    if k < 1:
        raise ValueError(f"threshold must be >= 1, got {k}")


def success_probability_corona(n: int, p: int, k: int) -> Fraction:
    """Chance that a uniform seed of size ``C_k(C_n . K_p)`` converts ``C_n . K_p``."""
    _check_corona(n, p, k)
    total = n * (p + 1)
    if k <= p + 1:
        good = n * comb(p, k - 1) ** (n - 1) * comb(p + 1, k)
        return Fraction(good, comb(total, (k - 1) * n + 1))
    if k == p + 2:
        # every block vertex is forced; the cycle part must be an alternating cover
        good = 2 + (n - 2) * (n % 2)
        return Fraction(good, comb(total, p * n + ceil_half(n)))
    return Fraction(1)


def resilience_factor(n: int, p: int, k: int) -> Fraction:
    """Probability that the random minimum-size seed fails."""
    return 1 - success_probability_corona(n, p, k)


def enumeration_probability(graph: Graph, k: int, size: int, *, budget: int | None = None, workers: int = 1) -> Fraction:
    hits = count_converting_sets(graph, k, size, budget=budget, workers=workers)
    return Fraction(hits, comb(graph.num_vertices, size))


def render_decimal(value: Fraction, digits: int = 10) -> str:
    """Round half up to ``digits`` places using integer arithmetic only."""
    value = Fraction(value)
    scaled = (2 * value.numerator * 10**digits + value.denominator) // (2 * value.denominator)
    whole, frac = divmod(scaled, 10**digits)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)


def probability_to_dict(value: Fraction, digits: int = 10) -> dict:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator), "decimal": render_decimal(value, digits)}


def probability_from_dict(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


@dataclass(frozen=True)
class EstimateReport:
    trials: int
    successes: int
    estimate: float
    half_width: float
    rng_seed: int

    @property
    def interval(self) -> tuple[float, float]:
        return self.estimate - self.half_width, self.estimate + self.half_width

    def covers(self, value: float) -> bool:
        lo, hi = self.interval
        return lo <= value <= hi

    def to_dict(self) -> dict:
        return asdict(self)


def sample_subsets(rng: np.random.Generator, num_vertices: int, size: int, count: int) -> np.ndarray:
    """``count`` uniform ``size``-subsets of ``range(num_vertices)`` via a partial Fisher-Yates shuffle."""
    perm = np.tile(np.arange(num_vertices, dtype=np.intp), (count, 1))
    rows = np.arange(count)
    for i in range(size):
        j = rng.integers(i, num_vertices, size=count)
        head = perm[rows, i].copy()
        perm[rows, i] = perm[rows, j]
        perm[rows, j] = head
    return perm[:, :size]


def _mc_chunk(graph: Graph, k: int, size: int, count: int, seq: np.random.SeedSequence) -> int:
    rng = np.random.default_rng(seq)
    seeds = seeds_to_matrix(sample_subsets(rng, graph.num_vertices, size, count), graph.num_vertices)
    return int(converts_batch(graph, seeds, k).sum())


def monte_carlo_probability(
    graph: Graph,
    k: int,
    size: int,
    trials: int,
    rng_seed: int = 0,
    *,
    workers: int = 1,
) -> EstimateReport:
    """Estimate the success probability of a uniform ``size``-seed.

    Trials are cut into fixed chunks, each drawing from its own child of
    ``SeedSequence(rng_seed)``, so the result does not depend on ``workers``.
    """
    if not 0 <= size <= graph.num_vertices:
        raise ValueError(f"size must lie in [0, {graph.num_vertices}]")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    counts = [MC_CHUNK] * (trials // MC_CHUNK)
    if trials % MC_CHUNK:
        counts.append(trials % MC_CHUNK)
    seqs = np.random.SeedSequence(rng_seed).spawn(len(counts))
    jobs = list(zip(counts, seqs))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(lambda job: _mc_chunk(graph, k, size, *job), jobs))
    else:
        parts = [_mc_chunk(graph, k, size, *job) for job in jobs]
    successes = sum(parts)
    est = successes / trials
    return EstimateReport(trials, successes, est, Z_95 * sqrt(est * (1 - est) / trials), rng_seed)
