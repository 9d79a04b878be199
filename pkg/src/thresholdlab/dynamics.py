"""Synchronous irreversible k-threshold process.

A vertex becomes colored once at least ``k`` of its neighbours were colored
in the previous step, and never loses its color. Single runs use int
bitmasks; :func:`converts_batch` evaluates many seed sets at once with numpy
and is what the exhaustive search and the samplers call.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph_core import Graph


def to_mask(vertices: Iterable[int], num_vertices: int | None = None) -> int:
    mask = 0
    for v in vertices:
        v = int(v)
        if v < 0 or (num_vertices is not None and v >= num_vertices):
            raise ValueError(f"vertex id {v} out of range")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _check_threshold(k: int) -> None:
    if k < 1:
        raise ValueError(f"threshold k must be >= 1, got {k}")


def step_mask(graph: Graph, colored: int, k: int) -> int:
    new = colored
    for v, nbrs in enumerate(graph.neighbor_masks):
        if not colored >> v & 1 and (nbrs & colored).bit_count() >= k:
            new |= 1 << v
    return new


def step(graph: Graph, colored: Iterable[int], k: int) -> frozenset[int]:
    """One synchronous update: ``colored`` plus every vertex with >= k colored neighbours."""
    _check_threshold(k)
    return from_mask(step_mask(graph, to_mask(colored, graph.num_vertices), k))


@dataclass(frozen=True)
class ProcessTrace:
    """Snapshots ``S_0 .. S_T``; consecutive snapshots are always distinct."""

    k: int
    seed: frozenset[int]
    steps: tuple[frozenset[int], ...]
    converted: bool

    @property
    def T(self) -> int:
        return len(self.steps) - 1

    @property
    def final(self) -> frozenset[int]:
        return self.steps[-1]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "seed": sorted(self.seed),
            "converted": self.converted,
            "steps": [sorted(s) for s in self.steps],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> ProcessTrace:
        return cls(
            k=int(data["k"]),
            seed=frozenset(data["seed"]),
            steps=tuple(frozenset(s) for s in data["steps"]),
            converted=bool(data["converted"]),
        )

    @classmethod
    def from_json(cls, text: str) -> ProcessTrace:
        return cls.from_dict(json.loads(text))


def run(graph: Graph, seed: Iterable[int], k: int, max_steps: int | None = None) -> ProcessTrace:
    """Iterate :func:`step` from ``seed`` until nothing changes or ``max_steps`` is hit.

    Each non-final step colors at least one new vertex, so ``|V|`` steps
    always suffice; that is the default bound.
    """
    _check_threshold(k)
    if max_steps is None:
        max_steps = graph.num_vertices
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    full = (1 << graph.num_vertices) - 1
    current = to_mask(seed, graph.num_vertices)
    masks = [current]
    while current != full and len(masks) <= max_steps:
        nxt = step_mask(graph, current, k)
        if nxt == current:
            break
        masks.append(nxt)
        current = nxt
    steps = tuple(from_mask(m) for m in masks)
    return ProcessTrace(k, steps[0], steps, current == full)


def closure_mask(graph: Graph, seed: int, k: int) -> int:
    """Fixpoint of the process as a bitmask."""
    while True:
        nxt = step_mask(graph, seed, k)
        if nxt == seed:
            return seed
        seed = nxt


def is_conversion_set(graph: Graph, seed: Iterable[int], k: int) -> bool:
    _check_threshold(k)
    full = (1 << graph.num_vertices) - 1
    return closure_mask(graph, to_mask(seed, graph.num_vertices), k) == full


def required_low_degree_vertices(graph: Graph, k: int) -> frozenset[int]:
    """Vertices of degree < k; every conversion set has to contain all of them."""
    _check_threshold(k)
    return frozenset(v for v in graph.vertices if graph.degree(v) < k)


def converts_batch(graph: Graph, seeds: np.ndarray, k: int) -> np.ndarray:
    """Conversion flag for each row of a ``(B, |V|)`` boolean seed matrix."""
    _check_threshold(k)
    state = np.asarray(seeds, dtype=bool).copy()
    if state.ndim != 2 or state.shape[1] != graph.num_vertices:
        raise ValueError(f"expected shape (B, {graph.num_vertices}), got {state.shape}")
    adj = graph.adjacency_matrix
    active = np.arange(state.shape[0])
    # float32 matmul is exact here: counts never exceed |V|
    while active.size:
        sub = state[active]
        grown = sub | (sub.astype(np.float32) @ adj >= k)
        changed = (grown != sub).any(axis=1)
        state[active] = grown
        active = active[changed]
    return state.all(axis=1)


def seeds_to_matrix(seeds: np.ndarray, num_vertices: int) -> np.ndarray:
    """Turn a ``(B, m)`` array of vertex ids into a ``(B, num_vertices)`` indicator matrix."""
    seeds = np.asarray(seeds, dtype=np.intp)
    out = np.zeros((seeds.shape[0], num_vertices), dtype=bool)
    if seeds.size:
        np.put_along_axis(out, seeds, True, axis=1)
    return out
