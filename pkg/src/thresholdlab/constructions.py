"""Explicit minimum conversion sets and the double-corona block alphabet.

Block labels (one per block, read cyclically):

    B  no seed            O  outer vertex seeded     I  inner vertex seeded
    M  one block vertex   T  two block vertices      C  whole block seeded

Seeds inside a block always take the lowest ``j`` indices, and the
peeled-off vertices of a threshold reduction take the highest ones.
"""

from __future__ import annotations

from .closed_form import conv_corona, conv_double_corona
from .graph_core import block_vertex

LABELS = "BCOIMT"


class PatternError(ValueError):
    """A seed set or label string that the block alphabet cannot express."""


def _alternating_cycle(n: int) -> list[int]:
    """0-based positions of a minimum threshold-2 conversion set of ``C_n``.

    Even n takes every other vertex; odd n starts with the adjacent pair
    ``v_1, v_2`` and alternates from there.
    """
    if n % 2 == 0:
        return list(range(0, n, 2))
    return [0] + list(range(1, n, 2))


def canonical_corona_seed(n: int, p: int, k: int) -> frozenset[int]:
    value = conv_corona(n, p, k)
    if not value.is_finite:
        raise ValueError(f"C_{k}(C_{n} corona K_{p}) is inconvertible; no canonical seed")
    if k <= p + 1:
        seed = {block_vertex(n, p, i, j) for i in range(1, n + 1) for j in range(1, k)}
        seed.add(0)
    else:
        # k == p + 2
        seed = set(range(n, n * (p + 1))) | set(_alternating_cycle(n))
    return frozenset(seed)


def canonical_double_corona_pattern(n: int, p: int, k: int = 2) -> str:
    """Threshold-2 block pattern for ``C_n .. K_p`` (``p >= 1``)."""
    if k != 2:
        raise ValueError("block patterns are defined for threshold 2 only")
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    if p < 1:
        raise PatternError("the block alphabet needs p >= 1")
    if p == 1:
        return "IO" * (n // 2) + ("M" if n % 2 else "")
    return "MOMB" * (n // 4) + ("", "M", "MO", "MOM")[n % 4]


def _block_seed(label: str, n: int, p: int, i: int) -> list[int]:
    if label == "B":
        return []
    if label == "I":
        return [i - 1]
    if label == "O":
        return [n + i - 1]
    need = {"M": 1, "T": 2, "C": 0}[label]
    if need > p:
        raise PatternError(f"label {label} at block {i} needs {need} block vertices, p={p}")
    if label == "C":
        return [i - 1, n + i - 1] + [block_vertex(n, p, i, j, double=True) for j in range(1, p + 1)]
    return [block_vertex(n, p, i, j, double=True) for j in range(1, need + 1)]


def pattern_to_seed(pattern: str, n: int, p: int) -> frozenset[int]:
    pattern = pattern.strip().upper()
    if len(pattern) != n:
        raise PatternError(f"pattern {pattern!r} has length {len(pattern)}, expected {n}")
    bad = set(pattern) - set(LABELS)
    if bad:
        raise PatternError(f"unknown block labels {sorted(bad)}")
    seed: set[int] = set()
    for i, label in enumerate(pattern, start=1):
        seed.update(_block_seed(label, n, p, i))
    return frozenset(seed)


def seed_to_pattern(seed, n: int, p: int) -> str:
    """Classify every block of a double-corona seed set.

    Raises :class:`PatternError` for blocks the alphabet cannot express, e.g.
    two block vertices plus the inner vertex.
    """
    seed = set(seed)
    num_vertices = n * (p + 2)
    if any(not 0 <= v < num_vertices for v in seed):
        raise PatternError("seed contains ids outside the double corona")
    labels = []
    for i in range(1, n + 1):
        inner = i - 1 in seed
        outer = n + i - 1 in seed
        us = sum(block_vertex(n, p, i, j, double=True) in seed for j in range(1, p + 1))
        total = inner + outer + us
        if total == p + 2:
            labels.append("C")
        elif total == 0:
            labels.append("B")
        elif total == 1:
            labels.append("I" if inner else "O" if outer else "M")
        elif us == 2 and total == 2:
            labels.append("T")
        else:
            raise PatternError(
                f"block {i} holds inner={inner}, outer={outer}, block seeds={us}; no single label fits"
            )
    return "".join(labels)


def _top_block_vertices(n: int, p: int, count: int) -> set[int]:
    return {block_vertex(n, p, i, j, double=True) for i in range(1, n + 1) for j in range(p - count + 1, p + 1)}


def canonical_double_corona_seed(n: int, p: int, k: int) -> frozenset[int]:
    """Seed of size ``conv_double_corona(n, p, k)`` that converts the graph.

    ``min(k-2, p)`` top block vertices per block are peeled off and the
    threshold-2 pattern is placed on what remains.
    """
    value = conv_double_corona(n, p, k)
    if not value.is_finite:
        raise ValueError(f"C_{k}(C_{n} double corona K_{p}) is inconvertible; no canonical seed")
    if k == 1:
        return frozenset({0} if p >= 1 else {0, n})
    cycles = set(_alternating_cycle(n))
    both_cycles = cycles | {n + v for v in cycles}
    if p == 0:
        return frozenset(both_cycles)
    if k == p + 2:
        return frozenset(_top_block_vertices(n, p, p) | both_cycles)
    residual = p - (k - 2)
    pattern = canonical_double_corona_pattern(n, residual)
    # pattern ids are laid out for block size `residual`; translate by role
    seed = _top_block_vertices(n, p, k - 2)
    for v in pattern_to_seed(pattern, n, residual):
        if v < 2 * n:
            seed.add(v)
        else:
            i, j = divmod(v - 2 * n, residual)
            seed.add(block_vertex(n, p, i + 1, j + 1, double=True))
    return frozenset(seed)


def cycle_seed(n: int) -> frozenset[int]:
    return frozenset(_alternating_cycle(n))

