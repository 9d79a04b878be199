"""Cycles, complete graphs, corona and double-corona products.

Vertex numbering is fixed so that seed sets and traces are reproducible:

* corona ``C_n . K_p``: ``0..n-1`` are the inner cycle vertices in cycle
  order, then block ``i`` occupies ``n + (i-1)p .. n + ip - 1``.
* double corona: ``0..n-1`` inner, ``n..2n-1`` outer, then the blocks
  starting at ``2n`` in the same layout.

Role indices (``i``, ``j``) are 1-based, vertex ids are 0-based.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

CYCLE = "cycle"
COMPLETE = "complete"
CORONA = "corona"
DOUBLE_CORONA = "double-corona"
FAMILIES = (CYCLE, COMPLETE, CORONA, DOUBLE_CORONA)


class GraphSpecError(ValueError):
    """Raised for family parameters outside their domain."""


@dataclass(frozen=True, order=True)
class VertexRole:
    kind: str  # "Inner", "Outer" or "Block"
    i: int
    j: int | None = None

    def __str__(self) -> str:
        if self.kind == "Block":
            return f"Block({self.i},{self.j})"
        return f"{self.kind}({self.i})"

    @classmethod
    def parse(cls, text: str) -> VertexRole:
        m = re.fullmatch(r"\s*(Inner|Outer)\((\d+)\)\s*|\s*Block\((\d+),\s*(\d+)\)\s*", text)
        if m is None:
            raise ValueError(f"not a vertex role: {text!r}")
        if m.group(1):
            return cls(m.group(1), int(m.group(2)))
        return cls("Block", int(m.group(3)), int(m.group(4)))


def Inner(i: int) -> VertexRole:
    return VertexRole("Inner", i)


def Outer(i: int) -> VertexRole:
    return VertexRole("Outer", i)


def Block(i: int, j: int) -> VertexRole:
    return VertexRole("Block", i, j)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    p: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphSpecError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family != COMPLETE and self.n < 3:
            raise GraphSpecError(f"{self.family} needs n >= 3, got n={self.n}")
        if self.p < 0:
            raise GraphSpecError(f"block size p must be >= 0, got p={self.p}")

    def build(self) -> Graph:
        if self.family == CYCLE:
            return build_cycle(self.n)
        if self.family == COMPLETE:
            return build_complete(self.p)
        if self.family == CORONA:
            return build_corona(self.n, self.p)
        return build_double_corona(self.n, self.p)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. ``roles`` is
    either empty or holds one :class:`VertexRole` per vertex.
    """

    num_vertices: int
    adjacency: tuple[tuple[int, ...], ...]
    roles: tuple[VertexRole, ...] = ()
    family: FamilySpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.num_vertices:
            raise ValueError("adjacency length does not match num_vertices")
        if self.roles and len(self.roles) != self.num_vertices:
            raise ValueError("role map must cover every vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbour list of {v} is not sorted/unique")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.num_vertices or v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(
        cls,
        num_vertices: int,
        edges: Iterable[tuple[int, int]],
        roles: Iterable[VertexRole] = (),
        family: FamilySpec | None = None,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(num_vertices, tuple(tuple(sorted(s)) for s in nbrs), tuple(roles), family)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.num_vertices, self.adjacency, self.roles) == (
            other.num_vertices,
            other.adjacency,
            other.roles,
        )

    def __hash__(self):
        return hash((self.num_vertices, self.adjacency, self.roles))

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.num_vertices, self.num_vertices), dtype=np.float32)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        a.setflags(write=False)
        return a

    @cached_property
    def role_index(self) -> dict[VertexRole, int]:
        return {r: v for v, r in enumerate(self.roles)}

    def vertex(self, role: VertexRole) -> int:
        """Vertex id carrying ``role``."""
        try:
            return self.role_index[role]
        except KeyError:
            raise KeyError(f"no vertex with role {role}") from None

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for nbrs in self.adjacency:
            hist[len(nbrs)] = hist.get(len(nbrs), 0) + 1
        return dict(sorted(hist.items()))

    def role_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.roles:
            counts[r.kind] = counts.get(r.kind, 0) + 1
        return counts

    def to_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "edges": [list(e) for e in sorted(self.edges())],
            "roles": {str(v): str(r) for v, r in enumerate(self.roles)},
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        n = int(data["num_vertices"])
        raw_roles = data.get("roles") or {}
        roles = [VertexRole.parse(raw_roles[str(v)]) for v in range(n)] if raw_roles else []
        return cls.from_edges(n, [tuple(e) for e in data["edges"]], roles)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        return cls.from_dict(json.loads(text))


def _cycle_edges(ids: list[int]) -> list[tuple[int, int]]:
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def _clique_edges(ids: list[int]) -> list[tuple[int, int]]:
    return [(a, b) for x, a in enumerate(ids) for b in ids[x + 1 :]]


def _check_cycle_length(n: int) -> None:
    if n < 3:
        raise GraphSpecError(f"cycle length must be >= 3, got {n}")


def _check_block_size(p: int) -> None:
    if p < 0:
        raise GraphSpecError(f"block size must be >= 0, got {p}")


def build_cycle(n: int) -> Graph:
    _check_cycle_length(n)
    ids = list(range(n))
    return Graph.from_edges(n, _cycle_edges(ids), [Inner(i + 1) for i in ids], FamilySpec(CYCLE, n))


def build_complete(p: int) -> Graph:
    _check_block_size(p)
    return Graph.from_edges(p, _clique_edges(list(range(p))), family=FamilySpec(COMPLETE, 0, p))


def block_vertex(n: int, p: int, i: int, j: int, *, double: bool = False) -> int:
    """Canonical id of ``Block(i, j)`` (1-based ``i``, ``j``)."""
    offset = 2 * n if double else n
    return offset + (i - 1) * p + (j - 1)


def _attach_blocks(n: int, p: int, offset: int, hubs: list[list[int]]):
    """Edges and roles of the ``n`` copies of ``K_p``; block ``i`` is joined to every hub in ``hubs[i]``."""
    edges: list[tuple[int, int]] = []
    roles: list[VertexRole] = []
    for i in range(n):
        block = [offset + i * p + j for j in range(p)]
        edges += _clique_edges(block)
        for hub in hubs[i]:
            edges += [(hub, u) for u in block]
        roles += [Block(i + 1, j + 1) for j in range(p)]
    return edges, roles


def build_corona(n: int, p: int) -> Graph:
    """``C_n`` corona ``K_p``: n(p+1) vertices, n(p(p+1)/2 + 1) edges."""
    _check_cycle_length(n)
    _check_block_size(p)
    inner = list(range(n))
    edges = _cycle_edges(inner)
    block_edges, block_roles = _attach_blocks(n, p, n, [[v] for v in inner])
    roles = [Inner(i + 1) for i in inner] + block_roles
    return Graph.from_edges(n * (p + 1), edges + block_edges, roles, FamilySpec(CORONA, n, p))


def build_double_corona(n: int, p: int) -> Graph:
    """Two copies of ``C_n`` whose i-th vertices are both joined to the i-th ``K_p``.

    With ``p == 0`` this is two disjoint cycles.
    """
    _check_cycle_length(n)
    _check_block_size(p)
    inner = list(range(n))
    outer = list(range(n, 2 * n))
    edges = _cycle_edges(inner) + _cycle_edges(outer)
    block_edges, block_roles = _attach_blocks(n, p, 2 * n, [[inner[i], outer[i]] for i in range(n)])
    roles = [Inner(i + 1) for i in range(n)] + [Outer(i + 1) for i in range(n)] + block_roles
    return Graph.from_edges(n * (p + 2), edges + block_edges, roles, FamilySpec(DOUBLE_CORONA, n, p))


def build(family: str, n: int = 0, p: int = 0) -> Graph:
    return FamilySpec(family, n, p).build()
