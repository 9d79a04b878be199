"""Conversion numbers of cycles, coronas and double coronas.

``conv_*`` evaluate the closed forms directly. ``reduce_*`` walk the
block-peeling recurrences down to their base cases instead, so the two
routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Finite:
    value: int

    @property
    def count(self) -> int:
        return self.value

    @property
    def is_finite(self) -> bool:
        return True

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Inconvertible:
    """Only the whole vertex set converts."""

    num_vertices: int

    @property
    def count(self) -> int:
        return self.num_vertices

    @property
    def is_finite(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"inconvertible({self.num_vertices})"


ConversionNumber = Finite | Inconvertible


def conversion_number(value: int, num_vertices: int) -> ConversionNumber:
    """Wrap a minimum seed size; a minimum of ``|V|`` means inconvertible."""
    if not 0 <= value <= num_vertices:
        raise ValueError(f"conversion number {value} outside [0, {num_vertices}]")
    return Inconvertible(num_vertices) if value == num_vertices else Finite(value)


def parse_conversion_number(text: str) -> ConversionNumber:
    text = text.strip()
    if text.startswith("inconvertible(") and text.endswith(")"):
        return Inconvertible(int(text[len("inconvertible(") : -1]))
    return Finite(int(text))


def _check(n: int, p: int, k: int) -> None:
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    if p < 0:
        raise ValueError(f"block size must be >= 0, got {p}")
    if k < 1:
        raise ValueError(f"threshold must be >= 1, got {k}")


def ceil_half(n: int) -> int:
    return (n + 1) // 2


def conv_cycle(n: int, k: int) -> ConversionNumber:
    _check(n, 0, k)
    if k == 1:
        return Finite(1)
    if k == 2:
        return Finite(ceil_half(n))
    return Inconvertible(n)


def conv_corona(n: int, p: int, k: int) -> ConversionNumber:
    _check(n, p, k)
    if p == 0:
        return conv_cycle(n, k)
    if k <= p + 1:
        return Finite((k - 1) * n + 1)
    if k == p + 2:
        return Finite(p * n + ceil_half(n))
    return Inconvertible(n * (p + 1))


def conv_double_corona(n: int, p: int, k: int) -> ConversionNumber:
    _check(n, p, k)
    num_vertices = n * (p + 2)
    if k == 1:
        # p == 0 leaves two components, each needing its own seed
        return Finite(1 if p >= 1 else 2)
    if p == 0:
        cycle = conv_cycle(n, k)
        return Finite(2 * cycle.value) if cycle.is_finite else Inconvertible(num_vertices)
    if k <= p:
        return Finite((k - 2) * n + (3 * n + 3) // 4)
    if k == p + 1:
        return Finite(p * n)
    if k == p + 2:
        return Finite(p * n + 2 * ceil_half(n))
    return Inconvertible(num_vertices)


def _shift(residual: ConversionNumber, removed: int) -> ConversionNumber:
    if residual.is_finite:
        return Finite(removed + residual.value)
    return Inconvertible(removed + residual.num_vertices)


def _cycle_base(n: int, k: int) -> ConversionNumber:
    # threshold 1 on a connected graph; ceil(n/2) at threshold 2; degree 2 < k otherwise
    if k == 1:
        return Finite(1)
    if k == 2:
        return Finite(ceil_half(n))
    return Inconvertible(n)


def reduce_corona(n: int, p: int, k: int) -> ConversionNumber:
    """``C_k(C_n . K_p) = r n + C_{k-r}(C_n . K_{p-r})`` with ``r = min(k-1, p)``."""
    _check(n, p, k)
    r = min(k - 1, p)
    if r == 0:
        if k == 1:
            return Finite(1)
        return _cycle_base(n, k)
    return _shift(reduce_corona(n, p - r, k - r), r * n)


def _double_corona_threshold2(n: int, p: int) -> ConversionNumber:
    if p == 0:
        return Finite(2 * ceil_half(n))
    if p == 1:
        return Finite(n)
    return Finite(n - n // 4)


def reduce_double_corona(n: int, p: int, k: int) -> ConversionNumber:
    """``C_k(C_n .. K_p) = t n + C_{k-t}(C_n .. K_{p-t})`` with ``t = min(k-2, p)``."""
    _check(n, p, k)
    if k < 2:
        raise ValueError("the double-corona reduction needs k >= 2")
    t = min(k - 2, p)
    if t == 0:
        if k == 2:
            return _double_corona_threshold2(n, p)
        # p == 0: two disjoint cycles
        cycle = _cycle_base(n, k)
        return Finite(2 * cycle.value) if cycle.is_finite else Inconvertible(2 * n)
    return _shift(reduce_double_corona(n, p - t, k - t), t * n)
