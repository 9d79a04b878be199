import pytest

from thresholdlab.closed_form import (
    Finite,
    Inconvertible,
    conv_corona,
    conv_cycle,
    conv_double_corona,
    conversion_number,
    parse_conversion_number,
    reduce_corona,
    reduce_double_corona,
)


def test_cycle():
    assert conv_cycle(9, 2) == Finite(5)
    assert conv_cycle(4, 1) == Finite(1)
    assert conv_cycle(5, 3) == Inconvertible(5)
    assert conv_cycle(5, 3).count == 5
    with pytest.raises(ValueError):
        conv_cycle(2, 2)


@pytest.mark.parametrize(
    "n, p, k, value",
    [(5, 3, 3, 11), (9, 4, 6, 41), (3, 1, 1, 1), (4, 1, 3, 6), (3, 2, 3, 7)],
)
def test_corona(n, p, k, value):
    assert conv_corona(n, p, k) == Finite(value)


def test_corona_inconvertible_and_p0():
    assert conv_corona(4, 2, 5) == Inconvertible(12)
    for n in range(3, 9):
        for k in range(1, 6):
            assert conv_corona(n, 0, k) == conv_cycle(n, k)


@pytest.mark.parametrize(
    "n, p, k, value",
    [(3, 5, 2, 3), (4, 3, 4, 12), (7, 1, 3, 15), (4, 2, 2, 3), (5, 1, 2, 5), (3, 2, 4, 10)],
)
def test_double_corona(n, p, k, value):
    assert conv_double_corona(n, p, k) == Finite(value)


def test_double_corona_edge_cases():
    assert conv_double_corona(5, 2, 1) == Finite(1)
    assert conv_double_corona(5, 0, 1) == Finite(2)
    assert conv_double_corona(5, 0, 2) == Finite(6)
    assert conv_double_corona(5, 0, 3) == Inconvertible(10)
    assert conv_double_corona(3, 1, 5) == Inconvertible(9)


def test_reduce_corona_examples():
    assert reduce_corona(8, 3, 3) == Finite(17)
    assert reduce_corona(5, 2, 4) == Finite(13)
    assert reduce_corona(3, 0, 2) == Finite(2)


def test_reduce_double_corona_examples():
    assert reduce_double_corona(5, 3, 4) == Finite(15)
    assert reduce_double_corona(4, 2, 2) == Finite(3)
    assert reduce_double_corona(3, 1, 5) == Inconvertible(9)
    with pytest.raises(ValueError):
        reduce_double_corona(4, 2, 1)


def test_floor_identity():
    for n in range(3, 10_001):
        assert (3 * n + 3) // 4 == n - n // 4


def test_boundary_k_equals_p_plus_1_at_p1():
    for n in range(3, 40):
        assert conv_double_corona(n, 1, 2) == Finite(n)


def test_formula_matches_reduction_grid():
    for n in range(3, 13):
        for p in range(0, 7):
            for k in range(1, p + 5):
                assert conv_corona(n, p, k) == reduce_corona(n, p, k)
                if k >= 2:
                    assert conv_double_corona(n, p, k) == reduce_double_corona(n, p, k)


def test_conversion_number_helpers():
    assert conversion_number(9, 9) == Inconvertible(9)
    assert conversion_number(4, 9) == Finite(4)
    assert str(Inconvertible(9)) == "inconvertible(9)"
    for c in (Finite(4), Inconvertible(9)):
        assert parse_conversion_number(str(c)) == c
