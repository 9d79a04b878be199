from fractions import Fraction
from math import comb, sqrt

import numpy as np
import pytest

from thresholdlab.closed_form import conv_corona
from thresholdlab.graph_core import build_corona, build_cycle, build_double_corona
from thresholdlab.probability import (
    enumeration_probability,
    monte_carlo_probability,
    probability_from_dict,
    probability_to_dict,
    render_decimal,
    resilience_factor,
    sample_subsets,
    success_probability_corona,
)
from thresholdlab.search import count_converting_sets


def test_formula_values():
    assert success_probability_corona(3, 1, 2) == Fraction(1, 5)
    assert success_probability_corona(3, 1, 3) == Fraction(1, 2)
    assert success_probability_corona(5, 2, 5) == 1


def test_resilience():
    assert resilience_factor(3, 1, 2) == Fraction(4, 5)
    assert resilience_factor(5, 2, 5) == 0
    assert resilience_factor(3, 1, 3) == Fraction(1, 2)


def test_formula_domain():
    with pytest.raises(ValueError):
        success_probability_corona(4, 0, 2)
    with pytest.raises(ValueError):
        success_probability_corona(2, 1, 2)


def test_big_instance_stays_exact():
    prob = success_probability_corona(9, 4, 6)
    assert prob == Fraction(9, comb(45, 41))
    big = success_probability_corona(20, 10, 6)
    assert big.denominator > 2**64
    assert big == Fraction(20 * comb(10, 5) ** 19 * comb(11, 6), comb(220, 101))


def test_enumeration():
    assert enumeration_probability(build_corona(3, 1), 2, 4) == Fraction(1, 5)
    assert enumeration_probability(build_double_corona(3, 2), 3, 12) == 1
    # frozen from the naive enumeration oracle in tests/oracles.py
    assert enumeration_probability(build_double_corona(4, 1), 2, 4) == Fraction(28, 495)


def test_formula_matches_enumeration_small():
    for n in range(3, 6):
        for p in range(1, 4):
            for k in range(1, p + 4):
                m = conv_corona(n, p, k).count
                if comb(n * (p + 1), m) <= 50_000:
                    assert success_probability_corona(n, p, k) == enumeration_probability(build_corona(n, p), k, m)


@pytest.mark.parametrize("n", range(3, 10))
def test_alternating_cover_count(n):
    # with every block vertex seeded, the threshold-(p+2) successes are exactly the cycle's minimum covers
    p = 1
    m = p * n + (n + 1) // 2
    numerator = count_converting_sets(build_corona(n, p), p + 2, m)
    assert numerator == (2 if n % 2 == 0 else n)
    assert numerator == count_converting_sets(build_cycle(n), 2, (n + 1) // 2)


def test_decimal_rendering():
    assert render_decimal(Fraction(1, 5)) == "0.2000000000"
    assert render_decimal(Fraction(2, 3), 4) == "0.6667"
    assert render_decimal(Fraction(1), 3) == "1.000"
    d = probability_to_dict(Fraction(28, 495))
    assert d == {"num": "28", "den": "495", "decimal": "0.0565656566"}
    assert probability_from_dict(d) == Fraction(28, 495)


def test_sampler_is_uniform():
    rng = np.random.default_rng(3)
    draws = sample_subsets(rng, 5, 2, 100_000)
    assert all(len(set(row)) == 2 for row in draws[:1000])
    keys = [tuple(sorted(r)) for r in draws.tolist()]
    counts = {}
    for key in keys:
        counts[key] = counts.get(key, 0) + 1
    assert len(counts) == 10
    expected = 10_000
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 27.9  # chi-square 9 dof, p = 0.001


def test_monte_carlo_close_to_exact():
    g = build_corona(3, 1)
    for k, size, exact in ((2, 4, 0.2), (3, 5, 0.5)):
        rep = monte_carlo_probability(g, k, size, 100_000, rng_seed=11)
        assert abs(rep.estimate - exact) <= 3 * sqrt(exact * (1 - exact) / 100_000)


def test_monte_carlo_full_seed():
    g = build_double_corona(3, 1)
    rep = monte_carlo_probability(g, 4, g.num_vertices, 500, rng_seed=1)
    assert rep.estimate == 1.0 and rep.half_width == 0.0


def test_monte_carlo_reproducible_and_worker_independent():
    g = build_double_corona(4, 1)
    a = monte_carlo_probability(g, 2, 5, 40_000, rng_seed=5)
    b = monte_carlo_probability(g, 2, 5, 40_000, rng_seed=5, workers=4)
    assert a == b
    assert a.half_width == pytest.approx(1.96 * sqrt(a.estimate * (1 - a.estimate) / a.trials))
    assert 0 <= a.successes <= a.trials
