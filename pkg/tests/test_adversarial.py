import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import uniform_hypergraphs
from hypersample import generators as gen
from hypersample.adversarial import (
    cover_fractions,
    cover_trials_csv,
    expected_cover_fraction_bound,
    gamma_bounds,
    meets_probability,
    random_cover_trial,
    search_worst_confined,
    solve_gamma,
    sweep_gammas,
)
from hypersample.distributions import binom
from hypersample.errors import BudgetZeroError, TooManySetsError, ZeroDegreeInProfileError
from hypersample.hypergraph import DegreeProfile, edges_confined
from hypersample.oracle import brute_meets_probability, exact_worst_confinement


def test_solve_gamma_regular():
    assert solve_gamma(DegreeProfile.regular(4), 0.3) == pytest.approx(1 - 0.7**0.25, abs=1e-13)


def test_solve_gamma_mixed_profile_vs_polynomial():
    prof = DegreeProfile((1, 3), (Fraction(1, 2), Fraction(1, 2)))
    g = solve_gamma(prof, 0.5)
    # g/2 + (1-(1-g)^3)/2 = 1/2  <=>  g^3 - 3g^2 + 4g - 1 = 0
    roots = [r.real for r in np.roots([1, -3, 4, -1]) if abs(r.imag) < 1e-12 and 0 < r.real < 1]
    assert g == pytest.approx(roots[0], abs=1e-12)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=12), st.floats(1e-3, 1 - 1e-3))
def test_solve_gamma_solves_and_brackets(degs, delta):
    prof = DegreeProfile.from_degrees(degs)
    g = solve_gamma(prof, delta)
    lhs = sum(float(u) * (1 - (1 - g) ** d) for d, u in prof.items())
    assert lhs == pytest.approx(delta, abs=1e-12)
    lo, hi = gamma_bounds(prof, delta)
    assert lo - 1e-12 <= g <= hi + 1e-12


def test_solve_gamma_limits():
    prof = DegreeProfile.from_degrees([2, 3, 3])
    assert solve_gamma(prof, 1e-9) < 1e-8
    assert solve_gamma(prof, 1 - 1e-9) > 0.99


def test_solve_gamma_zero_degree():
    with pytest.raises(ZeroDegreeInProfileError):
        solve_gamma(DegreeProfile.from_degrees([0, 2]), 0.5)


def test_cover_bound_cases():
    prof = DegreeProfile.regular(3)
    g, k = 0.2, 4
    r = Fraction(3, k)
    assert expected_cover_fraction_bound(prof, r, g) == pytest.approx(g + (1 - g) * (1 - (1 - g) ** 2) ** k)
    assert expected_cover_fraction_bound(prof, r, 0) == 0
    assert expected_cover_fraction_bound(prof, r, 1) == 1


def test_cover_trial_extremes():
    H = gen.random_uniform(10, 3, 6, seed=1)
    full = random_cover_trial(H, 1.0, seed=0)
    assert full.confined_frac == 1 and full.A == int((H.degrees > 0).sum())
    empty = random_cover_trial(H, 0.0, seed=0)
    assert empty.A == 0 and empty.confined == 0


@settings(max_examples=30)
@given(uniform_hypergraphs(max_n=12), st.floats(0, 1), st.integers(0, 1000))
def test_cover_trial_invariants(H, g, seed):
    t = random_cover_trial(H, g, seed)
    assert t.confined >= t.B
    assert t.confined == edges_confined(H, _cover_set(H, g, seed))


def _cover_set(H, g, seed):
    from hypersample.sampling import trial_rng

    chosen = trial_rng(seed, 0).random(H.m) < g
    return sorted({v for i, e in enumerate(H.edges) if chosen[i] for v in e})


def test_cover_mean_above_bound():
    H = gen.random_regular_uniform(300, 3, 2, seed=2)
    g = 0.3
    vals = cover_fractions(H, g, 3000, seed=5)
    bound = expected_cover_fraction_bound(H.degree_profile, H.sparsity, g)
    assert vals.mean() >= bound - 3 * vals.std(ddof=1) / math.sqrt(len(vals))


def test_cover_csv():
    H = gen.random_uniform(10, 3, 6, seed=1)
    text = cover_trials_csv([random_cover_trial(H, 0.5, 1, i) for i in range(3)])
    assert text.splitlines()[0] == "gamma,B,A,density,confined_frac"
    assert len(text.splitlines()) == 4


@pytest.mark.parametrize("strategy", ["cover-restarts", "greedy", "hybrid"])
def test_search_on_complete(strategy):
    H = gen.complete_uniform(9, 3)
    res = search_worst_confined(H, 0.5, budget=16, seed=1, strategy=strategy)
    assert res.confinement == Fraction(binom(4, 3), binom(9, 3))
    assert res.size == 4


@pytest.mark.parametrize("strategy", ["cover-restarts", "greedy", "hybrid"])
def test_search_on_singletons(strategy):
    H = gen.singleton_repeated(11, 3)
    res = search_worst_confined(H, 0.4, budget=8, seed=1, strategy=strategy)
    assert res.confinement == Fraction(4, 11)


@settings(max_examples=20)
@given(uniform_hypergraphs(max_n=12, max_m=14), st.floats(0.2, 0.8), st.integers(0, 99))
def test_search_below_oracle_and_full_budget_hybrid_exact(H, delta, seed):
    best, _ = exact_worst_confinement(H, delta)
    for strategy in ("cover-restarts", "greedy"):
        res = search_worst_confined(H, delta, budget=8, seed=seed, strategy=strategy)
        assert res.confinement <= best
        assert res.confined == edges_confined(H, res.A)
        assert res.size == math.floor(Fraction(repr(delta)) * H.n)
    full = search_worst_confined(H, delta, budget=10**6, seed=seed, strategy="hybrid")
    assert full.confinement == best


def test_search_meets_baseline_and_is_deterministic():
    H = gen.random_regular_uniform(600, 3, 3, seed=4)
    a = search_worst_confined(H, 0.5, budget=12, seed=3, strategy="hybrid")
    b = search_worst_confined(H, 0.5, budget=12, seed=3, strategy="hybrid", threads=4)
    assert a.to_json() == b.to_json()
    assert a.confinement >= a.baseline
    sweep = search_worst_confined(H, 0.5, budget=33, seed=3, strategy="cover-restarts", gamma_sweep=True)
    assert sweep.confinement >= sweep.baseline


def test_sweep_grid():
    g = sweep_gammas(0.4)
    assert len(g) == 33 and g[0] == pytest.approx(0.2) and g[-1] == pytest.approx(0.6)


def test_budget_zero():
    with pytest.raises(BudgetZeroError):
        search_worst_confined(gen.complete_uniform(5, 2), 0.5, budget=0)


def test_meets_examples():
    assert meets_probability(4, [{1, 2}, {3, 4}], "bernoulli", Fraction(1, 2)) == Fraction(9, 16)
    assert meets_probability(4, [{1, 2}, {2, 3}], "bernoulli", Fraction(1, 2)) == Fraction(5, 8)
    g = Fraction(1, 3)
    assert meets_probability(5, [{0, 1, 2}], "bernoulli", g) == 1 - (1 - g) ** 3


def test_meets_too_many_sets():
    with pytest.raises(TooManySetsError):
        meets_probability(30, [{i} for i in range(21)], "bernoulli", 0.5)


@settings(max_examples=80)
@given(st.integers(1, 8), st.data())
def test_meets_matches_brute_force(x, data):
    t = data.draw(st.integers(0, 3))
    sets = [data.draw(st.sets(st.integers(0, x - 1), max_size=x)) for _ in range(t)]
    g = data.draw(st.fractions(0, 1, max_denominator=7))
    assert meets_probability(x, sets, "bernoulli", g) == brute_meets_probability(x, sets, "bernoulli", g)
    m = data.draw(st.integers(0, x))
    assert meets_probability(x, sets, "uniform", m) == brute_meets_probability(x, sets, "uniform", m)
