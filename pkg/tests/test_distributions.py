from fractions import Fraction
from math import comb

from hypersample.distributions import binom

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersample.distributions import (
    binomial_pmf,
    chernoff_tail,
    hypergeometric_pmf,
    kunsch_bounds,
    tail_probability,
    tv_distance,
)
from hypersample.errors import ParameterOrderError, PreconditionError


@given(st.integers(0, 12), st.fractions(0, 1))
def test_binomial_sums_to_one(k, p):
    assert binomial_pmf(k, p).total() == 1


@given(st.integers(0, 10), st.data())
def test_hypergeometric_exact(k, data):
    n = data.draw(st.integers(max(k, 1), 20))
    m = data.draw(st.integers(0, n))
    P = hypergeometric_pmf(k, m, n)
    assert P.total() == 1
    for j in range(k + 1):
        assert P[j] == Fraction(comb(k, j) * binom(n - k, m - j), comb(n, m))


def test_hypergeometric_order():
    with pytest.raises(ParameterOrderError):
        hypergeometric_pmf(5, 2, 4)


def test_tv_examples():
    assert tv_distance(binomial_pmf(3, Fraction(1, 2)), binomial_pmf(3, Fraction(1, 2))) == 0
    P = binomial_pmf(1, Fraction(1, 4))
    Q = binomial_pmf(1, Fraction(3, 4))
    assert tv_distance(P, Q) == Fraction(1, 2)


@given(st.integers(1, 8), st.fractions(0, 1), st.fractions(0, 1))
def test_tv_symmetric_bounded(k, p, q):
    P, Q = binomial_pmf(k, p), binomial_pmf(k, q)
    d = tv_distance(P, Q)
    assert d == tv_distance(Q, P)
    assert 0 <= d <= 1


def test_float_p_is_exact_rational():
    P = binomial_pmf(2, 0.5)
    assert P.values == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))


def test_chernoff():
    assert chernoff_tail(10, 0.1) == pytest.approx(2 * 2.718281828459045 ** (-0.2))
    with pytest.raises(PreconditionError):
        chernoff_tail(10, 0)


def test_kunsch_example():
    lo, hi = kunsch_bounds(3, 11)
    assert hi == Fraction(1, 5) and lo == Fraction(1, 140)


@pytest.mark.parametrize("k,n", [(2, 20), (4, 50), (6, 100)])
def test_kunsch_bracket(k, n):
    s = n // 2
    lo, hi = kunsch_bounds(k, n)
    tv = tv_distance(hypergeometric_pmf(k, s, n), binomial_pmf(k, Fraction(s, n)))
    assert lo <= tv <= hi


@given(st.integers(1, 10), st.fractions(0, 1), st.fractions(0, 1))
def test_chernoff_bounds_binomial_tail(k, p, eta):
    if eta == 0:
        return
    P = binomial_pmf(k, p)
    assert float(tail_probability(P, k * p, eta, k)) <= chernoff_tail(k, float(eta)) + 1e-12


def test_tail_strictness():
    P = binomial_pmf(2, Fraction(1, 2))
    assert tail_probability(P, 1, Fraction(1, 2), 2) == 0
    assert tail_probability(P, 1, Fraction(1, 2), 2, strict=False) == Fraction(1, 2)
