"""Exact binomial / hypergeometric laws, total variation, Chernoff and Künsch bounds.

Pmfs built from integer or ``Fraction`` parameters are exact rationals; floats
are converted to the exact rational they represent unless ``exact=False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

from .errors import ParameterOrderError, PreconditionError

Number = Union[int, float, Fraction]


def binom(n: int, m: int) -> int:
    """C(n, m), taken to be 0 when m is outside [0, n] or n < 0."""
    if n < 0 or m < 0 or m > n:
        return 0
    return math.comb(n, m)


@dataclass(frozen=True)
class Pmf:
    """Probability mass function on the integers ``offset .. offset + len(values) - 1``."""

    offset: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, x: int):
        i = x - self.offset
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    @property
    def support(self) -> range:
        return range(self.offset, self.offset + len(self.values))

    def total(self):
        return sum(self.values)

    def as_float(self) -> "Pmf":
        return Pmf(self.offset, tuple(float(v) for v in self.values))

    def as_dict(self) -> dict:
        return {x: v for x, v in zip(self.support, self.values) if v}

    def mean(self):
        return sum(x * v for x, v in zip(self.support, self.values))


def point_mass(x: int) -> Pmf:
    return Pmf(x, (Fraction(1),))


def _rational(p) -> Fraction:
    if isinstance(p, Rational):
        return Fraction(p)
    return Fraction(float(p))


def binomial_pmf(k: int, p: Number, exact: bool = True) -> Pmf:
    if k < 0 or not 0 <= p <= 1:
        raise PreconditionError(f"binomial needs k >= 0 and p in [0, 1], got k={k}, p={p}")
    if exact:
        p = _rational(p)
        q = 1 - p
        return Pmf(0, tuple(binom(k, j) * p**j * q ** (k - j) for j in range(k + 1)))
    p = float(p)
    return Pmf(0, tuple(math.comb(k, j) * p**j * (1 - p) ** (k - j) for j in range(k + 1)))


def hypergeometric_pmf(k: int, m: int, n: int) -> Pmf:
    """Number of red balls among k drawn without replacement from m red + (n - m) blue."""
    if not (0 <= k <= n and 0 <= m <= n):
        raise ParameterOrderError(f"hypergeometric needs 0 <= k <= n and 0 <= m <= n, got ({k}, {m}, {n})")
    total = binom(n, m)
    return Pmf(0, tuple(Fraction(binom(k, j) * binom(n - k, m - j), total) for j in range(k + 1)))


def tv_distance(P: Pmf, Q: Pmf):
    """Half the L1 distance between two pmfs (supports are unioned)."""
    lo = min(P.offset, Q.offset)
    hi = max(P.offset + len(P.values), Q.offset + len(Q.values))
    return sum(abs(P[x] - Q[x]) for x in range(lo, hi)) / 2


def chernoff_tail(k: Number, eta: float) -> float:
    """The tail estimate 2 exp(-2 k eta^2) for Bin(k, p) and Hyp(k, pn, n)."""
    if eta <= 0:
        raise PreconditionError(f"eta must be positive, got {eta}")
    return 2.0 * math.exp(-2.0 * k * eta * eta)


def kunsch_bounds(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on TV(Hyp(k, pn, n), Bin(k, p)); valid when n p (1 - p) >= 1."""
    if not 1 <= k <= n or n < 2:
        raise PreconditionError(f"need 1 <= k <= n and n >= 2, got k={k}, n={n}")
    upper = Fraction(k - 1, n - 1)
    return upper / 28, upper


def tail_probability(P: Pmf, center: Number, eta: Number, k: Number, strict: bool = True):
    """Mass of P outside the window around ``center`` of half-width ``k * eta``.

    ``strict=True`` gives P[|X - center| > k eta]; ``strict=False`` uses ``>=``.
    Exact when all inputs are rational.
    """
    width = k * eta
    out = 0
    for x, v in zip(P.support, P.values):
        dev = abs(x - center)
        if dev > width or (not strict and dev == width):
            out += v
    return out


def kunsch_applicable(n: int, m: int) -> bool:
    return Fraction(m, n) * (1 - Fraction(m, n)) * n >= 1


def as_pmf(probs: Sequence, offset: int = 0) -> Pmf:
    return Pmf(offset, tuple(probs))
