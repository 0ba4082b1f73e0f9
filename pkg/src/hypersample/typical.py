"""Typical-case behaviour: how a hypergraph samples a *uniformly random* density-p set.

Closed forms (exact expectation of the fraction of edges hitting A exactly r
times, the quadratic-mean variance bound, the exceedance bounds for
hypergeometric convergence / Chernoff tails / confinement deviation) plus
Monte-Carlo and exhaustive estimators of the fraction of density-p sets whose
statistic reaches a threshold.

Throughout, ``p`` enters through ``s = floor(p n)`` and the effective density
``s / n``; bounds are evaluated at the effective density.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .distributions import binom, binomial_pmf, hypergeometric_pmf
from .enumeration import DEFAULT_BUDGET, hit_count_rows, subset_hits
from .errors import DegenerateDensityError, NonUniformError, PreconditionError
from .hypergraph import Hypergraph
from .sampling import as_fraction, density_size, fisher_yates_prefix, run_trials, trial_rng

C_THM0 = 114

STATISTICS = ("tv_to_hyp", "tv_to_bin", "confinement_dev_from_pk", "avoidance_dev", "tail_mass")


# --- closed forms -------------------------------------------------------------

def expected_hit_fraction(n: int, k: int, p, r: int) -> Fraction:
    """E[|E_r(A)| / |E|] over uniform density-p sets A, for any k-uniform hypergraph on n vertices."""
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got k={k}, n={n}")
    s = density_size(p, n)
    return Fraction(binom(k, r) * binom(n - k, s - r), binom(n, s))


def _eff_density(n, p) -> float:
    return density_size(p, n) / n


def variance_preconditions(n: int, k: int, p, r: int) -> bool:
    s = density_size(p, n)
    return n >= 4 * k * k and 2 * r <= s and 2 * (k - r) <= n - s


def _pq_term(k, p) -> float:
    """(k-1)/(p q) + 4k, with the first term dropped when k <= 1."""
    if k <= 1:
        return 4.0 * k
    return (k - 1) / (p * (1 - p)) + 4.0 * k


def variance_bound(n: int, k: int, p, r: int, D: int, m: int, check: bool = True) -> float:
    """Upper bound C/n + C' (D - 1)/m on Var[|E_r(A)| / |E|]."""
    if check and not variance_preconditions(n, k, p, r):
        raise PreconditionError(f"variance bound needs n >= max(4k^2, 2r/p, 2(k-r)/(1-p)); n={n}, k={k}, r={r}")
    x = _eff_density(n, p)
    c = math.comb(k, r)
    tail = x ** r * (1 - x) ** (k - r)
    big_c = 2 * math.e * c * c * tail * tail * k * _pq_term(k, x) if k else 0.0
    small_c = tail * 1.3 * k * c
    return big_c / n + small_c * (D - 1) / m


def typical_preconditions(n: int, k: int, p) -> bool:
    """n >= max{4k^2, 2k / (p(1-p))}."""
    s = density_size(p, n)
    if s in (0, n):
        return False
    x = Fraction(s, n)
    return n >= 4 * k * k and n * x * (1 - x) >= 2 * k


@dataclass(frozen=True)
class TypicalBounds:
    k: int
    p: float
    eta: Optional[float]
    a_dist: float
    b_dist: float
    a_chernoff: Optional[float]
    b_chernoff: Optional[float]
    c114: int = C_THM0

    @classmethod
    def compute(cls, k: int, p: float, eta: Optional[float] = None) -> "TypicalBounds":
        a = math.e / 2 * k * (k + 1) ** 2 * _pq_term(k, p)
        b = 0.325 * k * (k + 1) ** 2
        a_ch = b_ch = None
        if eta is not None:
            a_ch = 16 * a * math.exp(-4 * k * eta * eta)
            b_ch = 8 * b * math.exp(-2 * k * eta * eta)
        return cls(k, p, eta, a, b, a_ch, b_ch)


def _require(check, n, k, p):
    if check and not typical_preconditions(n, k, p):
        raise PreconditionError(f"bound needs n >= max(4k^2, 2k/(p(1-p))); n={n}, k={k}, p={p}")


def thm0_exceedance_bound(n: int, k: int, p, alpha: float, D: int, m: int, side: str = "confinement", check: bool = True) -> tuple[float, float]:
    """(deviation threshold n^{-(1-alpha)/2}, bound on the fraction of sets reaching it).

    ``side="confinement"`` concerns P[e ⊆ A] vs p^k, ``side="avoidance"`` concerns
    P[e ∩ A = ∅] vs (1-p)^k. The fraction bound can exceed 1 (vacuous).
    """
    if not 0 <= alpha <= 1:
        raise PreconditionError(f"alpha must lie in [0, 1], got {alpha}")
    _require(check, n, k, p)
    x = _eff_density(n, p)
    if side == "avoidance":
        x = 1 - x
    elif side != "confinement":
        raise ValueError(f"unknown side {side!r}")
    ntilde = m / D
    threshold = n ** (-(1 - alpha) / 2)
    if x >= 1:
        return threshold, math.inf
    return threshold, C_THM0 * x**k * k * k * ntilde ** (-alpha) / (1 - x)


def dist_exceedance_bound(n: int, k: int, p, eps: float, D: int, m: int, check: bool = True) -> float:
    """Bound on the fraction of density-p sets with TV(N_H(A), Hyp(k, pn, n)) >= eps."""
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    _require(check, n, k, p)
    tb = TypicalBounds.compute(k, _eff_density(n, p))
    return (tb.a_dist / n + tb.b_dist * (D - 1) / m) / (eps * eps)


def chernoff_exceedance_bound(n: int, k: int, p, eta: float, eps: float, D: int, m: int, check: bool = True) -> tuple[float, float]:
    """(tail-mass threshold 2 exp(-2k eta^2) + eps, bound on the fraction of sets whose tail mass reaches it)."""
    if eps <= 0 or eta <= 0:
        raise PreconditionError("eta and eps must be positive")
    _require(check, n, k, p)
    tb = TypicalBounds.compute(k, _eff_density(n, p), eta)
    bound = (tb.a_chernoff / n + tb.b_chernoff * (D - 1) / m) / (eps * eps)
    return 2 * math.exp(-2 * k * eta * eta) + eps, bound


# --- statistics of a single set A ---------------------------------------------

class StatisticEvaluator:
    """Evaluates one statistic from the tally ``counts[j]`` = #edges hit j times.

    ``exact()`` works in rationals, ``approx()`` in doubles; the two agree to 1e-10.
    """

    def __init__(self, n: int, k: int, s: int, m: int, statistic: str, eta=None):
        if statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {statistic!r}; choose from {STATISTICS}")
        if statistic == "tail_mass" and eta is None:
            raise PreconditionError("tail_mass needs eta")
        self.n, self.k, self.s, self.m, self.statistic = n, k, s, m, statistic
        self.x = Fraction(s, n)
        self.eta = None if eta is None else as_fraction(eta)
        if statistic == "tv_to_hyp":
            self._ref = hypergeometric_pmf(k, s, n).values
        elif statistic == "tv_to_bin":
            self._ref = binomial_pmf(k, self.x).values
        elif statistic == "confinement_dev_from_pk":
            self._ref = self.x**k
        elif statistic == "avoidance_dev":
            self._ref = (1 - self.x) ** k
        else:
            width = k * self.eta
            center = k * self.x
            # edges hit j times count towards the tail when |j - kp| >= k eta
            self._ref = tuple(abs(j - center) >= width for j in range(k + 1))
        self._ref_f = np.array([float(v) for v in self._ref]) if isinstance(self._ref, tuple) else float(self._ref)
        self._cache: dict = {}

    def exact(self, counts) -> Fraction:
        key = tuple(int(c) for c in counts)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        m = self.m
        st = self.statistic
        if st in ("tv_to_hyp", "tv_to_bin"):
            val = sum((abs(Fraction(c, m) - ref) for c, ref in zip(key, self._ref)), Fraction(0)) / 2
        elif st == "confinement_dev_from_pk":
            val = abs(Fraction(key[self.k], m) - self._ref)
        elif st == "avoidance_dev":
            val = abs(Fraction(key[0], m) - self._ref)
        else:
            val = Fraction(sum(c for c, inside in zip(key, self._ref) if inside), m)
        self._cache[key] = val
        return val

    def approx(self, counts: np.ndarray) -> float:
        c = np.asarray(counts, dtype=np.float64) / self.m
        st = self.statistic
        if st in ("tv_to_hyp", "tv_to_bin"):
            return float(np.abs(c - self._ref_f).sum() / 2)
        if st == "confinement_dev_from_pk":
            return abs(float(c[self.k]) - self._ref_f)
        if st == "avoidance_dev":
            return abs(float(c[0]) - self._ref_f)
        return float(c[self._ref_f.astype(bool)].sum())


def _uniform_k(H: Hypergraph) -> int:
    k = H.uniformity
    if k is None:
        raise NonUniformError("typical-case statistics need a uniform hypergraph")
    return k


def _size(H, p) -> int:
    s = density_size(p, H.n)
    if not 0 < s < H.n:
        raise DegenerateDensityError(f"floor(p n) = {s} must lie strictly between 0 and n = {H.n}")
    return s


# --- estimators ---------------------------------------------------------------

@dataclass(frozen=True)
class ExceedanceEstimate:
    statistic: str
    threshold: float
    trials: int
    exceed: int
    estimate: float
    ci95: float
    seed: Optional[int]
    mean_statistic: float = field(default=float("nan"))

    def to_json(self) -> dict:
        return asdict(self)


def _ci95(est: float, trials: int) -> float:
    return 1.96 * math.sqrt(est * (1 - est) / trials)


def mc_typical(H: Hypergraph, p, statistic: str, threshold: float, trials: int, seed: int, eta=None, threads: int = 1) -> ExceedanceEstimate:
    """Monte-Carlo fraction of uniform floor(pn)-subsets whose statistic is >= threshold."""
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    k = _uniform_k(H)
    s = _size(H, p)
    ev = StatisticEvaluator(H.n, k, s, H.m, statistic, eta)

    def one(i):
        mask = fisher_yates_prefix(trial_rng(seed, i), H.n, s)
        counts = np.bincount(H.hit_counts(mask), minlength=k + 1)
        return ev.approx(counts)

    values = run_trials(one, trials, threads)
    exceed = sum(v >= threshold for v in values)
    est = exceed / trials
    return ExceedanceEstimate(statistic, float(threshold), trials, int(exceed), est, _ci95(est, trials), int(seed), math.fsum(values) / trials)


def exact_typical(H: Hypergraph, p, statistic: str, threshold, eta=None, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Exact fraction of all floor(pn)-subsets whose statistic (in rationals) is >= threshold."""
    k = _uniform_k(H)
    s = _size(H, p)
    ev = StatisticEvaluator(H.n, k, s, H.m, statistic, eta)
    thr = Fraction(threshold)
    exceed = total = 0
    for _, hits in subset_hits(H, s, budget):
        for row in hit_count_rows(hits, k):
            exceed += ev.exact(row) >= thr
            total += 1
    return Fraction(exceed, total)


def exact_typical_estimate(H: Hypergraph, p, statistic: str, threshold, eta=None, budget: int = DEFAULT_BUDGET) -> ExceedanceEstimate:
    frac = exact_typical(H, p, statistic, threshold, eta, budget)
    total = binom(H.n, density_size(p, H.n))
    return ExceedanceEstimate(statistic, float(threshold), total, int(frac * total), float(frac), 0.0, None)


# --- report -------------------------------------------------------------------

def applicable_bound(H: Hypergraph, p, statistic: str, threshold: float, alpha: float = 0.5, eta=None) -> tuple[Optional[float], bool]:
    """The matching typical-case bound on the exceedance fraction and whether its preconditions hold."""
    k = _uniform_k(H)
    n, m, D = H.n, H.m, H.max_degree
    ok = typical_preconditions(n, k, p)
    s = density_size(p, n)
    try:
        if statistic in ("confinement_dev_from_pk", "avoidance_dev"):
            side = "confinement" if statistic == "confinement_dev_from_pk" else "avoidance"
            thr, bound = thm0_exceedance_bound(n, k, p, alpha, D, m, side, check=False)
            # the corollary speaks about the threshold n^{-(1-alpha)/2} only
            ok = ok and threshold >= thr
        elif statistic == "tv_to_hyp":
            bound = dist_exceedance_bound(n, k, p, threshold, D, m, check=False)
        elif statistic == "tv_to_bin":
            slack = threshold - (k - 1) / (n - 1)
            ok = ok and s * (n - s) >= n
            bound = dist_exceedance_bound(n, k, p, slack, D, m, check=False) if slack > 0 else None
        else:
            eps = threshold - 2 * math.exp(-2 * k * float(eta) ** 2)
            bound = chernoff_exceedance_bound(n, k, p, float(eta), eps, D, m, check=False)[1] if eps > 0 else None
    except (ZeroDivisionError, PreconditionError):
        bound = None
    if bound is None:
        ok = False
    return bound, bool(ok)


def default_threshold(H: Hypergraph, statistic: str, alpha: float = 0.5, eta=None) -> float:
    k = _uniform_k(H)
    if statistic in ("confinement_dev_from_pk", "avoidance_dev"):
        return H.n ** (-(1 - alpha) / 2)
    ntilde = H.m / H.max_degree
    eps = ntilde ** (-(1 - alpha) / 2)
    if statistic == "tv_to_bin":
        return eps + (k - 1) / (H.n - 1)
    if statistic == "tail_mass":
        return 2 * math.exp(-2 * k * float(eta) ** 2) + eps
    return eps


def analysis_report(H: Hypergraph, p, statistic: str, threshold: Optional[float] = None, trials: Optional[int] = None,
                    seed: int = 0, exact: bool = False, alpha: float = 0.5, eta=None, threads: int = 1,
                    budget: int = DEFAULT_BUDGET) -> dict:
    if threshold is None:
        threshold = default_threshold(H, statistic, alpha, eta)
    if exact:
        est = exact_typical_estimate(H, p, statistic, threshold, eta, budget)
    else:
        est = mc_typical(H, p, statistic, threshold, trials or 1000, seed, eta, threads)
    bound, ok = applicable_bound(H, p, statistic, threshold, alpha, eta)
    return {
        "instance_digest": H.digest(),
        "statistic": statistic if eta is None else f"{statistic}({eta})",
        "threshold": float(threshold),
        "trials": est.trials,
        "exceed": est.exceed,
        "estimate": est.estimate,
        "ci95": est.ci95,
        "bound": bound,
        "preconditions_met": ok,
        "seed": est.seed,
    }
