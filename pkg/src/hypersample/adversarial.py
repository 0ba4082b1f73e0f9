"""Adversarial construction of dense sets that confine many hyperedges.

The basic move: keep each hyperedge independently with probability gamma and
let A be the vertices they cover. Every kept edge is confined to A, and edges
whose vertices happen to be covered by other kept edges come along for free.
gamma is tuned so that A has the target density on average.

The search strategies on top of this are heuristics; all of them are
deterministic given the seed and independent of the thread count.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .curves import gamma_bracket, solve_gamma_real
from .distributions import binom
from .errors import BudgetZeroError, PreconditionError, TooManySetsError, ZeroDegreeInProfileError
from .hypergraph import DegreeProfile, Hypergraph, VertexSubset
from .sampling import as_fraction, density_size, run_trials, trial_rng

STRATEGIES = ("cover-restarts", "greedy", "hybrid")
SWEEP_POINTS = 33


def solve_gamma(profile: DegreeProfile, delta: float) -> float:
    """gamma in (0, 1) with delta = sum_i u_i (1 - (1-gamma)^{d_i})."""
    if profile.min_degree < 1:
        raise ZeroDegreeInProfileError("every degree in the profile must be >= 1")
    if not 0 < delta < 1:
        raise PreconditionError(f"delta must lie in (0, 1), got {delta}")
    ds = [float(d) for d in profile.degrees]
    us = [float(u) for u in profile.fractions]
    return solve_gamma_real(ds, us, float(delta))


def gamma_bounds(profile: DegreeProfile, delta: float) -> tuple[float, float]:
    return gamma_bracket([float(d) for d in profile.degrees], [float(u) for u in profile.fractions], float(delta))


def expected_cover_fraction_bound(profile: DegreeProfile, r: float, gamma: float) -> float:
    """gamma + (1-gamma) prod_i (1 - (1-gamma)^{d_i - 1})^{u_i d_i / r}; r is the sparsity |E|/|V|."""
    if not 0 <= gamma <= 1:
        raise PreconditionError("gamma must lie in [0, 1]")
    prod = 1.0
    for d, u in profile.items():
        if u == 0:
            continue
        base = 1 - (1 - gamma) ** (d - 1)
        prod *= base ** (float(u) * d / float(r))
    return gamma + (1 - gamma) * prod


# --- single cover trials ------------------------------------------------------

@dataclass(frozen=True)
class CoverTrial:
    gamma: float
    B: int
    A: int
    density: Fraction
    confined: int
    confined_frac: Fraction


class _Incidence:
    """Flat incidence arrays of the set version of H (walk repeats collapsed; confinement is unchanged)."""

    def __init__(self, H: Hypergraph):
        edges = [tuple(sorted(set(e))) for e in H.edges] if H.multiset else list(H.edges)
        self.n, self.m = H.n, H.m
        self.sizes = np.fromiter((len(e) for e in edges), dtype=np.int64, count=self.m)
        self.flat = np.fromiter((v for e in edges for v in e), dtype=np.int64, count=int(self.sizes.sum()))
        self.edge_of = np.repeat(np.arange(self.m, dtype=np.int64), self.sizes)
        self.edges = edges
        self.degree = np.bincount(self.flat, minlength=self.n)
        order = np.argsort(self.flat, kind="stable")
        self.ve_ptr = np.concatenate(([0], np.cumsum(self.degree)))
        self.ve = self.edge_of[order]

    def vertex_edges(self, v: int) -> np.ndarray:
        return self.ve[self.ve_ptr[v]:self.ve_ptr[v + 1]]

    def cover(self, chosen: np.ndarray) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        mask[self.flat[chosen[self.edge_of]]] = True
        return mask

    def missing(self, mask: np.ndarray) -> np.ndarray:
        inside = np.bincount(self.edge_of[mask[self.flat]], minlength=self.m)
        return self.sizes - inside

    def confined(self, mask: np.ndarray) -> int:
        return int(np.count_nonzero(self.missing(mask) == 0))


def _cover_trial(inc: _Incidence, gamma: float, rng: np.random.Generator) -> tuple[np.ndarray, int]:
    chosen = rng.random(inc.m) < gamma
    return inc.cover(chosen), int(np.count_nonzero(chosen))


def random_cover_trial(H: Hypergraph, gamma: float, seed: int, index: int = 0) -> CoverTrial:
    """Keep each edge with probability gamma (stream ``(seed, index)``) and measure the confinement of its cover."""
    if not 0 <= gamma <= 1:
        raise PreconditionError("gamma must lie in [0, 1]")
    inc = _Incidence(H)
    mask, b = _cover_trial(inc, gamma, trial_rng(seed, index))
    a = int(mask.sum())
    c = inc.confined(mask)
    return CoverTrial(float(gamma), b, a, Fraction(a, H.n), c, Fraction(c, H.m))


def cover_fractions(H: Hypergraph, gamma: float, trials: int, seed: int, threads: int = 1) -> np.ndarray:
    """Confined fractions |E(V(B))|/m of ``trials`` independent Bernoulli-gamma covers."""
    inc = _Incidence(H)

    def one(i):
        mask, _ = _cover_trial(inc, gamma, trial_rng(seed, i))
        return inc.confined(mask) / inc.m

    return np.array(run_trials(one, trials, threads))


def cover_trials_csv(trials: Iterable[CoverTrial]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["gamma", "B", "A", "density", "confined_frac"])
    for t in trials:
        w.writerow([repr(t.gamma), t.B, t.A, f"{float(t.density):.6f}", f"{float(t.confined_frac):.6f}"])
    return buf.getvalue()


# --- greedy completion and local search ----------------------------------------

def _greedy_pad(inc: _Incidence, mask: np.ndarray, target: int) -> np.ndarray:
    """Add vertices until |A| = target, each time the one confining the most new edges.

    Ties go to the vertex completing more edges that then miss just one vertex,
    then to higher degree, then to the lowest id.
    """
    mask = mask.copy()
    missing = inc.missing(mask)
    mult = int(inc.degree.max(initial=0)) + 1
    size = int(mask.sum())
    while size < target:
        outside = ~mask[inc.flat]
        miss = missing[inc.edge_of]
        g1 = np.bincount(inc.flat[outside & (miss == 1)], minlength=inc.n)
        g2 = np.bincount(inc.flat[outside & (miss == 2)], minlength=inc.n)
        key = (g1 * mult + g2) * mult + inc.degree
        key[mask] = -1
        v = int(np.argmax(key))
        mask[v] = True
        missing[inc.vertex_edges(v)] -= 1
        size += 1
    return mask


def _local_swaps(inc: _Incidence, mask: np.ndarray, rounds: int, width: int = 8) -> np.ndarray:
    """Repeatedly apply the best improving swap among the ``width`` most promising (out, in) pairs."""
    mask = mask.copy()
    for _ in range(rounds):
        missing = inc.missing(mask)
        miss = missing[inc.edge_of]
        inside = mask[inc.flat]
        gain = np.bincount(inc.flat[~inside & (miss == 1)], minlength=inc.n)
        loss = np.bincount(inc.flat[inside & (miss == 0)], minlength=inc.n)
        outs = np.flatnonzero(~mask)
        ins = np.flatnonzero(mask)
        if not outs.size or not ins.size:
            break
        cand_v = outs[np.argsort(-gain[outs], kind="stable")[:width]]
        cand_u = ins[np.argsort(loss[ins], kind="stable")[:width]]
        best = (0, None)
        for u in cand_u.tolist():
            eu = set(inc.vertex_edges(u).tolist())
            for v in cand_v.tolist():
                ev = inc.vertex_edges(v)
                shared = sum(1 for e in ev.tolist() if e in eu and missing[e] == 1)
                delta = int(gain[v]) - shared - int(loss[u])
                if delta > best[0]:
                    best = (delta, (u, v))
        if best[1] is None:
            break
        u, v = best[1]
        mask[u] = False
        mask[v] = True
    return mask


# --- search -------------------------------------------------------------------

@dataclass
class SearchResult:
    A: tuple[int, ...]
    size: int
    density: Fraction
    confined: int
    confinement: Fraction
    trials: int
    accepted: int
    trace: list = field(default_factory=list)
    baseline: Fraction = Fraction(0)
    strategy: str = ""
    seed: int = 0
    gamma: Optional[float] = None

    def subset(self, n: int) -> VertexSubset:
        return VertexSubset(n, self.A)

    def to_json(self) -> dict:
        return {
            "A": list(self.A),
            "size": self.size,
            "density": str(self.density),
            "confined": self.confined,
            "confinement": str(self.confinement),
            "confinement_float": float(self.confinement),
            "trials": self.trials,
            "accepted": self.accepted,
            "trace": [[t, str(c)] for t, c in self.trace],
            "baseline": str(self.baseline),
            "baseline_float": float(self.baseline),
            "strategy": self.strategy,
            "seed": self.seed,
            "gamma": self.gamma,
        }


def uniform_baseline(H: Hypergraph, size: int) -> Fraction:
    """Expected confinement of a uniformly random ``size``-subset: mean over edges of C(size, |e|)/C(n, |e|)."""
    inc = _Incidence(H)
    sizes, counts = np.unique(inc.sizes, return_counts=True)
    total = sum(int(c) * Fraction(binom(size, int(k)), binom(H.n, int(k))) for k, c in zip(sizes, counts))
    return total / H.m


def _better(a: tuple[int, tuple], b: Optional[tuple[int, tuple]]) -> bool:
    # more confined edges first, then the lexicographically smaller set
    return b is None or a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def _key(inc: _Incidence, mask: np.ndarray) -> tuple[int, tuple]:
    return inc.confined(mask), tuple(np.flatnonzero(mask).tolist())


def sweep_gammas(gamma: float) -> list[float]:
    """33 values from gamma/2 to 3gamma/2 (capped at 1) around the profile gamma."""
    return [min(1.0, gamma * (0.5 + j / (SWEEP_POINTS - 1))) for j in range(SWEEP_POINTS)]


def search_worst_confined(H: Hypergraph, delta, budget: int = 64, seed: int = 0, strategy: str = "hybrid",
                          threads: int = 1, gamma: Optional[float] = None, gamma_sweep: bool = False,
                          swap_rounds: int = 200, exhaustive_limit: int = 10**6) -> SearchResult:
    """Look for a floor(delta n)-subset confining as many edges as possible.

    ``budget`` is the number of random cover restarts. ``hybrid`` runs the
    restarts and a greedy build from scratch, keeps the best and improves it by
    local swaps; when ``budget`` covers all C(n, floor(delta n)) subsets (and that
    is at most ``exhaustive_limit``) it enumerates them instead.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if budget < 1:
        raise BudgetZeroError("search budget must be at least 1")
    if H.m == 0:
        raise PreconditionError("search needs at least one edge")
    n = H.n
    target = density_size(delta, n)
    inc = _Incidence(H)
    baseline = uniform_baseline(H, target)
    trace: list = []
    best = None
    trials = accepted = 0
    used_gamma = None

    if strategy == "hybrid" and binom(n, target) <= min(budget, exhaustive_limit):
        from .oracle import exact_worst_confinement

        conf, A = exact_worst_confinement(H, Fraction(target, n), budget=binom(n, target))
        c = int(conf * H.m)
        return SearchResult(A, target, Fraction(target, n), c, Fraction(c, H.m), binom(n, target), binom(n, target),
                            [(0, Fraction(c, H.m))], baseline, strategy, int(seed), None)

    if strategy in ("cover-restarts", "hybrid"):
        prof = H.degree_profile
        if gamma is not None:
            used_gamma = float(gamma)
        elif prof.min_degree >= 1 and 0 < target < n:
            used_gamma = solve_gamma(prof, Fraction(target, n))
        else:
            # isolated vertices: solve on the non-isolated part
            live = [d for d in H.degrees.tolist() if d > 0]
            frac = min(Fraction(target, len(live)), Fraction(1)) if live else Fraction(0)
            used_gamma = solve_gamma(DegreeProfile.from_degrees(live), frac) if live and 0 < frac < 1 else float(frac)
        gammas = sweep_gammas(used_gamma) if gamma_sweep else [used_gamma]

        def one(i):
            g = gammas[i % len(gammas)]
            mask, _ = _cover_trial(inc, g, trial_rng(seed, i))
            if mask.sum() > target:
                return None
            return _key(inc, _greedy_pad(inc, mask, target))

        results = run_trials(one, budget, threads)
        trials += budget
        for i, res in enumerate(results):
            if res is None:
                continue
            accepted += 1
            if _better(res, best):
                best = res
                trace.append((i, Fraction(res[0], H.m)))

    if strategy in ("greedy", "hybrid") or best is None:
        res = _key(inc, _greedy_pad(inc, np.zeros(n, dtype=bool), target))
        trials += 1
        if _better(res, best):
            best = res
            trace.append((trials - 1, Fraction(res[0], H.m)))

    if strategy == "hybrid":
        mask = np.zeros(n, dtype=bool)
        mask[list(best[1])] = True
        res = _key(inc, _local_swaps(inc, mask, swap_rounds))
        if _better(res, best):
            best = res
            trace.append((trials, Fraction(res[0], H.m)))

    c, A = best
    return SearchResult(A, len(A), Fraction(len(A), n), c, Fraction(c, H.m), trials, accepted, trace, baseline,
                        strategy, int(seed), used_gamma)


# --- meeting probability --------------------------------------------------------

MAX_SETS = 20


def _miss_probability(x_size: int, union: int, mode: str, param) -> Fraction:
    if mode == "bernoulli":
        return (1 - param) ** union
    return Fraction(binom(x_size - union, param), binom(x_size, param))


def _check_mode(x_size: int, mode: str, param):
    if mode == "bernoulli":
        g = as_fraction(param)
        if not 0 <= g <= 1:
            raise PreconditionError("gamma must lie in [0, 1]")
        return g
    if mode == "uniform":
        m = int(param)
        if m != param or not 0 <= m <= x_size:
            raise PreconditionError(f"uniform mode needs an integer sample size in [0, {x_size}]")
        return m
    raise ValueError("mode must be 'bernoulli' or 'uniform'")


def meets_probability(x_size: int, sets: Sequence[Iterable], mode: str, param) -> Fraction:
    """Probability that a random B subset of X meets every A_i, by inclusion-exclusion over the sets missed.

    ``mode='bernoulli'``: each element of X is in B with probability ``param``.
    ``mode='uniform'``: B is a uniform subset of exactly ``param`` elements.
    Set elements are arbitrary labels; their union must fit in |X| = ``x_size``.
    """
    sets = [frozenset(a) for a in sets]
    t = len(sets)
    if t > MAX_SETS:
        raise TooManySetsError(f"inclusion-exclusion over {t} sets exceeds the limit {MAX_SETS}")
    labels = sorted(set().union(*sets), key=repr) if sets else []
    if len(labels) > x_size:
        raise PreconditionError("the sets use more elements than |X|")
    param = _check_mode(x_size, mode, param)
    pos = {x: i for i, x in enumerate(labels)}
    bits = [sum(1 << pos[x] for x in a) for a in sets]
    unions = [0] * (1 << t)
    total = Fraction(0)
    for S in range(1 << t):
        if S:
            low = S & -S
            unions[S] = unions[S ^ low] | bits[low.bit_length() - 1]
        sign = -1 if bin(S).count("1") % 2 else 1
        total += sign * _miss_probability(x_size, bin(unions[S]).count("1"), mode, param)
    return total
