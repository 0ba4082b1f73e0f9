"""Brute-force ground truth on small instances, in exact rational arithmetic.

Everything here enumerates: all subsets of a given size for confinement and
typical statistics, all subsets of the ground set for meeting probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .distributions import binom, binomial_pmf, hypergeometric_pmf
from .enumeration import DEFAULT_BUDGET, hit_count_rows, subset_hits
from .errors import BudgetExceededError, EmptyEdgeSetError, PreconditionError
from .hypergraph import Hypergraph, dual
from .sampling import as_fraction, density_size

MAX_GROUND = 14


def exact_worst_confinement(H: Hypergraph, delta, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, tuple[int, ...]]:
    """Largest confinement over all floor(delta n)-subsets and the lexicographically first subset attaining it."""
    if H.m == 0:
        raise EmptyEdgeSetError("confinement needs at least one edge")
    s = density_size(delta, H.n)
    best, arg = -1, ()
    for combos, hits in subset_hits(H, s, budget):
        conf = np.count_nonzero(hits == H.sizes, axis=1)
        i = int(np.argmax(conf))
        if conf[i] > best:
            best, arg = int(conf[i]), tuple(combos[i].tolist())
    return Fraction(best, H.m), arg


@dataclass(frozen=True)
class TypicalRecord:
    subset: tuple[int, ...]
    confinement: Fraction
    tv_to_hyp: Optional[Fraction]
    tv_to_bin: Optional[Fraction]
    counts: tuple[int, ...]


def exact_typical_stats(H: Hypergraph, p, budget: int = DEFAULT_BUDGET) -> Iterator[TypicalRecord]:
    """One record per floor(pn)-subset, in lexicographic order. TV fields are None unless H is uniform."""
    if H.m == 0:
        raise EmptyEdgeSetError("typical statistics need at least one edge")
    n, m = H.n, H.m
    s = density_size(p, n)
    k = H.uniformity
    kmax = H.max_uniformity
    hyp = bino = None
    if k is not None:
        hyp = hypergeometric_pmf(k, s, n).values
        bino = binomial_pmf(k, Fraction(s, n)).values
    for combos, hits in subset_hits(H, s, budget):
        confined = np.count_nonzero(hits == H.sizes, axis=1)
        rows = hit_count_rows(hits, kmax)
        for A, c, row in zip(combos.tolist(), confined.tolist(), rows.tolist()):
            counts = tuple(row)
            tvh = tvb = None
            if k is not None:
                freq = [Fraction(x, m) for x in counts]
                tvh = sum((abs(a - b) for a, b in zip(freq, hyp)), Fraction(0)) / 2
                tvb = sum((abs(a - b) for a, b in zip(freq, bino)), Fraction(0)) / 2
            yield TypicalRecord(tuple(A), Fraction(c, m), tvh, tvb, counts)


def exact_moments(H: Hypergraph, p, r: int, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, Fraction]:
    """Exact mean and variance over all floor(pn)-subsets A of the fraction of edges meeting A in exactly r vertices."""
    s = density_size(p, H.n)
    tot = sq = Fraction(0)
    cnt = 0
    for _, hits in subset_hits(H, s, budget):
        vals = np.count_nonzero(hits == r, axis=1).tolist()
        for v in vals:
            tot += v
            sq += v * v
        cnt += len(vals)
    mean = tot / (cnt * H.m)
    return mean, sq / (cnt * H.m * H.m) - mean * mean


def brute_meets_probability(x_size: int, sets: Sequence[Iterable], mode: str, param) -> Fraction:
    """Meeting probability by summing over all 2^|X| subsets B of X (|X| <= 14)."""
    if x_size > MAX_GROUND:
        raise PreconditionError(f"|X| = {x_size} exceeds the brute-force limit {MAX_GROUND}")
    sets = [frozenset(a) for a in sets]
    labels = sorted(set().union(*sets), key=repr) if sets else []
    if len(labels) > x_size:
        raise PreconditionError("the sets use more elements than |X|")
    pos = {x: i for i, x in enumerate(labels)}
    bits = [sum(1 << pos[x] for x in a) for a in sets]
    if mode == "bernoulli":
        g = as_fraction(param)
        weight = lambda size: g**size * (1 - g) ** (x_size - size)  # noqa: E731
    elif mode == "uniform":
        total = binom(x_size, int(param))
        weight = lambda size: Fraction(1, total) if size == param else Fraction(0)  # noqa: E731
    else:
        raise ValueError("mode must be 'bernoulli' or 'uniform'")
    out = Fraction(0)
    for B in range(1 << x_size):
        if all(B & b for b in bits):
            out += weight(bin(B).count("1"))
    return out


def exact_dual_worst_confinement(H: Hypergraph, density, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, tuple[int, ...]]:
    """exact_worst_confinement(dual(H), density), computed from the vertex side of H.

    A dual edge (vertex v of H) is confined to a set S of H-edges iff every edge at v
    lies in S. So the best S of size s confines max{|U| : |E(U)| <= s} dual edges,
    where E(U) is the set of edges touching U. This enumerates the 2^n vertex sets U
    instead of the C(m, s) edge sets, which is what makes n <= 10 with many edges cheap.
    Returns the confinement and the lexicographically first optimal S (padded with
    the lowest unused edge indices).
    """
    if H.m == 0:
        raise EmptyEdgeSetError("the dual needs at least one edge")
    s = density_size(density, H.m)
    if (1 << H.n) > budget:
        raise BudgetExceededError(f"2^{H.n} vertex sets exceed the enumeration budget {budget}")
    touch = [0] * H.n
    for i, e in enumerate(H.edges):
        for v in e:
            touch[v] |= 1 << i
    best_u, best_S = -1, None
    for U in range(1 << H.n):
        mask = 0
        size = 0
        rest = U
        while rest:
            low = rest & -rest
            mask |= touch[low.bit_length() - 1]
            size += 1
            rest ^= low
        if bin(mask).count("1") > s or size < best_u:
            continue
        chosen = [i for i in range(H.m) if mask >> i & 1]
        extra = [i for i in range(H.m) if not mask >> i & 1][: s - len(chosen)]
        S = tuple(sorted(chosen + extra))
        # padding may confine further dual edges; count them on the padded set
        full = sum(1 for v in range(H.n) if touch[v] & ~sum(1 << i for i in S) == 0)
        if full > best_u or (full == best_u and S < best_S):
            best_u, best_S = full, S
    return Fraction(best_u, H.n), best_S


def duality_check(H: Hypergraph, eps_prime, p, budget: int = DEFAULT_BUDGET) -> tuple[bool, Optional[dict]]:
    """If H is an (eps, p)-confiner with eps < eps', its dual must be a (1-p, 1-eps')-confiner.

    Here eps is the exact worst confinement of H at density p; the implication
    is vacuous when eps >= eps'. Returns (holds, witness) with the witness
    describing the violating dual set, or None.
    """
    eps_prime = as_fraction(eps_prime)
    p = as_fraction(p)
    if H.m == 0:
        return True, None
    eps, _ = exact_worst_confinement(H, p, budget)
    if not eps < eps_prime:
        return True, None
    # the dual lives on m vertices; sets of density 1 - eps' there
    if binom(H.m, density_size(1 - eps_prime, H.m)) <= (1 << H.n):
        dual_eps, arg = exact_worst_confinement(dual(H), 1 - eps_prime, budget)
    else:
        dual_eps, arg = exact_dual_worst_confinement(H, 1 - eps_prime, budget)
    if dual_eps <= 1 - p:
        return True, None
    return False, {"eps": str(eps), "eps_prime": str(eps_prime), "p": str(p), "dual_confinement": str(dual_eps), "dual_set": list(arg)}


def duality_grid(H: Hypergraph, ps: Sequence, eps_primes: Sequence, budget: int = DEFAULT_BUDGET) -> list[dict]:
    """Run duality_check on every (p, eps') pair; returns the failures."""
    fails = []
    for p, e in product(ps, eps_primes):
        ok, wit = duality_check(H, e, p, budget)
        if not ok:
            fails.append(wit)
    return fails
