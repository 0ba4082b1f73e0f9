"""Incidence rewiring that caps the maximum degree or the maximum edge size.

Vertex mode moves incidences away from overloaded vertices onto vertices below
the average degree; edge sizes never change. Edge mode moves vertices out of
oversized edges into edges below the average size; vertex degrees never change.
The two are mirror images under the dual.

All choices are deterministic: the most loaded vertex (edge) first with ties to
the lowest id, then its lowest-indexed edge (lowest-id vertex), then the
lowest-indexed receiver that is below average and would not get a duplicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DBelowCeilAvgError, KBelowCeilAvgError, NoDuplicateFreeTargetError
from .hypergraph import Hypergraph


@dataclass
class RewireLog:
    """``moves[i] = ((v, e), (u, e'))``: incidence (v, e) was replaced by (u, e')."""

    moves: list = field(default_factory=list)
    initial_excess: int = 0

    @property
    def count(self) -> int:
        return len(self.moves)

    def to_json(self) -> dict:
        return {"moves": len(self.moves), "initial_excess": self.initial_excess,
                "log": [[list(a), list(b)] for a, b in self.moves]}


def vertex_rewire(H: Hypergraph, D: int) -> tuple[Hypergraph, RewireLog, frozenset]:
    """Cap the maximum degree at D. Returns (H', log, V0) with V0 the vertices of degree > D in H."""
    avg = Fraction(H.incidences, H.n)
    if D < math.ceil(avg):
        raise DBelowCeilAvgError(f"D = {D} is below ceil(avg degree) = {math.ceil(avg)}")
    edges = [list(e) for e in H.edges]
    deg = H.degrees.astype(int).tolist()
    incident = [list(H.vertex_edges(v)) for v in range(H.n)]
    V0 = frozenset(v for v in range(H.n) if deg[v] > D)
    log = RewireLog(initial_excess=sum(d - D for d in deg if d > D))
    while True:
        v = max(range(H.n), key=lambda x: (deg[x], -x))
        if deg[v] <= D:
            break
        moved = False
        for e in sorted(set(incident[v])):
            members = edges[e]
            u = next((x for x in range(H.n) if deg[x] < avg and x not in members), None)
            if u is None:
                continue
            members[members.index(v)] = u
            incident[v].remove(e)
            incident[u].append(e)
            deg[v] -= 1
            deg[u] += 1
            log.moves.append(((v, e), (u, e)))
            moved = True
            break
        if not moved:
            raise NoDuplicateFreeTargetError(f"no below-average vertex can take an incidence of vertex {v}")
    return Hypergraph(H.n, edges, H.multiset), log, V0


def edge_rewire(H: Hypergraph, K: int) -> tuple[Hypergraph, RewireLog, frozenset]:
    """Cap the maximum edge size at K. Returns (H', log, E0) with E0 the edges of size > K in H."""
    avg = Fraction(H.incidences, H.m)
    if K < math.ceil(avg):
        raise KBelowCeilAvgError(f"K = {K} is below ceil(avg uniformity) = {math.ceil(avg)}")
    edges = [list(e) for e in H.edges]
    E0 = frozenset(i for i, e in enumerate(edges) if len(e) > K)
    log = RewireLog(initial_excess=sum(len(e) - K for e in edges if len(e) > K))
    while True:
        e = max(range(H.m), key=lambda i: (len(edges[i]), -i))
        if len(edges[e]) <= K:
            break
        moved = False
        for v in sorted(set(edges[e])):
            target = next((j for j in range(H.m) if len(edges[j]) < avg and v not in edges[j]), None)
            if target is None:
                continue
            edges[e].remove(v)
            edges[target].append(v)
            log.moves.append(((v, e), (v, target)))
            moved = True
            break
        if not moved:
            raise NoDuplicateFreeTargetError(f"no below-average edge can take a vertex of edge {e}")
    return Hypergraph(H.n, edges, H.multiset), log, E0


def incidence_multiset(H: Hypergraph) -> list[tuple[int, int]]:
    """Sorted (vertex, edge) pairs, one per occurrence."""
    return sorted((v, i) for i, e in enumerate(H.edges) for v in e)
