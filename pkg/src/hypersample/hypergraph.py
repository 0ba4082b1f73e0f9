"""Incidence-based hypergraphs and the structural operations everything else uses.

A hypergraph is stored as ``n`` (the number of vertices, ids ``0..n-1``) and an
ordered tuple of hyperedges, each a tuple of vertex ids. Duplicate hyperedges
are allowed and so are empty ones. Ordinary hypergraphs use set semantics
(no vertex twice in one edge); :class:`WalkHypergraph` keeps vertex
*sequences* in which a vertex may occur several times, and every count in this
module then runs over occurrences.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateVertexInEdgeError,
    EmptyEdgeSetError,
    IndexOutOfRangeError,
    InvalidHypergraphError,
    OutOfRangeVertexError,
)

__all__ = [
    "Hypergraph",
    "WalkHypergraph",
    "DegreeProfile",
    "VertexSubset",
    "HitDistribution",
    "validate",
    "dual",
    "edges_confined",
    "confinement",
    "vertices_covered",
    "hits_distribution",
    "to_text",
    "from_text",
    "read_hypergraph",
    "write_hypergraph",
]


@dataclass(frozen=True, eq=False)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]
    multiset: bool = field(default=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(int(v) for v in e) for e in self.edges))
        if int(self.n) != self.n or self.n < 1:
            raise InvalidHypergraphError(f"vertex count must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        for i, e in enumerate(self.edges):
            for v in e:
                if not 0 <= v < self.n:
                    raise OutOfRangeVertexError(f"edge {i} has vertex {v} outside [0, {self.n})")
            if not self.multiset and len(set(e)) != len(e):
                raise DuplicateVertexInEdgeError(f"edge {i} = {list(e)} repeats a vertex")

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.edges, self.multiset) == (other.n, other.edges, other.multiset)

    def __hash__(self):
        return hash((self.n, self.edges, self.multiset))

    # --- counts -----------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sizes(self) -> np.ndarray:
        return np.fromiter((len(e) for e in self.edges), dtype=np.int64, count=self.m)

    @property
    def incidences(self) -> int:
        return int(self.sizes.sum())

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self._flat, minlength=self.n).astype(np.int64)

    @property
    def avg_uniformity(self) -> Fraction:
        if self.m == 0:
            raise EmptyEdgeSetError("average uniformity of a hypergraph without edges")
        return Fraction(self.incidences, self.m)

    @property
    def avg_degree(self) -> Fraction:
        return Fraction(self.incidences, self.n)

    @property
    def sparsity(self) -> Fraction:
        return Fraction(self.m, self.n)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max())

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min())

    @property
    def max_uniformity(self) -> int:
        return int(self.sizes.max()) if self.m else 0

    @property
    def min_uniformity(self) -> int:
        return int(self.sizes.min()) if self.m else 0

    @property
    def uniformity(self) -> int | None:
        """The common edge size, or None if edges differ in size."""
        if self.m and self.min_uniformity == self.max_uniformity:
            return self.max_uniformity
        return None

    @property
    def is_regular(self) -> bool:
        # all-zero degrees do not count as regular
        return self.min_degree == self.max_degree > 0

    @cached_property
    def degree_profile(self) -> "DegreeProfile":
        return DegreeProfile.from_degrees(self.degrees.tolist())

    # --- incidence arrays ---------------------------------------------------
    @cached_property
    def _flat(self) -> np.ndarray:
        return np.fromiter((v for e in self.edges for v in e), dtype=np.int64, count=int(self.sizes.sum()))

    @cached_property
    def _edge_of(self) -> np.ndarray:
        return np.repeat(np.arange(self.m, dtype=np.int64), self.sizes)

    @cached_property
    def _vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def vertex_edges(self, v: int) -> tuple[int, ...]:
        """Indices of edges containing ``v``, one entry per occurrence."""
        return self._vertex_edges[v]

    def incidence_matrix(self, dtype=np.float64) -> np.ndarray:
        """Dense n x m matrix of occurrence counts."""
        mat = np.zeros((self.n, self.m), dtype=dtype)
        np.add.at(mat, (self._flat, self._edge_of), 1)
        return mat

    def hit_counts(self, mask: np.ndarray) -> np.ndarray:
        """Per-edge number of (occurrences of) vertices inside the boolean ``mask``."""
        inside = mask[self._flat]
        return np.bincount(self._edge_of[inside], minlength=self.m)

    def confined_mask(self, mask: np.ndarray) -> np.ndarray:
        return self.hit_counts(mask) == self.sizes

    def digest(self) -> str:
        return hashlib.sha256(to_text(self).encode()).hexdigest()


class WalkHypergraph(Hypergraph):
    """Hyperedges are vertex sequences of a common length ``k`` (repeats allowed)."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        super().__init__(n, tuple(edges), True)
        if self.m and self.min_uniformity != self.max_uniformity:
            raise InvalidHypergraphError("walk hypergraph edges must all have the same length")

    @property
    def k(self) -> int:
        return self.max_uniformity


@dataclass(frozen=True)
class DegreeProfile:
    """Distinct vertex degrees ``d_i`` (ascending) with the fraction ``u_i`` of vertices having them."""

    degrees: tuple[int, ...]
    fractions: tuple[Fraction, ...]

    @classmethod
    def from_degrees(cls, degs: Iterable[int]) -> "DegreeProfile":
        counts = Counter(int(d) for d in degs)
        total = sum(counts.values())
        ds = tuple(sorted(counts))
        return cls(ds, tuple(Fraction(counts[d], total) for d in ds))

    @classmethod
    def regular(cls, d: int) -> "DegreeProfile":
        return cls((int(d),), (Fraction(1),))

    @property
    def avg_degree(self) -> Fraction:
        return sum((u * d for d, u in zip(self.degrees, self.fractions)), Fraction(0))

    @property
    def min_degree(self) -> int:
        return self.degrees[0]

    def items(self):
        return zip(self.degrees, self.fractions)

    def to_json(self):
        return [{"degree": d, "fraction": str(u)} for d, u in self.items()]


class VertexSubset:
    """Immutable subset of ``range(n)`` backed by a read-only boolean mask."""

    __slots__ = ("n", "mask", "size")

    def __init__(self, n: int, members: Iterable[int] = ()):
        mask = np.zeros(n, dtype=bool)
        idx = np.fromiter(members, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= n):
            raise OutOfRangeVertexError(f"subset member outside [0, {n})")
        mask[idx] = True
        self._set(n, mask)

    def _set(self, n, mask):
        mask.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "size", int(mask.sum()))

    def __setattr__(self, name, value):
        raise AttributeError("VertexSubset is immutable")

    @classmethod
    def from_mask(cls, mask) -> "VertexSubset":
        obj = cls.__new__(cls)
        obj._set(len(mask), np.array(mask, dtype=bool, copy=True))
        return obj

    @classmethod
    def full(cls, n: int) -> "VertexSubset":
        return cls.from_mask(np.ones(n, dtype=bool))

    def indices(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(self.mask).tolist())

    @property
    def density(self) -> Fraction:
        return Fraction(self.size, self.n)

    def complement(self) -> "VertexSubset":
        return VertexSubset.from_mask(~self.mask)

    def union(self, other: "VertexSubset") -> "VertexSubset":
        return VertexSubset.from_mask(self.mask | other.mask)

    def issubset(self, other: "VertexSubset") -> bool:
        return not np.any(self.mask & ~other.mask)

    def __contains__(self, v) -> bool:
        return bool(self.mask[v])

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.indices())

    def __eq__(self, other):
        if not isinstance(other, VertexSubset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self):
        return hash((self.n, self.mask.tobytes()))

    def __repr__(self):
        return f"VertexSubset(n={self.n}, {list(self.indices())})"


def as_mask(H: Hypergraph, A) -> np.ndarray:
    """Boolean membership mask for A given as a VertexSubset, bool array or iterable of ids."""
    if isinstance(A, VertexSubset):
        if A.n != H.n:
            raise InvalidHypergraphError(f"subset over {A.n} vertices used with n={H.n}")
        return A.mask
    arr = np.asarray(A)
    if arr.dtype == bool:
        if arr.shape != (H.n,):
            raise InvalidHypergraphError("mask length does not match vertex count")
        return arr
    return VertexSubset(H.n, arr.astype(np.int64).ravel().tolist()).mask


@dataclass(frozen=True)
class HitDistribution:
    """Law of the number of hits |e ∩ A| of a uniformly random edge: ``counts[j]`` edges hit j times."""

    counts: tuple[int, ...]
    m: int

    def pmf(self):
        from .distributions import Pmf

        return Pmf(0, tuple(Fraction(c, self.m) for c in self.counts))

    def __getitem__(self, j) -> Fraction:
        if 0 <= j < len(self.counts):
            return Fraction(self.counts[j], self.m)
        return Fraction(0)


def validate(H: Hypergraph) -> dict:
    """Re-check all invariants of ``H`` and return its basic statistics.

    Raises OutOfRangeVertexError / DuplicateVertexInEdgeError on violations.
    """
    for i, e in enumerate(H.edges):
        if any(not 0 <= v < H.n for v in e):
            raise OutOfRangeVertexError(f"edge {i} has a vertex outside [0, {H.n})")
        if not H.multiset and len(set(e)) != len(e):
            raise DuplicateVertexInEdgeError(f"edge {i} repeats a vertex")
    incid = sum(len(e) for e in H.edges)
    if incid != int(H.degrees.sum()):
        raise InvalidHypergraphError("degree sum differs from incidence count")
    stats = {"n": H.n, "m": H.m, "incidences": incid, "r": Fraction(H.m, H.n), "d_bar": Fraction(incid, H.n)}
    if H.m:
        stats["k_bar"] = Fraction(incid, H.m)
        if stats["r"] * stats["k_bar"] != stats["d_bar"]:
            raise InvalidHypergraphError("handshake identity r * k_bar = d_bar fails")
    return stats


def dual(H: Hypergraph) -> Hypergraph:
    """Swap vertices and edges: vertex i of the dual is edge i of H, edge v lists the edges containing v."""
    if H.m == 0:
        raise EmptyEdgeSetError("dual of a hypergraph without edges has no vertices")
    return Hypergraph(H.m, tuple(H.vertex_edges(v) for v in range(H.n)), H.multiset)


def edges_confined(H: Hypergraph, A) -> int:
    """Number of edges with every vertex (occurrence) in A."""
    return int(np.count_nonzero(H.confined_mask(as_mask(H, A))))


def confinement(H: Hypergraph, A) -> Fraction:
    if H.m == 0:
        raise EmptyEdgeSetError("confinement probability needs at least one edge")
    return Fraction(edges_confined(H, A), H.m)


def vertices_covered(H: Hypergraph, B: Iterable[int]) -> VertexSubset:
    """Union of the vertex sets of the edges with indices in B."""
    mask = np.zeros(H.n, dtype=bool)
    for i in B:
        i = int(i)
        if not 0 <= i < H.m:
            raise IndexOutOfRangeError(f"edge index {i} outside [0, {H.m})")
        mask[list(H.edges[i])] = True
    return VertexSubset.from_mask(mask)


def hits_distribution(H: Hypergraph, A) -> HitDistribution:
    if H.m == 0:
        raise EmptyEdgeSetError("hit distribution needs at least one edge")
    hits = H.hit_counts(as_mask(H, A))
    counts = np.bincount(hits, minlength=H.max_uniformity + 1)
    return HitDistribution(tuple(int(c) for c in counts), H.m)


# --- text format -------------------------------------------------------------

def to_text(H: Hypergraph) -> str:
    lines = []
    if isinstance(H, WalkHypergraph):
        lines.append("# kind: walk")
    elif H.multiset:
        lines.append("# kind: multiset")
    lines.append(f"{H.n} {H.m}")
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    kind = "set"
    header = None
    edges: list[tuple[int, ...]] = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("kind:"):
                kind = body.split(":", 1)[1].strip()
            continue
        if header is None:
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InvalidHypergraphError(f"line {lineno}: expected 'n m' header")
            header = (int(parts[0]), int(parts[1]))
            continue
        if len(edges) == header[1]:
            if line.strip():
                raise InvalidHypergraphError(f"line {lineno}: more than {header[1]} edge lines")
            continue
        edges.append(tuple(int(t) for t in line.split()))
    if header is None:
        raise InvalidHypergraphError("missing 'n m' header")
    if len(edges) != header[1]:
        raise InvalidHypergraphError(f"header announces {header[1]} edges, found {len(edges)}")
    if kind == "walk":
        return WalkHypergraph(header[0], edges)
    return Hypergraph(header[0], tuple(edges), kind == "multiset")


def read_hypergraph(path) -> Hypergraph:
    return from_text(Path(path).read_text())


def write_hypergraph(H: Hypergraph, path) -> None:
    Path(path).write_text(to_text(H))
