"""Small k-uniform hypergraphs as colex-ordered edge bitmasks.

A k-graph on n <= 8 labeled vertices is stored as a single integer: bit i is
set exactly when the i-th k-subset of {0, ..., n-1} in colexicographic order
is an edge.  The canonical form of a graph is the integer-minimal mask over
all vertex relabelings, so isomorphism classes, cache files and report
orderings all share one stable total order.

Enumeration walks every labeled mask and deduplicates by canonical form.
The orbit minimization over all n! relabelings is vectorized with numpy so
the 2^20-mask space of 3-graphs on 6 vertices finishes in seconds.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

__all__ = [
    "MAX_VERTICES",
    "CanonicalCode",
    "Hypergraph",
    "LocalStats",
    "canonical_mask",
    "canonicalize",
    "clique_density",
    "colex_subsets",
    "disjoint_union",
    "enumerate_all",
    "has_no_empty_set",
    "induced_density",
    "local_stats",
    "nonedge_core_size",
    "read_hgr",
    "restriction_class_counts",
    "subset_rank",
    "write_hgr",
]

MAX_VERTICES = 8
# Full permutation action tables are cached up to 6 vertices (720 relabelings);
# 7 and 8 vertices fall back to a direct scan, fine for occasional use.
_TABLE_VERTEX_LIMIT = 6
_SPLIT_BITS = 10
_MAX_ENUM_BITS = 20

HGR_MAGIC = "HGR1"


@lru_cache(maxsize=None)
def colex_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {0..n-1} in colexicographic order (largest element
    decides first)."""
    if n < 0 or k < 0:
        raise ValueError("colex_subsets: need n, k >= 0")
    return tuple(sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1]))


def subset_rank(subset: Iterable[int]) -> int:
    """Colex rank of a subset: sum of C(v_i, i+1) over the sorted elements."""
    return sum(math.comb(v, i + 1) for i, v in enumerate(sorted(subset)))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-graph on labeled vertices {0..n-1}; edges is the colex
    bitmask."""

    n: int
    k: int
    edges: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"Hypergraph: need 0 <= n <= {MAX_VERTICES}, got n={self.n}")
        if self.k < 1:
            raise ValueError(f"Hypergraph: need k >= 1, got k={self.k}")
        if not 0 <= self.edges < (1 << self.nbits):
            raise ValueError("Hypergraph: edge mask out of range for (n, k)")

    @property
    def nbits(self) -> int:
        return math.comb(self.n, self.k)

    @classmethod
    def empty(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, 0)

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, (1 << math.comb(n, k)) - 1)

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        mask = 0
        for e in edges:
            e = tuple(sorted(e))
            if len(e) != k or len(set(e)) != k or not all(0 <= v < n for v in e):
                raise ValueError(f"from_edges: {e} is not a k-subset of the vertex set")
            mask |= 1 << subset_rank(e)
        return cls(n, k, mask)

    def edge_list(self) -> tuple[tuple[int, ...], ...]:
        subs = colex_subsets(self.n, self.k)
        return tuple(subs[i] for i in range(self.nbits) if (self.edges >> i) & 1)

    def edge_count(self) -> int:
        return self.edges.bit_count()

    def is_edge(self, verts: Iterable[int]) -> bool:
        verts = tuple(sorted(verts))
        if len(verts) != self.k:
            raise ValueError("is_edge: wrong subset size")
        return bool((self.edges >> subset_rank(verts)) & 1)

    def is_complete(self) -> bool:
        """True when every k-subset is an edge (vacuously true for n < k)."""
        return self.edges == (1 << self.nbits) - 1

    def restrict(self, verts: Iterable[int]) -> "Hypergraph":
        """Induced subgraph on `verts`, relabeled to 0..len-1 in sorted order."""
        verts = tuple(sorted(verts))
        mask = 0
        for i, sub in enumerate(colex_subsets(len(verts), self.k)):
            orig = tuple(verts[j] for j in sub)
            if (self.edges >> subset_rank(orig)) & 1:
                mask |= 1 << i
        return Hypergraph(len(verts), self.k, mask)

    def permuted(self, perm: Sequence[int]) -> "Hypergraph":
        """Relabel vertices: old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("permuted: not a permutation of the vertex set")
        mask = 0
        for e in self.edge_list():
            mask |= 1 << subset_rank(perm[v] for v in e)
        return Hypergraph(self.n, self.k, mask)


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    """Disjoint union with b's vertices shifted above a's."""
    if a.k != b.k:
        raise ValueError("disjoint_union: uniformities differ")
    n = a.n + b.n
    mask = 0
    for e in a.edge_list():
        mask |= 1 << subset_rank(e)
    for e in b.edge_list():
        mask |= 1 << subset_rank(v + a.n for v in e)
    return Hypergraph(n, a.k, mask)


class CanonicalCode(NamedTuple):
    """Isomorphism-class key: the relabeling-minimal edge mask plus (k, n)."""

    k: int
    n: int
    code: int


@lru_cache(maxsize=None)
def _perm_tables(n: int, k: int):
    """Per-permutation lookup tables mapping the low/high halves of an edge
    mask to their relabeled images.  split is the low-half bit count."""
    subsets = colex_subsets(n, k)
    nbits = len(subsets)
    perms = tuple(itertools.permutations(range(n)))
    img = np.zeros((len(perms), nbits), dtype=np.int64)
    for pi, p in enumerate(perms):
        for b, sub in enumerate(subsets):
            img[pi, b] = 1 << subset_rank(p[v] for v in sub)
    split = min(nbits, _SPLIT_BITS)
    lo_bitmat = (np.arange(1 << split, dtype=np.int64)[:, None] >> np.arange(split)) & 1
    hi_width = nbits - split
    hi_bitmat = (np.arange(1 << hi_width, dtype=np.int64)[:, None] >> np.arange(hi_width)) & 1
    lo_tab = (lo_bitmat @ img[:, :split].T).T  # (perms, 2^split)
    hi_tab = (hi_bitmat @ img[:, split:].T).T
    return split, lo_tab.tolist(), hi_tab.tolist()


def canonical_mask(G: Hypergraph) -> int:
    """Minimum edge mask over all vertex relabelings of G."""
    full = (1 << G.nbits) - 1
    if G.edges in (0, full):
        return G.edges
    if G.n <= _TABLE_VERTEX_LIMIT:
        split, lo_tab, hi_tab = _perm_tables(G.n, G.k)
        mlo = G.edges & ((1 << split) - 1)
        mhi = G.edges >> split
        return min(lo[mlo] | hi[mhi] for lo, hi in zip(lo_tab, hi_tab))
    edges = G.edge_list()
    best = G.edges
    for p in itertools.permutations(range(G.n)):
        m = 0
        for e in edges:
            m |= 1 << subset_rank(p[v] for v in e)
        if m < best:
            best = m
    return best


def canonicalize(G: Hypergraph) -> CanonicalCode:
    """Canonical code of G; equal codes characterize isomorphic graphs."""
    return CanonicalCode(G.k, G.n, canonical_mask(G))


@lru_cache(maxsize=None)
def _all_classes(n: int, k: int) -> tuple[Hypergraph, ...]:
    """One representative per isomorphism class, sorted by canonical mask.

    Walks all 2^C(n,k) labeled masks; for each relabeling the mask image is
    two table lookups, and a running numpy minimum over permutations yields
    every orbit minimum at once.
    """
    nbits = math.comb(n, k)
    if nbits == 0:
        return (Hypergraph(n, k, 0),)
    perms = tuple(itertools.permutations(range(n)))
    split, lo_tab, hi_tab = _perm_tables(n, k)
    lo_arr = np.asarray(lo_tab, dtype=np.int64)
    hi_arr = np.asarray(hi_tab, dtype=np.int64)
    masks = np.arange(1 << nbits, dtype=np.int64)
    mlo = masks & ((1 << split) - 1)
    mhi = masks >> split
    canon = masks.copy()
    for pi in range(1, len(perms)):  # perms[0] is the identity
        np.minimum(canon, lo_arr[pi][mlo] | hi_arr[pi][mhi], out=canon)
    reps = np.unique(canon)
    return tuple(Hypergraph(n, k, int(m)) for m in reps)


def enumerate_all(
    n: int, k: int, predicate: Optional[Callable[[Hypergraph], bool]] = None
) -> tuple[Hypergraph, ...]:
    """All isomorphism classes of k-graphs on n vertices, canonically ordered.

    Each representative's own edge mask is its canonical code.  The optional
    predicate filters classes after deduplication.  Guarded to C(n,k) <= 20
    so the labeled space stays within 2^20 masks.
    """
    nbits = math.comb(n, k)
    if nbits > _MAX_ENUM_BITS:
        raise ValueError(
            f"enumerate_all: C({n},{k}) = {nbits} exceeds the {_MAX_ENUM_BITS}-bit guard"
        )
    reps = _all_classes(n, k)
    if predicate is not None:
        reps = tuple(g for g in reps if predicate(g))
    return reps


@lru_cache(maxsize=None)
def restriction_class_counts(G: Hypergraph, size: int) -> dict[int, int]:
    """Counts of canonical masks over all induced size-subsets of G.

    Shared by every density computation; treat the returned dict as
    read-only.
    """
    if not 0 <= size <= G.n:
        raise ValueError("restriction_class_counts: size out of range")
    counts: dict[int, int] = {}
    for S in itertools.combinations(range(G.n), size):
        code = canonical_mask(G.restrict(S))
        counts[code] = counts.get(code, 0) + 1
    return counts


@lru_cache(maxsize=None)
def _subgraph_orbit(F: Hypergraph) -> frozenset[int]:
    """Distinct edge masks of all relabelings of F (for containment tests)."""
    return frozenset(
        F.permuted(p).edges for p in itertools.permutations(range(F.n))
    )


def induced_density(F: Hypergraph, G: Hypergraph, induced: bool = True) -> Fraction:
    """Density of F among the |F|-subsets of G.

    induced=True counts subsets whose induced subgraph is isomorphic to F;
    induced=False counts subsets containing a (not necessarily induced) copy
    of F.  The two agree when F is complete.
    """
    if F.k != G.k:
        raise ValueError("induced_density: uniformities differ")
    if F.n > G.n:
        raise ValueError("induced_density: F has more vertices than G")
    total = math.comb(G.n, F.n)
    if induced:
        hits = restriction_class_counts(G, F.n).get(canonical_mask(F), 0)
    else:
        orbit = _subgraph_orbit(F)
        hits = 0
        for S in itertools.combinations(range(G.n), F.n):
            mask = G.restrict(S).edges
            if any(om & ~mask == 0 for om in orbit):
                hits += 1
    return Fraction(hits, total)


def clique_density(G: Hypergraph, m: int) -> Fraction:
    """Density of complete m-sets in G; equals 1 for m < k (vacuous)."""
    return induced_density(Hypergraph.complete(m, G.k), G)


class LocalStats(NamedTuple):
    """Completeness statistics of one vertex subset S inside a host.

    q:  1 when S induces a complete subgraph (vacuously for |S| < k).
    l:  number of outside vertices v with S+v still complete.
    r:  l normalized by the number of outside vertices.
    rr: probability two distinct outside vertices both extend S completely.
    """

    q: int
    l: int
    r: Fraction
    rr: Fraction


def local_stats(G: Hypergraph, S: Iterable[int]) -> LocalStats:
    S = tuple(sorted(set(S)))
    if any(not 0 <= v < G.n for v in S):
        raise ValueError("local_stats: S is not a vertex subset")
    q = 1 if G.restrict(S).is_complete() else 0
    l = sum(
        1
        for v in range(G.n)
        if v not in S and G.restrict(S + (v,)).is_complete()
    )
    out = G.n - len(S)
    r = Fraction(l, out) if out >= 1 else Fraction(0)
    rr = Fraction(math.comb(l, 2), math.comb(out, 2)) if out >= 2 else Fraction(0)
    return LocalStats(q, l, r, rr)


def nonedge_core_size(H: Hypergraph) -> int:
    """Number of vertices common to every non-edge of H.

    Empty-family convention: a complete graph (no non-edges) returns n.
    Equivalently this counts the vertices whose removal leaves a complete
    graph, which is why the density of complete (n-1)-sets in H is this
    value divided by n.
    """
    core = set(range(H.n))
    found = False
    for i, sub in enumerate(colex_subsets(H.n, H.k)):
        if not (H.edges >> i) & 1:
            found = True
            core &= set(sub)
            if not core:
                return 0
    return H.n if not found else len(core)


@lru_cache(maxsize=None)
def _subset_edge_masks(n: int, size: int, k: int) -> tuple[int, ...]:
    """For each size-subset of {0..n-1}: mask of the k-subset bits inside it."""
    masks = []
    for S in itertools.combinations(range(n), size):
        m = 0
        for sub in itertools.combinations(S, k):
            m |= 1 << subset_rank(sub)
        masks.append(m)
    return tuple(masks)


def has_no_empty_set(G: Hypergraph, size: int) -> bool:
    """True when every size-subset of the vertices induces at least one edge."""
    if size > G.n:
        raise ValueError("has_no_empty_set: size exceeds the vertex count")
    if size < G.k:
        return False  # a set smaller than k can never induce an edge
    return all(G.edges & m for m in _subset_edge_masks(G.n, size, G.k))


def write_hgr(path: str, k: int, n: int, graphs: Sequence[Hypergraph], tag: str) -> None:
    """Write an HGR1 class file: header `HGR1 k n count tag`, then one
    lowercase-hex canonical mask per line, ascending (colex bit order, bit 0
    least significant).  Writes are exclusive-create-then-rename."""
    if any(g.k != k or g.n != n for g in graphs):
        raise ValueError("write_hgr: graph parameters disagree with header")
    codes = [g.edges for g in graphs]
    if codes != sorted(codes):
        raise ValueError("write_hgr: graphs must be in ascending canonical order")
    lines = [f"{HGR_MAGIC} {k} {n} {len(graphs)} {tag}\n"]
    lines.extend(f"{c:x}\n" for c in codes)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "x", encoding="ascii") as fh:
        fh.writelines(lines)
    os.replace(tmp, path)


def read_hgr(path: str) -> tuple[int, int, str, tuple[Hypergraph, ...]]:
    """Read an HGR1 class file; returns (k, n, tag, graphs)."""
    with open(path, encoding="ascii") as fh:
        header = fh.readline().split()
        if len(header) != 5 or header[0] != HGR_MAGIC:
            raise ValueError(f"read_hgr: bad header in {path}")
        k, n, count = int(header[1]), int(header[2]), int(header[3])
        tag = header[4]
        codes = [int(line, 16) for line in fh if line.strip()]
    if len(codes) != count:
        raise ValueError(f"read_hgr: expected {count} lines, found {len(codes)}")
    if codes != sorted(codes):
        raise ValueError("read_hgr: codes are not ascending")
    return k, n, tag, tuple(Hypergraph(n, k, c) for c in codes)
