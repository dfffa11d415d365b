"""Labeled graphs with a totally ordered edge set, and their signed canonical forms.

Vertices are labeled ``1..n``.  Two edge lists that differ by a permutation of
edges represent the same element up to the sign of that permutation, so every
normal form here carries a sign.  A graph admitting an automorphism that
permutes its edges oddly is equal to its own negative and hence vanishes; its
canonical sign is 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Malformed graph data (bad vertex index, size mismatch, ...)."""


def permutation_parity(perm: Sequence[int]) -> int:
    """Return +1 for an even permutation of ``range(len(perm))``, -1 for odd."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        j = start
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_with_sign(items: Sequence) -> Tuple[tuple, int]:
    """Sort ``items`` and return ``(sorted_tuple, parity of the sorting permutation)``.

    Equal items make the parity ill-defined; callers deal with duplicates first.
    """
    order = sorted(range(len(items)), key=items.__getitem__)
    return tuple(items[i] for i in order), permutation_parity(order)


class _GraphBase:
    n: int
    edges: Tuple[Edge, ...]
    directed: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        edges = tuple(self._norm(tuple(e)) for e in self.edges)
        for s, t in edges:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise GraphError(f"edge ({s},{t}) has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @staticmethod
    def _norm(edge: Edge) -> Edge:
        return edge

    @property
    def e(self) -> int:
        return len(self.edges)

    def valencies(self) -> list:
        """Valency of each vertex (index 0 is vertex 1); a tadpole counts 2."""
        val = [0] * self.n
        for s, t in self.edges:
            val[s - 1] += 1
            val[t - 1] += 1
        return val

    def has_tadpole(self) -> bool:
        return any(s == t for s, t in self.edges)

    def has_duplicate_edge(self) -> bool:
        return len(set(self.edges)) != len(self.edges)

    def relabel(self, perm: Sequence[int]):
        """Send vertex ``v`` to ``perm[v-1]`` (1-based images), keeping the edge order."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise GraphError(f"not a permutation of 1..{self.n}: {list(perm)}")
        return type(self)(self.n, tuple((perm[s - 1], perm[t - 1]) for s, t in self.edges))

    def reorder(self, order: Sequence[int]):
        """Edge list ``[edges[i] for i in order]`` (0-based positions); no sign attached."""
        return type(self)(self.n, tuple(self.edges[i] for i in order))

    def is_connected(self, removed: int = 0) -> bool:
        """Connectivity of the underlying undirected graph, optionally with one vertex deleted."""
        verts = [v for v in range(1, self.n + 1) if v != removed]
        if len(verts) <= 1:
            return True
        adj = {v: set() for v in verts}
        for s, t in self.edges:
            if s != removed and t != removed:
                adj[s].add(t)
                adj[t].add(s)
        stack, seen = [verts[0]], {verts[0]}
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def sort_key(self):
        return (self.n, len(self.edges), self.edges)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True)
class DirectedGraph(_GraphBase):
    """Directed multigraph on vertices ``1..n``; ``edges`` is ordered (source, target) pairs."""

    n: int
    edges: Tuple[Edge, ...] = ()

    directed = True

    def __str__(self):
        return f"n={self.n} edges=" + "".join(f"({s},{t})" for s, t in self.edges)


@dataclass(frozen=True)
class UndirectedGraph(_GraphBase):
    """Undirected multigraph; each edge is stored as ``(a, b)`` with ``a <= b``."""

    n: int
    edges: Tuple[Edge, ...] = ()

    directed = False

    @staticmethod
    def _norm(edge: Edge) -> Edge:
        a, b = edge
        return (a, b) if a <= b else (b, a)

    def __str__(self):
        return f"n={self.n} uedges=" + "".join("{%d,%d}" % e for e in self.edges)


Graph = Union[DirectedGraph, UndirectedGraph]


@dataclass(frozen=True)
class SignedCanonicalGraph:
    graph: Graph
    sign: int

    def __iter__(self):
        return iter((self.graph, self.sign))


def degree(g: Graph, convention: str = "dfGC") -> int:
    """Cohomological degree: ``-e`` in dGra, ``2n - 2 - e`` after the dfGC suspension."""
    if convention == "dGra":
        return -g.e
    if convention == "dfGC":
        return 2 * g.n - 2 - g.e
    raise ValueError(f"unknown degree convention {convention!r}")


def vertex_permute(g: Graph, sigma: Sequence[int]) -> Graph:
    if len(sigma) != g.n:
        raise GraphError(f"permutation of size {len(sigma)} applied to a graph with {g.n} vertices")
    return g.relabel(sigma)


# -- canonical forms ----------------------------------------------------------


def _vertex_cells(n: int, edges: Tuple[Edge, ...], directed: bool) -> list:
    """Partition the vertices into isomorphism-invariant, ordered cells (colour refinement)."""
    colour = [0] * (n + 1)
    out_nb = [[] for _ in range(n + 1)]
    in_nb = [[] for _ in range(n + 1)]
    loops = [0] * (n + 1)
    for s, t in edges:
        if s == t:
            loops[s] += 1
        else:
            out_nb[s].append(t)
            in_nb[t].append(s)
    if not directed:
        for v in range(1, n + 1):
            out_nb[v] = out_nb[v] + in_nb[v]
            in_nb[v] = []
    # negated so that loop-heavy, out-heavy vertices receive the smallest labels
    sig = [None] + [(-loops[v], -len(out_nb[v]), -len(in_nb[v])) for v in range(1, n + 1)]
    ncols = 0
    while True:
        ranks = {c: i for i, c in enumerate(sorted(set(sig[1:])))}
        colour = [0] + [ranks[sig[v]] for v in range(1, n + 1)]
        if len(ranks) == ncols:
            break
        ncols = len(ranks)
        sig = [None] + [
            (
                colour[v],
                tuple(sorted(colour[w] for w in out_nb[v])),
                tuple(sorted(colour[w] for w in in_nb[v])),
            )
            for v in range(1, n + 1)
        ]
    cells = [[] for _ in range(ncols)]
    for v in range(1, n + 1):
        cells[colour[v]].append(v)
    return cells


@lru_cache(maxsize=1 << 18)
def _canonical(n: int, edges: Tuple[Edge, ...], directed: bool) -> Tuple[Tuple[Edge, ...], int]:
    cells = _vertex_cells(n, edges, directed)
    offsets = []
    pos = 1
    for cell in cells:
        offsets.append(pos)
        pos += len(cell)
    best = None
    parity = 0
    label = [0] * (n + 1)
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        for off, cell in zip(offsets, choice):
            for k, v in enumerate(cell):
                label[v] = off + k
        if directed:
            new = [(label[s], label[t]) for s, t in edges]
        else:
            new = [(label[s], label[t]) if label[s] <= label[t] else (label[t], label[s]) for s, t in edges]
        key, sgn = sort_with_sign(new)
        if best is None or key < best:
            best, parity = key, sgn
        elif key == best and sgn != parity:
            parity = 0
    if len(set(best)) != len(best):
        parity = 0
    return best, parity


def canonicalize(g: Graph) -> SignedCanonicalGraph:
    """Canonical representative of ``g`` with the sign relating them.

    ``g`` equals ``sign * canonical`` in the quotient by vertex relabelings and
    signed edge reorderings; ``sign == 0`` exactly when ``g`` is a zero graph.
    """
    key, sign = _canonical(g.n, g.edges, g.directed)
    return SignedCanonicalGraph(type(g)(g.n, key), sign)


def is_zero_graph(g: Graph) -> bool:
    return canonicalize(g).sign == 0


def labeled_normal_form(g: Graph) -> Tuple[Graph, int]:
    """Sort the edge list keeping vertex labels; sign 0 if an edge is repeated."""
    key, sign = sort_with_sign(list(g.edges))
    if len(set(key)) != len(key):
        sign = 0
    return type(g)(g.n, key), sign


def make_graph(n: int, edges: Iterable, directed: bool = True) -> Graph:
    cls = DirectedGraph if directed else UndirectedGraph
    return cls(n, tuple(tuple(e) for e in edges))
