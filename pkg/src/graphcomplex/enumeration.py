"""Enumeration of nonzero graph classes in a fixed bidegree."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .graphs import DirectedGraph, UndirectedGraph, _canonical

MAX_VERTICES = 7
MAX_EDGES = 21


class ResourceLimitError(RuntimeError):
    """Requested slice is above the configured size bounds."""


@dataclass(frozen=True)
class Constraints:
    directed: bool = True
    connected: bool = False
    min_valency: int = 0
    allow_tadpoles: bool = True
    allow_parallel: bool = True
    biconnected: bool = False

    def accepts(self, g) -> bool:
        if self.connected and not g.is_connected():
            return False
        if self.min_valency and min(g.valencies()) < self.min_valency:
            return False
        if self.biconnected and not all(g.is_connected(removed=v) for v in range(1, g.n + 1)):
            return False
        return True


def _slots(n: int, c: Constraints) -> List[Tuple[int, int]]:
    if c.directed:
        slots = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    else:
        slots = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    if c.allow_tadpoles:
        slots += [(a, a) for a in range(1, n + 1)]
    return sorted(slots)


def _pair(edge):
    a, b = edge
    return (a, b) if a <= b else (b, a)


@lru_cache(maxsize=None)
def _classes(n: int, e: int, directed: bool, tadpoles: bool, parallel: bool) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Canonical edge sets of every isomorphism class, zero graphs included.

    Repeated edges are skipped: a graph with a repeated edge is zero and stays
    zero when edges are added, so no nonzero class is lost.
    """
    if e == 0:
        return ((),)
    c = Constraints(directed=directed, allow_tadpoles=tadpoles, allow_parallel=parallel)
    slots = _slots(n, c)
    found = set()
    for base in _classes(n, e - 1, directed, tadpoles, parallel):
        used = set(base)
        pairs = {_pair(x) for x in base}
        for slot in slots:
            if slot in used:
                continue
            if not parallel and slot[0] != slot[1] and _pair(slot) in pairs:
                continue
            key, _ = _canonical(n, tuple(sorted(base + (slot,))), directed)
            found.add(key)
    return tuple(sorted(found))


def enumerate_graphs(n: int, e: int, constraints: Constraints = Constraints(), max_vertices: int = MAX_VERTICES, max_edges: int = MAX_EDGES) -> list:
    """All nonzero canonical graphs with ``n`` vertices and ``e`` edges meeting ``constraints``.

    Returned in the deterministic canonical sort order.
    """
    if n < 1 or e < 0:
        raise ValueError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    if n > max_vertices or e > max_edges:
        raise ResourceLimitError(f"slice (n={n}, e={e}) exceeds bounds n<={max_vertices}, e<={max_edges}")
    c = constraints
    cls = DirectedGraph if c.directed else UndirectedGraph
    out = []
    for key in _classes(n, e, c.directed, c.allow_tadpoles, c.allow_parallel):
        _, sign = _canonical(n, key, c.directed)
        if sign == 0:
            continue
        g = cls(n, key)
        if c.accepts(g):
            out.append(g)
    return sorted(out)
