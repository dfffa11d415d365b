"""Operadic structure on directed (dGra) and undirected (Gra) graphs."""

from __future__ import annotations

import itertools
from typing import List

from .graphs import (
    DirectedGraph,
    Graph,
    GraphError,
    UndirectedGraph,
    canonicalize,
)
from .vectors import GraphVector


def _endpoint_choices(g: Graph, i: int, k: int) -> List[list]:
    """For each edge of ``g``, the edges it can become when vertex ``i`` is replaced by ``k`` vertices."""
    inner = range(i, i + k)

    def shift(v):
        return v if v < i else v + k - 1

    choices = []
    for s, t in g.edges:
        if s != i and t != i:
            choices.append([(shift(s), shift(t))])
        elif s == i and t == i and not g.directed:
            # both ends of an undirected tadpole land on an unordered pair
            choices.append([(a, b) for a in inner for b in inner if a <= b])
        else:
            srcs = inner if s == i else [shift(s)]
            tgts = inner if t == i else [shift(t)]
            choices.append([(a, b) for a in srcs for b in tgts])
    return choices


def insert_terms(g: Graph, i: int, h: Graph) -> List[Graph]:
    """Labeled summands of ``g o_i h``, before any reduction.

    Vertices of ``h`` occupy positions ``i..i+k-1`` and the vertices of ``g``
    above ``i`` shift up by ``k-1``.  Edges of ``g`` come first, in order,
    followed by the edges of ``h``.
    """
    if type(g) is not type(h):
        raise TypeError("cannot insert a directed graph into an undirected one or vice versa")
    if not 1 <= i <= g.n:
        raise GraphError(f"insertion index {i} out of range 1..{g.n}")
    k = h.n
    inner_edges = tuple((a + i - 1, b + i - 1) for a, b in h.edges)
    cls = type(g)
    return [
        cls(g.n + k - 1, outer + inner_edges)
        for outer in itertools.product(*_endpoint_choices(g, i, k))
    ]


def insert(g: Graph, i: int, h: Graph) -> GraphVector:
    """``g o_i h`` with every summand reduced to its signed canonical class."""
    return GraphVector.from_graphs((t, 1) for t in insert_terms(g, i, h))


def insert_labeled(g: Graph, i: int, h: Graph) -> GraphVector:
    """``g o_i h`` as a labeled vector (vertex labels kept)."""
    return GraphVector.labeled((t, 1) for t in insert_terms(g, i, h))


def symmetrize(g: Graph) -> GraphVector:
    """Labeled vector ``sum over sigma in S_n of sigma(g)``; zero iff ``g`` is a zero graph."""
    return GraphVector.labeled(
        (g.relabel(p), 1) for p in itertools.permutations(range(1, g.n + 1))
    )


def classes_of(labeled: GraphVector) -> GraphVector:
    """Coordinates of an S_n-invariant labeled vector in the basis ``{symmetrize(c)}``.

    The coefficient of class ``c`` is the coefficient of the labeled graph ``c``
    divided by its coefficient in ``symmetrize(c)``.
    """
    seen = {}
    for g, _ in labeled.items():
        canon, sign = canonicalize(g)
        if sign and canon not in seen:
            seen[canon] = labeled[canon] / symmetrize(canon)[canon]
    return GraphVector(seen)


def from_classes(vec: GraphVector) -> GraphVector:
    """Expand a class vector into the labeled invariant vector it stands for."""
    out = GraphVector()
    for c, coef in vec.items():
        out = out + coef * symmetrize(c)
    return out


def directed_expansion(g: UndirectedGraph) -> GraphVector:
    """Labeled sum of all directed graphs that forget to ``g``.

    Edge order is inherited positionally; a tadpole has one orientation.
    """
    options = [[(a, b)] if a == b else [(a, b), (b, a)] for a, b in g.edges]
    return GraphVector.labeled(
        (DirectedGraph(g.n, tuple(choice)), 1) for choice in itertools.product(*options)
    )


def orientation_terms(g: UndirectedGraph) -> int:
    """Number of orientation choices before any merging."""
    return 2 ** sum(1 for a, b in g.edges if a != b)


def expand_classes(vec: GraphVector) -> GraphVector:
    """Image of an undirected class vector in the directed class basis."""
    items = []
    for g, coef in vec.items():
        if not isinstance(g, UndirectedGraph):
            raise TypeError(f"expected undirected classes, got {g}")
        options = [[(a, b)] if a == b else [(a, b), (b, a)] for a, b in g.edges]
        items.extend(
            (DirectedGraph(g.n, tuple(choice)), coef) for choice in itertools.product(*options)
        )
    return GraphVector.from_graphs(items)


def forget_directions(g: DirectedGraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, g.edges)

