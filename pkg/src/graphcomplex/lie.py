"""The dg Lie algebra structure on graph class vectors.

A class vector ``sum a_c [c]`` stands for ``sum a_c symmetrize(c)``.  For such
invariant elements the shuffle-sum product collapses to

    [g] . [h] = sum_i  g o_i h        (each summand reduced to its class),

with no factorial factors; ``tests/test_lie.py`` checks this against the
literal shuffle formula on labeled vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .graphs import DirectedGraph, Graph, UndirectedGraph, canonicalize, degree
from .operad import insert_terms
from .vectors import GraphVector

EDGE = DirectedGraph(2, ((1, 2),))
UEDGE = UndirectedGraph(2, ((1, 2),))

#: Maurer-Cartan element: the symmetrized one-edge graph (1->2) + (2->1).
MC_DIRECTED = GraphVector({EDGE: Fraction(1)})
#: The same element written with the undirected edge, whose symmetrization is 2 {1,2}.
MC_UNDIRECTED = GraphVector({UEDGE: Fraction(1, 2)})


def _graph_product(g: Graph, h: Graph) -> Dict[Graph, Fraction]:
    acc: Dict[Graph, Fraction] = {}
    for i in range(1, g.n + 1):
        for t in insert_terms(g, i, h):
            canon, sign = canonicalize(t)
            if sign:
                acc[canon] = acc.get(canon, 0) + sign
    return acc


def pre_lie(a: GraphVector, b: GraphVector) -> GraphVector:
    """Bilinear pre-Lie product of two class vectors."""
    acc: Dict[Graph, Fraction] = {}
    for g, cg in a.items():
        for h, ch in b.items():
            coef = cg * ch
            for t, c in _graph_product(g, h).items():
                acc[t] = acc.get(t, 0) + coef * c
    return GraphVector(acc)


def _parity_split(v: GraphVector) -> Dict[int, GraphVector]:
    parts: Dict[int, Dict] = {}
    for g, c in v.items():
        parts.setdefault(degree(g) % 2, {})[g] = c
    return {p: GraphVector(t) for p, t in parts.items()}


def bracket(a: GraphVector, b: GraphVector) -> GraphVector:
    """Graded commutator ``a.b - (-1)^{|a||b|} b.a``.

    Inhomogeneous arguments are split into even and odd parts; only the parity
    of the degree enters the sign.
    """
    out = GraphVector()
    for pa, xa in _parity_split(a).items():
        for pb, xb in _parity_split(b).items():
            sign = -1 if pa * pb % 2 else 1
            out = out + pre_lie(xa, xb) - sign * pre_lie(xb, xa)
    return out


def mc_element(directed: bool = True) -> GraphVector:
    return MC_DIRECTED if directed else MC_UNDIRECTED


def _is_directed(v: GraphVector) -> bool:
    for g in v:
        return g.directed
    return True


def differential(v: GraphVector, directed: Optional[bool] = None) -> GraphVector:
    """``d v = [MC, v]``; raises the bidegree by (1, 1) and the degree by 1."""
    if directed is None:
        directed = _is_directed(v)
    return bracket(mc_element(directed), v)


def mc_check() -> bool:
    return bracket(MC_DIRECTED, MC_DIRECTED) == GraphVector() and bracket(
        MC_UNDIRECTED, MC_UNDIRECTED
    ) == GraphVector()


def is_cocycle(v: GraphVector) -> bool:
    return not differential(v)


def graph_in_gc(g: Graph) -> bool:
    """Connected, no tadpoles, every valency >= 3, no cut vertex."""
    if g.has_tadpole() or not g.is_connected():
        return False
    if min(g.valencies()) < 3:
        return False
    return all(g.is_connected(removed=v) for v in range(1, g.n + 1))


def in_gc(v: GraphVector) -> bool:
    return all(graph_in_gc(g) for g in v)
