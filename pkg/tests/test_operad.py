import random

import pytest

from graphcomplex.checks import TETRAHEDRON, random_element, small_family
from graphcomplex.enumeration import Constraints, enumerate_graphs
from graphcomplex.graphs import DirectedGraph, GraphError, UndirectedGraph
from graphcomplex.lie import MC_DIRECTED, MC_UNDIRECTED, differential, pre_lie
from graphcomplex.operad import (
    classes_of,
    directed_expansion,
    expand_classes,
    from_classes,
    insert,
    insert_labeled,
    insert_terms,
    orientation_terms,
    symmetrize,
)
from graphcomplex.vectors import GraphVector

EDGE = DirectedGraph(2, ((1, 2),))
POINT = DirectedGraph(1, ())


def test_insert_examples():
    assert insert(EDGE, 1, POINT) == GraphVector({EDGE: 1})
    assert insert_labeled(EDGE, 2, POINT) == GraphVector({EDGE: 1})
    # the endpoint at vertex 1 reattaches to either vertex of the inner edge
    terms = insert_terms(EDGE, 1, EDGE)
    assert sorted(t.edges for t in terms) == [((1, 3), (1, 2)), ((2, 3), (1, 2))]
    # a vertex without incident edges: one summand, a disjoint splice
    g = DirectedGraph(3, ((1, 2),))
    assert insert_terms(g, 3, EDGE) == [DirectedGraph(4, ((1, 2), (3, 4)))]


def test_insert_errors():
    with pytest.raises(GraphError):
        insert_terms(EDGE, 3, POINT)
    with pytest.raises(TypeError):
        insert_terms(EDGE, 1, UndirectedGraph(1, ()))


def test_symmetrize_examples():
    assert symmetrize(POINT) == GraphVector({POINT: 1})
    assert symmetrize(EDGE) == GraphVector({EDGE: 1, DirectedGraph(2, ((2, 1),)): 1})
    assert not symmetrize(DirectedGraph(2, ((1, 2), (1, 2))))


def test_class_round_trip():
    for vec in small_family(3, 3):
        assert classes_of(from_classes(vec)) == vec


def test_directed_expansion_examples():
    uedge = UndirectedGraph(2, ((1, 2),))
    assert directed_expansion(uedge) == symmetrize(EDGE)
    assert orientation_terms(TETRAHEDRON) == 64
    assert len(directed_expansion(TETRAHEDRON)) == 64
    assert not expand_classes(GraphVector({UndirectedGraph(2, ((1, 2), (1, 2))): 1}))
    # the undirected MC element maps to the directed one
    assert expand_classes(MC_UNDIRECTED) == MC_DIRECTED


def _labeled_insert(x: GraphVector, i: int, y: GraphVector) -> GraphVector:
    out = GraphVector()
    for g, a in x.items():
        for h, b in y.items():
            out = out + (a * b) * insert_labeled(g, i, h)
    return out


def _graphs(n, e):
    return enumerate_graphs(n, e, Constraints(directed=True))


def test_sequential_associativity():
    fam = [g for n in (1, 2, 3) for e in (0, 1, 2) for g in _graphs(n, e)][:25]
    rng = random.Random(1)
    for _ in range(150):
        g, h, k = (rng.choice(fam) for _ in range(3))
        i = rng.randint(1, g.n)
        j = rng.randint(1, h.n)
        left = _labeled_insert(insert_labeled(g, i, h), i + j - 1, GraphVector.labeled([(k, 1)]))
        right = _labeled_insert(GraphVector.labeled([(g, 1)]), i, insert_labeled(h, j, k))
        assert left == right, (g, i, h, j, k)


def test_parallel_associativity_with_koszul_sign():
    fam = [g for n in (1, 2, 3) for e in (0, 1, 2) for g in _graphs(n, e)][:25]
    rng = random.Random(2)
    checked = 0
    while checked < 150:
        g, h, k = (rng.choice(fam) for _ in range(3))
        if g.n < 2:
            continue
        i, j = sorted(rng.sample(range(1, g.n + 1), 2))
        left = _labeled_insert(insert_labeled(g, j, h), i, GraphVector.labeled([(k, 1)]))
        right = _labeled_insert(insert_labeled(g, i, k), j + k.n - 1, GraphVector.labeled([(h, 1)]))
        sign = -1 if h.e * k.e % 2 else 1
        assert left == sign * right, (g, i, j, h, k)
        checked += 1


def _undirected_family():
    out = []
    for n in (1, 2, 3):
        for e in (0, 1, 2, 3):
            out += [GraphVector({g: 1}) for g in enumerate_graphs(n, e, Constraints(directed=False))]
    return out


def test_expansion_is_a_morphism_of_pre_lie_products():
    fam = _undirected_family()
    for a in fam:
        for b in fam:
            if a.bidegree[0] + b.bidegree[0] > 5:
                continue
            assert expand_classes(pre_lie(a, b)) == pre_lie(expand_classes(a), expand_classes(b)), (a, b)


def test_expansion_commutes_with_differential():
    for vec in _undirected_family():
        assert expand_classes(differential(vec)) == differential(expand_classes(vec))


def test_expansion_of_random_vectors_is_linear():
    rng = random.Random(3)
    for _ in range(20):
        a = GraphVector({g: rng.randint(-3, 3) for g in enumerate_graphs(3, 3, Constraints(directed=False))})
        b = GraphVector({g: rng.randint(-3, 3) for g in enumerate_graphs(3, 3, Constraints(directed=False))})
        assert expand_classes(a + b) == expand_classes(a) + expand_classes(b)
    assert random_element(rng, 3).bidegree[0] == 3
