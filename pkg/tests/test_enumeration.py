import pytest

from graphcomplex.checks import TETRAHEDRON
from graphcomplex.enumeration import Constraints, ResourceLimitError, enumerate_graphs
from graphcomplex.graphs import canonicalize
from oracles import brute_force_classes, naive_canonical


def test_examples():
    assert len(enumerate_graphs(2, 1, Constraints(directed=True, allow_tadpoles=False))) == 1
    assert enumerate_graphs(3, 5, Constraints(directed=False, allow_tadpoles=False, min_valency=3)) == []
    k4 = enumerate_graphs(
        4, 6, Constraints(directed=False, allow_tadpoles=False, allow_parallel=False, min_valency=3, connected=True)
    )
    assert k4 == [canonicalize(TETRAHEDRON).graph]


def test_resource_limits():
    with pytest.raises(ResourceLimitError):
        enumerate_graphs(8, 3, Constraints())
    with pytest.raises(ResourceLimitError):
        enumerate_graphs(3, 4, Constraints(), max_edges=3)


def _key(graphs):
    """Classes as the oracle's representatives, so the two canonical forms can differ."""
    return sorted(naive_canonical(g)[0].edges for g in graphs)


@pytest.mark.parametrize("directed", [True, False])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_brute_force(n, directed):
    for e in range(0, 7):
        got = enumerate_graphs(n, e, Constraints(directed=directed))
        assert _key(got) == _key(brute_force_classes(n, e, directed)), (n, e)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_gc_constraints_match_brute_force(n):
    c = Constraints(directed=False, connected=True, min_valency=3, allow_tadpoles=False, allow_parallel=False, biconnected=True)
    for e in range(0, n * (n - 1) // 2 + 1):
        got = enumerate_graphs(n, e, c)
        ref = brute_force_classes(n, e, False, connected=True, min_valency=3, tadpoles=False, biconnected=True)
        assert _key(got) == _key(ref), (n, e)


def test_output_is_sorted_and_canonical():
    gs = enumerate_graphs(3, 3, Constraints(directed=True))
    assert gs == sorted(gs)
    assert all(tuple(canonicalize(g)) == (g, 1) for g in gs)
