"""Slow, independent reference implementations used only by the tests.

Each oracle is written from the definitions, without the shortcuts of the
library (no refinement cells, no insertion helpers, no sparse elimination).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from graphcomplex.graphs import DirectedGraph, UndirectedGraph


def parity(seq) -> int:
    """+1 or -1: sign of the permutation that sorts ``seq`` (distinct items)."""
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def _norm(edge, directed):
    a, b = edge
    return (a, b) if directed or a <= b else (b, a)


def sorted_form(edges, directed):
    """Sorted edge list and the sign of sorting; sign 0 on a repeated edge."""
    es = [_norm(e, directed) for e in edges]
    if len(set(es)) != len(es):
        return tuple(sorted(es)), 0
    return tuple(sorted(es)), parity(es)


def naive_canonical(g):
    """Minimum over all n! relabelings; sign 0 if an odd automorphism exists."""
    best = None
    signs = set()
    for perm in itertools.permutations(range(1, g.n + 1)):
        relabeled = [(perm[s - 1], perm[t - 1]) for s, t in g.edges]
        key, sign = sorted_form(relabeled, g.directed)
        if best is None or key < best:
            best, signs = key, {sign}
        elif key == best:
            signs.add(sign)
    sign = signs.pop() if len(signs) == 1 else 0
    return type(g)(g.n, best), sign


def all_slots(n, directed, tadpoles=True):
    if directed:
        slots = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    else:
        slots = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    if tadpoles:
        slots += [(a, a) for a in range(1, n + 1)]
    return slots


def _connected(n, edges, removed=0):
    verts = [v for v in range(1, n + 1) if v != removed]
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for a, b in edges:
        if removed in (a, b):
            continue
        adj[a].add(b)
        adj[b].add(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def brute_force_classes(n, e, directed, connected=False, min_valency=0, tadpoles=True, biconnected=False):
    """Generate every simple edge set, filter, reduce to canonical classes, drop zeros."""
    cls = DirectedGraph if directed else UndirectedGraph
    out = set()
    for edges in itertools.combinations(all_slots(n, directed, tadpoles), e):
        if connected and not _connected(n, edges):
            continue
        if min_valency:
            val = [0] * (n + 1)
            for a, b in edges:
                val[a] += 1
                val[b] += 1
            if min(val[1:]) < min_valency:
                continue
        if biconnected and not all(_connected(n, edges, v) for v in range(1, n + 1)):
            continue
        canon, sign = naive_canonical(cls(n, tuple(edges)))
        if sign:
            out.add(canon)
    return sorted(out, key=lambda g: g.edges)


# -- labeled vectors -------------------------------------------------------------


def add_labeled(acc, n, edges, coef, directed):
    key, sign = sorted_form(edges, directed)
    if sign:
        k = (n, key)
        acc[k] = acc.get(k, 0) + sign * Fraction(coef)
        if not acc[k]:
            del acc[k]


def symmetrized(g, coef=1):
    """Labeled dict {(n, edges): coef} of sum over all relabelings of ``g``."""
    acc = {}
    for perm in itertools.permutations(range(1, g.n + 1)):
        add_labeled(acc, g.n, [(perm[s - 1], perm[t - 1]) for s, t in g.edges], coef, g.directed)
    return acc


def labeled_of(vec):
    acc = {}
    for g, c in vec.items():
        for k, v in symmetrized(g, c).items():
            acc[k] = acc.get(k, 0) + v
            if not acc[k]:
                del acc[k]
    return acc


def circ_one(n, g_edges, k, h_edges, directed=True):
    """Labeled summands of g o_1 h: h on 1..k, g's vertex 1 replaced, others shifted by k-1."""
    def shift(v):
        return v + k - 1

    choices = []
    for s, t in g_edges:
        srcs = range(1, k + 1) if s == 1 else [shift(s)]
        tgts = range(1, k + 1) if t == 1 else [shift(t)]
        choices.append([(a, b) for a in srcs for b in tgts])
    for outer in itertools.product(*choices):
        yield list(outer) + list(h_edges)


def shuffle_pre_lie(a, b, directed=True):
    """Literal shuffle-sum product of symmetric labeled vectors.

    (a . b) = sum over (k, n-1)-shuffles sigma of sigma(a o_1 b); ``a`` and
    ``b`` are labeled dicts homogeneous in the vertex count.
    """
    acc = {}
    for (n, ge), ca in a.items():
        for (k, he), cb in b.items():
            total = n + k - 1
            for first in itertools.combinations(range(1, total + 1), k):
                rest = [v for v in range(1, total + 1) if v not in first]
                sigma = list(first) + rest
                for edges in circ_one(n, ge, k, he, directed):
                    relabeled = [(sigma[s - 1], sigma[t - 1]) for s, t in edges]
                    add_labeled(acc, total, relabeled, ca * cb, directed)
    return acc


# -- linear algebra --------------------------------------------------------------


def dense_rank(rows):
    return sympy.Matrix(rows).rank() if rows and rows[0] else 0


# -- vector fields ---------------------------------------------------------------


def lie_bracket_components(u, w, d):
    """[u, w]^i = u^j d_j w^i - w^j d_j u^i for vector fields given as sympy component lists."""
    xs = sympy.symbols(f"x1:{d + 1}")
    return [
        sympy.expand(sum(u[j] * sympy.diff(w[i], xs[j]) - w[j] * sympy.diff(u[i], xs[j]) for j in range(d)))
        for i in range(d)
    ]


def polyvector_components(v, d):
    """Components of a theta-degree-1 polyvector as sympy expressions."""
    xs = sympy.symbols(f"x1:{d + 1}")
    comps = [sympy.Integer(0)] * d
    for (exps, th), c in v.terms.items():
        assert len(th) == 1
        mono = sympy.Rational(c.numerator, c.denominator)
        for x, a in zip(xs, exps):
            mono *= x**a
        comps[th[0] - 1] += mono
    return [sympy.expand(c) for c in comps]
