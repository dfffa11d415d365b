"""Action of graph class vectors on polyvector fields, and checks of properties b), c), d).

For a labeled directed graph each edge ``(s, t)`` contracts an index between
an odd derivative at vertex ``s`` and an even derivative at vertex ``t``::

    sum_k  d/dtheta_k (at s)  (x)  d/dx^k (at t)

Edges act in list order; the odd derivative picks up the Koszul sign of
passing the slots before ``s``.  The vertex contents are then multiplied in
vertex order and the result is multiplied by ``(-1)^{sum_i (n-i)(|v_i|-1)}``.
With this global sign the symmetrized one-edge graph acts as the Schouten
bracket, and the action on symmetrized graphs is graded antisymmetric in the
shifted degrees.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import List, Optional, Sequence

from .graphs import DirectedGraph, UndirectedGraph
from .operad import expand_classes, from_classes
from .polyvector import (
    LinearVectorField,
    Polyvector,
    coordinate_vector_fields,
    linear_change,
    random_polyvector,
)
from .vectors import GraphVector


class ArityError(ValueError):
    pass


@lru_cache(maxsize=64)
def _labeled_terms(vec: GraphVector):
    if any(isinstance(g, UndirectedGraph) for g in vec):
        vec = expand_classes(vec)
    return tuple(from_classes(vec).items())


def vertex_count(vec: GraphVector) -> int:
    ns = {g.n for g in vec}
    if len(ns) != 1:
        raise ArityError(f"expected a vector homogeneous in vertex count, got {sorted(ns)}")
    return ns.pop()


def _act_graph(g: DirectedGraph, inputs: Sequence[Polyvector], degs: Sequence[int]) -> Polyvector:
    d = inputs[0].d
    n = g.n
    edges = g.edges
    acc = {}
    # theta-degree budget: each vertex must supply one theta per outgoing edge
    outdeg = [0] * n
    for s, _ in edges:
        outdeg[s - 1] += 1
    if any(outdeg[i] > degs[i] for i in range(n)):
        return Polyvector(d)

    def rec(a: int, state: List[Polyvector], cur: List[int], sign: int):
        if a == len(edges):
            prod = state[0].scale(sign)
            for p in state[1:]:
                prod = prod * p
            for k, c in prod.terms.items():
                acc[k] = acc.get(k, 0) + c
            return
        s, t = edges[a]
        s -= 1
        t -= 1
        koszul = -1 if sum(cur[:s]) % 2 else 1
        for k in range(1, d + 1):
            new = list(state)
            new[t] = new[t].diff_x(k)
            if not new[t]:
                continue
            new[s] = new[s].diff_theta(k)
            if not new[s]:
                continue
            nxt = list(cur)
            nxt[s] -= 1
            rec(a + 1, new, nxt, sign * koszul)

    rec(0, list(inputs), list(degs), 1)
    return Polyvector._normalized(d, acc)


def theta_action(vec: GraphVector, inputs: Sequence[Polyvector]) -> Polyvector:
    """Evaluate the operation attached to a class vector on ``n`` polyvector inputs."""
    if not inputs:
        raise ArityError("at least one input is required")
    n = vertex_count(vec)
    if len(inputs) != n:
        raise ArityError(f"graph vector has {n} vertices but {len(inputs)} inputs were given")
    d = inputs[0].d
    if any(v.d != d for v in inputs):
        raise ArityError("inputs have different dimensions")
    terms = _labeled_terms(vec)
    acc = {}
    parts = [list(v.homogeneous_parts().items()) for v in inputs]
    for combo in itertools.product(*parts):
        degs = [deg for deg, _ in combo]
        vs = [p for _, p in combo]
        eps = sum((n - 1 - i) * (degs[i] - 1) for i in range(n))
        sign = -1 if eps % 2 else 1
        for g, coef in terms:
            res = _act_graph(g, vs, degs)
            for k, c in res.terms.items():
                acc[k] = acc.get(k, 0) + sign * coef * c
    return Polyvector._normalized(d, acc)


# -- property checks -----------------------------------------------------------


@dataclass
class PropertyReport:
    name: str
    seed: Optional[int]
    trials: int = 0
    failures: List[str] = field(default_factory=list)
    #: trials in which the compared values were not both zero
    nonzero: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self):
        return {
            "name": self.name,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": list(self.failures),
            "nonzero": self.nonzero,
        }


def theta_degree_profile(rng, d: int, n: int, e: int) -> List[int]:
    """Input theta-degrees in 0..d whose sum lies in e..e+d, so the output can be nonzero."""
    while True:
        degs = [rng.randint(0, d) for _ in range(n)]
        if e <= sum(degs) <= e + d:
            return degs


def random_inputs(rng, d: int, n: int, e: int, max_order: int = 3, nterms: int = 5) -> List[Polyvector]:
    """Random homogeneous inputs with a theta-degree profile that is not excluded by counting."""
    out = []
    for k in theta_degree_profile(rng, d, n, e):
        while True:
            v = random_polyvector(rng, d, max_order=max_order, theta_degree=k, nterms=nterms)
            if v:
                out.append(v)
                break
    return out


def edge_count(vec: GraphVector) -> int:
    es = {g.e for g in vec}
    if len(es) != 1:
        raise ArityError(f"expected a vector homogeneous in edge count, got {sorted(es)}")
    return es.pop()


def check_vanishing_on_vectors(
    vec: GraphVector, d: int, trials: int = 10, seed: int = 0, max_order: int = 3
) -> PropertyReport:
    """Property c): the n-ary operation vanishes on vector fields (n > 1)."""
    n = vertex_count(vec)
    if n < 2:
        raise ArityError("property c) concerns operations with n > 1 inputs")
    rng = random.Random(seed)
    report = PropertyReport("vanishing_on_vector_fields", seed)
    tuples = []
    for _ in range(trials):
        tuples.append([random_polyvector(rng, d, max_order=max_order, theta_degree=1) for _ in range(n)])
    family = list(coordinate_vector_fields(d, max_order))
    for j in range(len(family)):
        tuples.append([family[(j + i) % len(family)] for i in range(n)])
    for vs in tuples:
        report.trials += 1
        res = theta_action(vec, vs)
        report.nonzero += bool(res)
        if res:
            report.failures.append(f"nonzero on {vs!r}: {res!r}")
    return report


def check_linear_vector_vanishing(
    vec: GraphVector, v: LinearVectorField, ws: Sequence[Polyvector]
) -> bool:
    """Property d): zero whenever one argument is a linear vector field, in every slot."""
    n = vertex_count(vec)
    if n < 2:
        raise ArityError("property d) needs n >= 2")
    if len(ws) != n - 1:
        raise ArityError(f"expected {n - 1} further inputs, got {len(ws)}")
    lv = v.polyvector()
    for slot in range(n):
        args = list(ws[:slot]) + [lv] + list(ws[slot:])
        if theta_action(vec, args):
            return False
    return True


def random_linear_field(rng, d: int, bound: int = 3) -> LinearVectorField:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(d)]
        if any(any(row) for row in m):
            return LinearVectorField(m)


def check_linear_vector_report(vec: GraphVector, d: int, trials: int = 10, seed: int = 0, max_order: int = 3) -> PropertyReport:
    """Property d) on seeded samples: a random linear vector field in every slot.

    The remaining inputs get theta-degrees for which the output is not forced
    to vanish by counting, so each trial is a genuine test.
    """
    n = vertex_count(vec)
    e = edge_count(vec)
    rng = random.Random(seed)
    report = PropertyReport("linear_vector_field_vanishing", seed)
    for _ in range(trials):
        v = random_linear_field(rng, d)
        while True:
            profile = theta_degree_profile(rng, d, n, e)
            if profile[0] == 1:
                break
        ws = []
        for k in profile[1:]:
            w = Polyvector(d)
            while not w:
                w = random_polyvector(rng, d, max_order=max_order, theta_degree=k, nterms=5)
            ws.append(w)
        report.trials += 1
        if not check_linear_vector_vanishing(vec, v, ws):
            report.failures.append(f"v={v.matrix} ws={ws!r}")
    return report


def random_invertible(rng, d: int, diagonal: bool = False, bound: int = 3) -> List[List[Fraction]]:
    import sympy

    while True:
        if diagonal:
            m = [[rng.choice([c for c in range(-bound, bound + 1) if c]) if i == j else 0 for j in range(d)] for i in range(d)]
        else:
            m = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(d)]
        if sympy.Matrix(m).det() != 0:
            return [[Fraction(c) for c in row] for row in m]


def check_gl_equivariance(
    vec: GraphVector,
    d: int,
    trials: int = 10,
    seed: int = 0,
    diagonal: bool = False,
    max_order: int = 3,
    transforms: Optional[Sequence] = None,
) -> PropertyReport:
    """Property b): acting commutes with linear changes of coordinates.

    Inputs are drawn with theta-degrees for which the output is not forced to
    vanish; ``report.nonzero`` counts trials with a nonzero result.
    """
    n = vertex_count(vec)
    e = edge_count(vec)
    rng = random.Random(seed)
    report = PropertyReport("gl_equivariance", seed)
    for trial in range(trials):
        t = transforms[trial] if transforms is not None else random_invertible(rng, d, diagonal)
        vs = random_inputs(rng, d, n, e, max_order=max_order)
        value = theta_action(vec, vs)
        lhs = theta_action(vec, [linear_change(v, t) for v in vs])
        rhs = linear_change(value, t)
        report.trials += 1
        report.nonzero += bool(value)
        if lhs != rhs:
            report.failures.append(f"T={[[str(c) for c in r] for r in t]} inputs={vs!r}")
    return report
