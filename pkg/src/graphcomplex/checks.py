"""Verification routines shared by ``gc selftest`` and the acceptance suite.

Each ``check_*`` function returns a :class:`CheckResult`; none of them raise on
a failed identity.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Sequence, Tuple

from .action import theta_action
from .cohomology import check_d_squared, slice_basis
from .enumeration import Constraints, enumerate_graphs
from .graphs import DirectedGraph, UndirectedGraph
from .lie import MC_DIRECTED, MC_UNDIRECTED, bracket, differential, mc_check, pre_lie
from .polyvector import Polyvector, random_polyvector, schouten
from .vectors import GraphVector

TETRAHEDRON = UndirectedGraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
PENTAGON = UndirectedGraph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
HEXAGON = UndirectedGraph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)))
TADPOLE = UndirectedGraph(1, ((1, 1),))
#: the four-vertex directed graph with edge order (3,1) < (3,2) < (2,3) < (2,2)
SAMPLE_DIGRAPH = DirectedGraph(4, ((3, 1), (3, 2), (2, 3), (2, 2)))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self, timing: bool = False) -> str:
        mark = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.seconds:.1f}s)" if timing else ""
        return f"[{mark}] {self.name}: {self.detail}{suffix}"

    def as_dict(self, timing: bool = False):
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        if self.data:
            out["data"] = self.data
        return out


def timed(name: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -- graph complex ------------------------------------------------------------------


def check_mc() -> CheckResult:
    def run():
        d = bracket(MC_DIRECTED, MC_DIRECTED)
        u = bracket(MC_UNDIRECTED, MC_UNDIRECTED)
        return mc_check() and not d and not u, f"[MC,MC] has {len(d)} directed / {len(u)} undirected terms"

    return timed("maurer_cartan", run)


def d_squared_slices(flavor: str, max_n: int) -> List[Tuple[int, int]]:
    """Source bidegrees (n, e) such that (n, e), (n+1, e+1), (n+2, e+2) all have n <= max_n."""
    out = []
    for n in range(1, max_n - 1):
        for e in range(0, _max_edges(flavor, n) + 1):
            if slice_basis(flavor, n, e).basis:
                out.append((n, e))
    return out


def _max_edges(flavor: str, n: int) -> int:
    if flavor == "dfGC":
        return n * (n - 1) + n
    if flavor == "fGC":
        return n * (n - 1) // 2 + n
    return n * (n - 1) // 2


def check_d_squared_matrices(flavor: str, max_n: int, cache=None, jobs: int = 1) -> CheckResult:
    def run():
        pairs = d_squared_slices(flavor, max_n)
        bad = [p for p in pairs if not check_d_squared(flavor, *p, cache=cache, jobs=jobs)]
        return not bad, f"{len(pairs)} consecutive pairs with n+2 <= {max_n}; failures {bad}"

    return timed(f"d_squared_{flavor}_n<={max_n}", run)


def check_d_squared_vectors(flavor: str, max_n: int) -> CheckResult:
    """d(d(b)) = 0 for every basis element b of every slice with n <= max_n."""

    def run():
        count = 0
        bad = []
        for n in range(1, max_n + 1):
            for e in range(0, _max_edges(flavor, n) + 1):
                for g in slice_basis(flavor, n, e).basis:
                    count += 1
                    if differential(differential(GraphVector({g: 1}))):
                        bad.append(str(g))
        return not bad, f"{count} basis elements, {len(bad)} failures"

    return timed(f"d_squared_vectors_{flavor}_n<={max_n}", run)


def small_family(max_n: int = 3, max_e: int = 3) -> List[GraphVector]:
    fam = []
    for n in range(1, max_n + 1):
        for e in range(0, max_e + 1):
            fam.extend(GraphVector({g: 1}) for g in enumerate_graphs(n, e, Constraints(directed=True)))
    return fam


def random_element(rng: random.Random, n: int, max_e: int = 4, terms: int = 2) -> GraphVector:
    """Random homogeneous class vector on ``n`` vertices (small integer coefficients)."""
    e = rng.randint(0, max_e)
    basis = enumerate_graphs(n, e, Constraints(directed=True))
    while not basis:
        e = rng.randint(0, max_e)
        basis = enumerate_graphs(n, e, Constraints(directed=True))
    picks = rng.sample(basis, min(terms, len(basis)))
    return GraphVector({g: rng.choice([-2, -1, 1, 2, 3]) for g in picks})


def associator_ok(a: GraphVector, b: GraphVector, c: GraphVector) -> bool:
    left = pre_lie(pre_lie(a, b), c) - pre_lie(a, pre_lie(b, c))
    right = pre_lie(pre_lie(a, c), b) - pre_lie(a, pre_lie(c, b))
    return left == _sign(b.degree * c.degree) * right


def jacobi_ok(a: GraphVector, b: GraphVector, c: GraphVector) -> bool:
    lhs = bracket(a, bracket(b, c))
    rhs = bracket(bracket(a, b), c) + _sign(a.degree * b.degree) * bracket(b, bracket(a, c))
    return lhs == rhs


def _triples(fam: Sequence[GraphVector], max_total: int) -> Iterable:
    for a, b, c in itertools.product(fam, repeat=3):
        if a.bidegree[0] + b.bidegree[0] + c.bidegree[0] <= max_total:
            yield a, b, c


def composite_sizes(total: int) -> List[Tuple[int, int, int]]:
    """Vertex counts (na, nb, nc) whose nested products live on ``total`` vertices."""
    s = total + 2
    return [(a, b, s - a - b) for a in range(1, s - 1) for b in range(1, s - a) if s - a - b >= 1]


def random_triple(rng: random.Random, total: int = 4, max_e: int = 3) -> List[GraphVector]:
    sizes = rng.choice(composite_sizes(total))
    return [random_element(rng, n, max_e=max_e) for n in sizes]


def check_prelie_jacobi(samples: int = 100, seed: int = 0, max_total: int = 5) -> CheckResult:
    """Associator symmetry and Jacobi on every triple of the small family whose products
    have at most ``max_total - 2`` vertices, plus seeded random triples whose products
    have exactly 4 vertices."""

    def run():
        fam = small_family()
        exhaustive = list(_triples(fam, max_total))
        bad_a = sum(1 for t in exhaustive if not associator_ok(*t))
        bad_j = sum(1 for t in exhaustive if not jacobi_ok(*t))
        rng = random.Random(seed)
        bad_r = 0
        for _ in range(samples):
            trip = random_triple(rng)
            if not associator_ok(*trip) or not jacobi_ok(*trip):
                bad_r += 1
        ok = not (bad_a or bad_j or bad_r)
        return ok, (
            f"{len(exhaustive)} exhaustive triples (associator failures {bad_a}, Jacobi failures {bad_j}); "
            f"{samples} random triples with 4-vertex products (seed {seed}), failures {bad_r}"
        )

    return timed("pre_lie_and_jacobi", run)


# -- polyvectors --------------------------------------------------------------------


def _homogeneous_random(rng, d, **kw) -> Polyvector:
    while True:
        v = random_polyvector(rng, d, theta_degree=rng.randint(0, d), **kw)
        if v:
            return v


def check_schouten(triples: int = 500, seed: int = 0, max_d: int = 2) -> CheckResult:
    def run():
        rng = random.Random(seed)
        bad_anti = bad_jac = 0
        for _ in range(triples):
            d = rng.randint(1, max_d)
            u, v, w = (_homogeneous_random(rng, d, max_order=2, nterms=2) for _ in range(3))
            p = {id(z): z.theta_degree - 1 for z in (u, v, w)}
            if schouten(v, w) != -schouten(w, v).scale(_sign(p[id(v)] * p[id(w)])):
                bad_anti += 1
            lhs = schouten(u, schouten(v, w))
            rhs = schouten(schouten(u, v), w) + schouten(v, schouten(u, w)).scale(_sign(p[id(u)] * p[id(v)]))
            if lhs != rhs:
                bad_jac += 1
        return not (bad_anti or bad_jac), f"{triples} triples: antisymmetry failures {bad_anti}, Jacobi failures {bad_jac}"

    return timed("schouten_antisymmetry_jacobi", run)


def anchor_family(d: int, max_order: int = 3) -> List[Polyvector]:
    """Deterministic polyvectors: every monomial of order <= max_order times every theta subset of size <= 2."""
    from itertools import combinations, combinations_with_replacement

    fam = []
    for order in range(max_order + 1):
        for combo in combinations_with_replacement(range(d), order):
            exps = [0] * d
            for j in combo:
                exps[j] += 1
            for k in range(0, min(2, d) + 1):
                for th in combinations(range(1, d + 1), k):
                    fam.append(Polyvector.monomial(d, exps, th))
    return fam


def check_theta_anchor(max_d: int = 3, max_order: int = 3, stride: int = 1) -> CheckResult:
    """The symmetrized edge acts as the Schouten bracket on all pairs from the deterministic family."""

    def run():
        count = bad = 0
        for d in range(1, max_d + 1):
            fam = anchor_family(d, max_order)
            for i, v in enumerate(fam):
                for w in fam[i % stride :: stride]:
                    count += 1
                    s = schouten(v, w)
                    if theta_action(MC_DIRECTED, [v, w]) != s or theta_action(MC_UNDIRECTED, [v, w]) != s:
                        bad += 1
        return not bad, f"{count} pairs (d <= {max_d}, order <= {max_order}), failures {bad}"

    return timed("theta_anchor", run)



# -- globalization properties ----------------------------------------------------------


def check_globalization(gamma: GraphVector, dims: Sequence[int] = (2, 3), trials: int = 50, seed: int = 0) -> List[CheckResult]:
    """Properties c), d) and b) for ``gamma`` in each dimension, one result per property."""
    from .action import check_gl_equivariance, check_linear_vector_report, check_vanishing_on_vectors

    out = []
    for d in dims:
        for fn in (check_vanishing_on_vectors, check_linear_vector_report, check_gl_equivariance):
            t0 = time.perf_counter()
            rep = fn(gamma, d, trials=trials, seed=seed)
            detail = f"d={d}, {rep.trials} trials, {len(rep.failures)} failures"
            if fn is check_gl_equivariance:
                detail += f", {rep.nonzero} with nonzero output"
            out.append(CheckResult(f"{rep.name}_d{d}", rep.passed, detail, time.perf_counter() - t0, rep.as_dict()))
    return out


def check_negative_controls(d: int = 2) -> CheckResult:
    """The one-edge graph violates c) and d): the property checks must report failures."""
    from .action import check_linear_vector_vanishing, check_vanishing_on_vectors
    from .polyvector import LinearVectorField

    def run():
        # two non-commuting linear vector fields: x2 d/dx1 and x1 d/dx2
        a = LinearVectorField([[0, 1] + [0] * (d - 2), [1, 0] + [0] * (d - 2)] + [[0] * d for _ in range(d - 2)])
        b = LinearVectorField([[1] + [0] * (d - 1)] + [[0] * d for _ in range(d - 1)])
        value = theta_action(MC_DIRECTED, [a.polyvector(), b.polyvector()])
        c_fails = bool(value) and value == schouten(a.polyvector(), b.polyvector())
        c_report = check_vanishing_on_vectors(MC_DIRECTED, d, trials=5, seed=0)
        # linear v against a quadratic vector field
        w = Polyvector.monomial(d, [2] + [0] * (d - 1), (1,))
        d_fails = not check_linear_vector_vanishing(MC_DIRECTED, a, [w])
        ok = c_fails and not c_report.passed and d_fails
        return ok, (
            f"edge on two linear fields gives their bracket {value!r}; "
            f"c) check reports {len(c_report.failures)}/{c_report.trials} failures; d) check fails: {d_fails}"
        )

    return timed(f"negative_controls_edge_d{d}", run)
