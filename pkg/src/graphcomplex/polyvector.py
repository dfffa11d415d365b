"""Polyvector fields on K^d: polynomials in even x^1..x^d and odd theta_1..theta_d.

A term is keyed by ``(exps, thetas)`` where ``exps`` is a tuple of ``d``
exponents and ``thetas`` a strictly increasing tuple of 1-based indices.
``theta_degree`` counts odd factors (degree in V_A); the Schouten bracket lives
on the shifted space V_A[1], where a term of theta-degree ``k`` has degree ``k-1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


def merge_thetas(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[Tuple[int, ...], int]:
    """Product of two sorted odd monomials: ``(sorted indices, sign)``, sign 0 on repeats."""
    if set(a) & set(b):
        return (), 0
    # sign = (-1)^{#pairs (i in a, j in b) with i > j}
    inv = 0
    for i in a:
        for j in b:
            if i > j:
                inv += 1
    return tuple(sorted(a + b)), (-1 if inv % 2 else 1)


class Polyvector:
    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[Key, object] = None):
        if d < 1:
            raise ValueError("dimension must be >= 1")
        self.d = d
        self.terms: Dict[Key, Fraction] = {}
        for (exps, th), c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != d or any(a < 0 for a in exps):
                raise ValueError(f"bad exponent vector {exps} for d={d}")
            if any(not 1 <= i <= d for i in th):
                raise ValueError(f"theta index out of range 1..{d}: {th}")
            if len(set(th)) != len(th):
                continue
            th_sorted = tuple(sorted(th))
            sign = _sort_sign(th)
            c = sign * Fraction(c)
            if c:
                key = (exps, th_sorted)
                total = self.terms.get(key, 0) + c
                if total:
                    self.terms[key] = total
                else:
                    self.terms.pop(key, None)

    @classmethod
    def _normalized(cls, d: int, terms: Dict[Key, Fraction]) -> "Polyvector":
        """Wrap a dict whose keys are already valid and sorted; zero coefficients are dropped."""
        obj = cls.__new__(cls)
        obj.d = d
        obj.terms = {k: c for k, c in terms.items() if c}
        return obj

    # -- constructors
    @classmethod
    def const(cls, d: int, c=1) -> "Polyvector":
        return cls(d, {((0,) * d, ()): c})

    @classmethod
    def x(cls, i: int, d: int) -> "Polyvector":
        exps = [0] * d
        exps[i - 1] = 1
        return cls(d, {(tuple(exps), ()): 1})

    @classmethod
    def theta(cls, i: int, d: int) -> "Polyvector":
        return cls(d, {((0,) * d, (i,)): 1})

    @classmethod
    def monomial(cls, d: int, exps: Sequence[int], thetas: Sequence[int] = (), c=1) -> "Polyvector":
        return cls(d, {(tuple(exps), tuple(thetas)): c})

    # -- algebra
    def _check(self, other: "Polyvector") -> None:
        if self.d != other.d:
            raise ValueError(f"dimension mismatch: d={self.d} vs d={other.d}")

    def __add__(self, other: "Polyvector") -> "Polyvector":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return Polyvector._normalized(self.d, acc)

    def __neg__(self):
        return Polyvector._normalized(self.d, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Polyvector":
        c = Fraction(c)
        return Polyvector._normalized(self.d, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polyvector):
            return self.scale(other)
        self._check(other)
        acc: Dict[Key, Fraction] = {}
        for (ea, ta), ca in self.terms.items():
            for (eb, tb), cb in other.terms.items():
                th, sign = merge_thetas(ta, tb)
                if not sign:
                    continue
                key = (tuple(x + y for x, y in zip(ea, eb)), th)
                acc[key] = acc.get(key, 0) + (ca * cb if sign > 0 else -(ca * cb))
        return Polyvector._normalized(self.d, acc)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Polyvector):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    # -- derivatives
    def diff_x(self, k: int) -> "Polyvector":
        acc = {}
        for (exps, th), c in self.terms.items():
            a = exps[k - 1]
            if a:
                new = list(exps)
                new[k - 1] = a - 1
                acc[(tuple(new), th)] = c * a
        return Polyvector._normalized(self.d, acc)

    def diff_theta(self, k: int) -> "Polyvector":
        """Left derivative: move theta_k to the front (Koszul sign), then drop it."""
        acc = {}
        for (exps, th), c in self.terms.items():
            if k in th:
                pos = th.index(k)
                rest = th[:pos] + th[pos + 1 :]
                acc[(exps, rest)] = -c if pos % 2 else c
        return Polyvector._normalized(self.d, acc)

    # -- grading
    def theta_degrees(self) -> set:
        return {len(th) for _, th in self.terms}

    @property
    def theta_degree(self) -> int:
        degs = self.theta_degrees()
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polyvector, theta-degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def homogeneous_parts(self) -> Dict[int, "Polyvector"]:
        parts: Dict[int, Dict] = {}
        for k, c in self.terms.items():
            parts.setdefault(len(k[1]), {})[k] = c
        return {deg: Polyvector._normalized(self.d, t) for deg, t in sorted(parts.items())}

    def items(self) -> List[Tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0]))

    # -- linear changes of coordinates
    def substitute(self, xs: Sequence["Polyvector"], thetas: Sequence["Polyvector"]) -> "Polyvector":
        """Replace ``x^i`` by ``xs[i-1]`` and ``theta_i`` by ``thetas[i-1]`` (algebra morphism)."""
        acc: Dict[Key, Fraction] = {}
        one = Polyvector.const(self.d)
        powers: Dict[Tuple[int, int], Polyvector] = {}

        def power(i, a):
            if (i, a) not in powers:
                powers[(i, a)] = one if a == 0 else power(i, a - 1) * xs[i]
            return powers[(i, a)]

        for (exps, th), c in self.terms.items():
            term = one.scale(c)
            for i, a in enumerate(exps):
                if a:
                    term = term * power(i, a)
            for i in th:
                term = term * thetas[i - 1]
            for k, v in term.terms.items():
                acc[k] = acc.get(k, 0) + v
        return Polyvector._normalized(self.d, acc)

    def __repr__(self):
        from .formats import format_polyvector

        return f"Polyvector({format_polyvector(self)!r})"


def _sort_sign(th: Sequence[int]) -> int:
    inv = 0
    for a in range(len(th)):
        for b in range(a + 1, len(th)):
            if th[a] > th[b]:
                inv += 1
    return -1 if inv % 2 else 1


def shifted_degree(v: Polyvector) -> int:
    return v.theta_degree - 1


def schouten(v: Polyvector, w: Polyvector) -> Polyvector:
    """Schouten bracket on V_A[1], extended bilinearly over theta-degree components.

    ``[v,w] = (-1)^|v| sum_i dv/dtheta_i dw/dx^i - (-1)^{|v||w|+|w|} sum_i dw/dtheta_i dv/dx^i``
    with ``|.|`` the shifted degree and left theta-derivatives.
    """
    v._check(w)
    out = Polyvector(v.d)
    for a, vp in v.homogeneous_parts().items():
        for b, wp in w.homogeneous_parts().items():
            p, q = a - 1, b - 1
            s1 = -1 if p % 2 else 1
            s2 = -1 if (p * q + q) % 2 else 1
            for i in range(1, v.d + 1):
                out = out + (vp.diff_theta(i) * wp.diff_x(i)).scale(s1)
                out = out - (wp.diff_theta(i) * vp.diff_x(i)).scale(s2)
    return out


class LinearVectorField:
    """``v = sum_{i,j} m[i][j] x^j d/dx^i``; ``m`` is a d x d rational matrix (0-based here)."""

    def __init__(self, matrix: Sequence[Sequence[object]]):
        d = len(matrix)
        if any(len(row) != d for row in matrix):
            raise ValueError("matrix must be square")
        self.matrix = [[Fraction(c) for c in row] for row in matrix]
        self.d = d

    def polyvector(self) -> Polyvector:
        terms = {}
        for i in range(self.d):
            for j in range(self.d):
                c = self.matrix[i][j]
                if c:
                    exps = [0] * self.d
                    exps[j] = 1
                    terms[(tuple(exps), (i + 1,))] = c
        return Polyvector(self.d, terms)


def _inverse(m: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    import sympy

    inv = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in m]).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


def linear_change(v: Polyvector, t: Sequence[Sequence[object]]) -> Polyvector:
    """Push ``v`` forward along ``y = T x``: ``(T.v)(y, theta') = v(T^{-1} y, T^t theta')``."""
    d = v.d
    t = [[Fraction(c) for c in row] for row in t]
    tinv = _inverse(t)
    xs = []
    for i in range(d):
        terms = {}
        for j in range(d):
            if tinv[i][j]:
                exps = [0] * d
                exps[j] = 1
                terms[(tuple(exps), ())] = tinv[i][j]
        xs.append(Polyvector(d, terms))
    thetas = []
    for i in range(d):
        # theta_i = sum_j T[j][i] theta'_j
        thetas.append(Polyvector(d, {((0,) * d, (j + 1,)): t[j][i] for j in range(d) if t[j][i]}))
    return v.substitute(xs, thetas)


def random_polyvector(rng, d: int, max_order: int = 3, max_theta: int = 2, nterms: int = 3, theta_degree: int = None, coef_range: int = 3) -> Polyvector:
    """Random polyvector with small integer coefficients; fixed theta-degree if given."""
    terms = {}
    for _ in range(nterms):
        order = rng.randint(0, max_order)
        exps = [0] * d
        for _ in range(order):
            exps[rng.randrange(d)] += 1
        k = theta_degree if theta_degree is not None else rng.randint(0, min(max_theta, d))
        th = tuple(sorted(rng.sample(range(1, d + 1), k)))
        c = 0
        while c == 0:
            c = rng.randint(-coef_range, coef_range)
        terms[(tuple(exps), th)] = terms.get((tuple(exps), th), 0) + c
    return Polyvector(d, terms)


def coordinate_vector_fields(d: int, max_order: int = 3) -> Iterable[Polyvector]:
    """Deterministic family: ``x^a d/dx^i`` for every monomial of order <= max_order."""
    from itertools import combinations_with_replacement

    for order in range(max_order + 1):
        for combo in combinations_with_replacement(range(d), order):
            exps = [0] * d
            for j in combo:
                exps[j] += 1
            for i in range(1, d + 1):
                yield Polyvector.monomial(d, exps, (i,))
