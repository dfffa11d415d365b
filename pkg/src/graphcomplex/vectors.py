"""Formal rational linear combinations of graphs."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .graphs import Graph, canonicalize, degree, labeled_normal_form


class GraphVector:
    """Immutable map graph -> nonzero Fraction.

    Two kinds are used: *class vectors*, keyed by canonical graphs, where the
    key ``c`` stands for the symmetrization ``sum_sigma sigma(c)``; and
    *labeled vectors*, keyed by graphs whose edge list is merely sorted.  The
    constructors :meth:`from_graphs` and :meth:`labeled` perform the matching
    reduction; the plain constructor trusts its input.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Graph, Fraction]] = None):
        self._terms: Dict[Graph, Fraction] = {
            g: Fraction(c) for g, c in (terms or {}).items() if c != 0
        }
        self._hash = None

    @classmethod
    def from_graphs(cls, items: Iterable[Tuple[Graph, object]]) -> "GraphVector":
        """Sum of ``coef * g`` with every ``g`` reduced to its canonical class."""
        acc: Dict[Graph, Fraction] = {}
        for g, c in items:
            canon, sign = canonicalize(g)
            if sign:
                acc[canon] = acc.get(canon, 0) + sign * Fraction(c)
        return cls(acc)

    @classmethod
    def labeled(cls, items: Iterable[Tuple[Graph, object]]) -> "GraphVector":
        """Sum of ``coef * g`` keeping vertex labels, edges sorted with sign."""
        acc: Dict[Graph, Fraction] = {}
        for g, c in items:
            h, sign = labeled_normal_form(g)
            if sign:
                acc[h] = acc.get(h, 0) + sign * Fraction(c)
        return cls(acc)

    @classmethod
    def single(cls, g: Graph, coef=1) -> "GraphVector":
        return cls.from_graphs([(g, coef)])

    # -- container protocol
    def __iter__(self) -> Iterator[Graph]:
        return iter(sorted(self._terms))

    def items(self):
        return [(g, self._terms[g]) for g in sorted(self._terms)]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, g: Graph) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def __contains__(self, g):
        return g in self._terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, GraphVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- linear structure
    def __add__(self, other: "GraphVector") -> "GraphVector":
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, 0) + c
        return GraphVector(acc)

    def __neg__(self):
        return GraphVector({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return GraphVector({g: scalar * c for g, c in self._terms.items()})

    __rmul__ = __mul__

    # -- grading
    def bidegrees(self) -> set:
        return {(g.n, g.e) for g in self._terms}

    @property
    def bidegree(self):
        """``(n, e)`` when homogeneous, ``"mixed"`` otherwise, ``None`` for the zero vector."""
        bd = self.bidegrees()
        if not bd:
            return None
        return bd.pop() if len(bd) == 1 else "mixed"

    def degrees(self) -> set:
        return {degree(g) for g in self._terms}

    @property
    def degree(self) -> Optional[int]:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous vector, degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def homogeneous_parts(self) -> Dict[Tuple[int, int], "GraphVector"]:
        parts: Dict[Tuple[int, int], Dict] = {}
        for g, c in self._terms.items():
            parts.setdefault((g.n, g.e), {})[g] = c
        return {bd: GraphVector(t) for bd, t in sorted(parts.items())}

    def __repr__(self):
        if not self._terms:
            return "GraphVector(0)"
        return "GraphVector(" + " + ".join(f"{c}*[{g}]" for g, c in self.items()) + ")"
