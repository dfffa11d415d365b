"""Exact sparse matrices over Q: rank by fraction-free elimination, kernels, products."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Mapping, Tuple

Entry = Tuple[int, int]


class SparseRationalMatrix:
    """``rows x cols`` matrix stored as ``{(i, j): Fraction}`` with 0-based indices."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[Entry, object] = None):
        self.rows = rows
        self.cols = cols
        self.entries: Dict[Entry, Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i},{j}) outside a {rows}x{cols} matrix")
            v = Fraction(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, rows: List[List[object]]) -> "SparseRationalMatrix":
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseRationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __matmul__(self, other: "SparseRationalMatrix") -> "SparseRationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: Dict[Entry, Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return SparseRationalMatrix(self.rows, other.cols, acc)

    def permuted(self, row_perm: List[int], col_perm: List[int]) -> "SparseRationalMatrix":
        """Matrix whose entry ``(row_perm[i], col_perm[j])`` is this matrix's ``(i, j)``."""
        return SparseRationalMatrix(
            self.rows, self.cols, {(row_perm[i], col_perm[j]): v for (i, j), v in self.entries.items()}
        )

    def column(self, j: int) -> Dict[int, Fraction]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def __repr__(self):
        return f"SparseRationalMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _integer_rows(m: SparseRationalMatrix) -> Dict[int, Dict[int, int]]:
    rows: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
    out = {}
    for i, r in rows.items():
        den = 1
        for v in r.values():
            den = den * v.denominator // gcd(den, v.denominator)
        out[i] = _primitive({j: int(v * den) for j, v in r.items()})
    return out


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()} if g > 1 else row


def rank(m: SparseRationalMatrix) -> int:
    """Exact rank over Q.

    Rows are scaled to primitive integer vectors and eliminated fraction-free
    (``r <- p*r - c*pivot_row``, then divided by its content).  Pivots are
    chosen by the Markowitz count ``(row_nnz-1)*(col_nnz-1)``, ties broken by
    smallest ``(row, col)``.
    """
    rows = _integer_rows(m)
    cols: Dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    r_ = 0
    while rows:
        best = None
        for j, col_rows in cols.items():
            cl = len(col_rows) - 1
            for i in col_rows:
                key = ((len(rows[i]) - 1) * cl, i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            break
        _, pi, pj = best
        prow = rows.pop(pi)
        for j in prow:
            cols[j].discard(pi)
        p = prow[pj]
        for i in sorted(cols[pj]):
            row = rows[i]
            c = row[pj]
            new = {j: p * v for j, v in row.items()}
            for j, v in prow.items():
                new[j] = new.get(j, 0) - c * v
            new = {j: v for j, v in new.items() if v}
            for j in row:
                if j not in new:
                    cols[j].discard(i)
            for j in new:
                if j not in row:
                    cols.setdefault(j, set()).add(i)
            if new:
                rows[i] = _primitive(new)
            else:
                del rows[i]
        cols = {j: s for j, s in cols.items() if s}
        r_ += 1
    return r_


def kernel(m: SparseRationalMatrix) -> List[Dict[int, Fraction]]:
    """Basis of the right null space, one sparse vector per free column (reduced echelon form)."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    order: List[int] = []
    rows: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
    for i in sorted(rows):
        row = dict(rows[i])
        for pc in order:
            c = row.get(pc)
            if c:
                for j, v in pivots[pc].items():
                    row[j] = row.get(j, 0) - c * v
                row = {j: v for j, v in row.items() if v}
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {j: v * inv for j, v in row.items()}
        for qc in order:
            c = pivots[qc].get(pc)
            if c:
                pr = pivots[qc]
                for j, v in row.items():
                    pr[j] = pr.get(j, 0) - c * v
                pivots[qc] = {j: v for j, v in pr.items() if v}
        pivots[pc] = row
        order.append(pc)
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vec = {free: Fraction(1)}
        for pc, row in pivots.items():
            c = row.get(free)
            if c:
                vec[pc] = -c
        basis.append(vec)
    return basis


def apply(m: SparseRationalMatrix, vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for (i, j), v in m.entries.items():
        x = vec.get(j)
        if x:
            out[i] = out.get(i, 0) + v * x
    return {i: v for i, v in out.items() if v}
