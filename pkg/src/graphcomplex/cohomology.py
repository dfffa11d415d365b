"""Bidegree slices of dfGC, fGC and GC, their differentials, and Betti numbers."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .enumeration import Constraints, ResourceLimitError, enumerate_graphs
from .graphs import Graph
from .lie import differential
from .linalg import SparseRationalMatrix, kernel, rank
from .operad import expand_classes
from .vectors import GraphVector

log = logging.getLogger(__name__)

FLAVORS = ("dfGC", "fGC", "GC")
#: bump whenever a convention that changes bases or matrices changes
CONVENTION_VERSION = 1

CONSTRAINTS = {
    "dfGC": Constraints(directed=True),
    "fGC": Constraints(directed=False),
    "GC": Constraints(
        directed=False,
        connected=True,
        min_valency=3,
        allow_tadpoles=False,
        allow_parallel=False,
        biconnected=True,
    ),
}
MAX_N = {"dfGC": 5, "fGC": 6, "GC": 7}


class ClosureError(RuntimeError):
    """The differential left the target slice (a term outside the flavor's basis)."""


@dataclass
class BasisSlice:
    flavor: str
    n: int
    e: int
    basis: List[Graph] = field(default_factory=list)

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (self.n, self.e)

    @property
    def degree(self) -> int:
        return 2 * self.n - 2 - self.e

    def __len__(self):
        return len(self.basis)

    def index(self) -> Dict[Graph, int]:
        return {g: i for i, g in enumerate(self.basis)}


class SliceCache:
    """On-disk cache of bases and differential matrices.

    One JSON file per object, named by flavor, bidegree and convention version;
    files from another version are ignored.  Writes go to a temporary file in
    the same directory followed by an atomic rename.
    """

    def __init__(self, root):
        self.root = Path(root)

    def _path(self, kind: str, flavor: str, n: int, e: int) -> Path:
        return self.root / f"{kind}-{flavor}-n{n}-e{e}-v{CONVENTION_VERSION}.json"

    def load(self, kind, flavor, n, e):
        path = self._path(kind, flavor, n, e)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("version") != CONVENTION_VERSION:
            return None
        return data

    def store(self, kind, flavor, n, e, payload: dict) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        payload = dict(payload, version=CONVENTION_VERSION)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self._path(kind, flavor, n, e))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")


def slice_basis(flavor: str, n: int, e: int, cache: Optional[SliceCache] = None) -> BasisSlice:
    _check_flavor(flavor)
    if n < 1 or e < 0:
        return BasisSlice(flavor, max(n, 0), e, [])
    if n > MAX_N[flavor]:
        raise ResourceLimitError(f"{flavor} slice n={n} exceeds the bound n<={MAX_N[flavor]}")
    c = CONSTRAINTS[flavor]
    if cache is not None:
        data = cache.load("basis", flavor, n, e)
        if data is not None:
            from .formats import parse_graph

            return BasisSlice(flavor, n, e, [parse_graph(s) for s in data["basis"]])
    basis = enumerate_graphs(n, e, c, max_vertices=MAX_N[flavor])
    if cache is not None:
        cache.store("basis", flavor, n, e, {"basis": [str(g) for g in basis]})
    return BasisSlice(flavor, n, e, basis)


def _column(args):
    g, target_index, flavor = args
    image = differential(GraphVector({g: Fraction(1)}))
    col = {}
    for h, c in image.items():
        row = target_index.get(h)
        if row is None:
            raise ClosureError(f"d[{g}] has the term {c}*[{h}] outside the {flavor} slice")
        col[row] = c
    return col


def differential_matrix(
    flavor: str, n: int, e: int, cache: Optional[SliceCache] = None, jobs: int = 1
) -> SparseRationalMatrix:
    """Matrix of d from slice (n, e) to slice (n+1, e+1); column j is the image of basis element j."""
    _check_flavor(flavor)
    if cache is not None:
        data = cache.load("diff", flavor, n, e)
        if data is not None:
            return SparseRationalMatrix(
                data["rows"], data["cols"], {(i, j): Fraction(v) for i, j, v in data["entries"]}
            )
    src = slice_basis(flavor, n, e, cache)
    if not src.basis:
        tgt_len = len(slice_basis(flavor, n + 1, e + 1, cache)) if n + 1 <= MAX_N[flavor] else 0
        return SparseRationalMatrix(tgt_len, 0)
    tgt = slice_basis(flavor, n + 1, e + 1, cache)
    index = tgt.index()
    work = [(g, index, flavor) for g in src.basis]
    if jobs > 1 and len(work) > 16:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            columns = list(pool.map(_column, work, chunksize=8))
    else:
        columns = [_column(w) for w in work]
    entries = {(i, j): v for j, col in enumerate(columns) for i, v in col.items()}
    m = SparseRationalMatrix(len(tgt), len(src), entries)
    if cache is not None:
        cache.store(
            "diff",
            flavor,
            n,
            e,
            {"rows": m.rows, "cols": m.cols, "entries": [[i, j, str(v)] for (i, j), v in sorted(m.entries.items())]},
        )
    return m


def _rank_out(flavor, n, e, cache, jobs) -> int:
    return rank(differential_matrix(flavor, n, e, cache, jobs))


def betti(flavor: str, n: int, e: int, cache: Optional[SliceCache] = None, jobs: int = 1) -> int:
    """dim ker(d on (n, e)) - rank(d into (n, e))."""
    dim = len(slice_basis(flavor, n, e, cache))
    if dim == 0:
        return 0
    out = _rank_out(flavor, n, e, cache, jobs)
    incoming = 0
    if n >= 2 and e >= 1 and slice_basis(flavor, n - 1, e - 1, cache).basis:
        incoming = _rank_out(flavor, n - 1, e - 1, cache, jobs)
    return dim - out - incoming


def cocycle_basis(flavor: str, n: int, e: int, cache: Optional[SliceCache] = None, jobs: int = 1) -> List[GraphVector]:
    """Class vectors spanning the cocycles of slice (n, e)."""
    src = slice_basis(flavor, n, e, cache)
    if not src.basis:
        return []
    m = differential_matrix(flavor, n, e, cache, jobs)
    return [GraphVector({src.basis[j]: c for j, c in vec.items()}) for vec in kernel(m)]


def to_coordinates(vec: GraphVector, sl: BasisSlice) -> Dict[int, Fraction]:
    index = sl.index()
    out = {}
    for g, c in vec.items():
        if g not in index:
            raise KeyError(f"{g} is not in the {sl.flavor} basis of bidegree {sl.bidegree}")
        out[index[g]] = c
    return out


def is_coboundary(vec: GraphVector, flavor: str, cache: Optional[SliceCache] = None, jobs: int = 1) -> bool:
    """Whether a homogeneous class vector lies in the image of d."""
    if not vec:
        return True
    (n, e), = vec.bidegrees()
    if n < 2 or e < 1:
        return False
    m = differential_matrix(flavor, n - 1, e - 1, cache, jobs)
    target = to_coordinates(vec, slice_basis(flavor, n, e, cache))
    aug = dict(m.entries)
    for i, c in target.items():
        aug[(i, m.cols)] = c
    return rank(SparseRationalMatrix(m.rows, m.cols + 1, aug)) == rank(m)


@dataclass
class H0Row:
    n: int
    e: int
    betti_dfgc: int
    betti_gc: int
    gc_cocycles: int
    expansions_closed: bool

    def as_dict(self):
        return dict(self.__dict__)


def compare_h0(window: int, cache: Optional[SliceCache] = None, jobs: int = 1) -> List[H0Row]:
    """Degree-zero Betti numbers of dfGC and GC for n <= window, plus expansion checks."""
    rows = []
    for n in range(1, window + 1):
        e = 2 * n - 2
        b_d = betti("dfGC", n, e, cache, jobs)
        b_g = betti("GC", n, e, cache, jobs)
        cocycles = cocycle_basis("GC", n, e, cache, jobs)
        closed = all(not differential(expand_classes(z)) for z in cocycles)
        log.info("n=%d e=%d: H0(dfGC)=%d H0(GC)=%d", n, e, b_d, b_g)
        rows.append(H0Row(n, e, b_d, b_g, len(cocycles), closed))
    return rows


def check_d_squared(flavor: str, n: int, e: int, cache: Optional[SliceCache] = None, jobs: int = 1) -> bool:
    """Matrix identity d_{(n+1,e+1)} d_{(n,e)} = 0."""
    first = differential_matrix(flavor, n, e, cache, jobs)
    second = differential_matrix(flavor, n + 1, e + 1, cache, jobs)
    if first.cols == 0 or second.cols == 0:
        return True
    return (second @ first).is_zero()


__all__ = [
    "BasisSlice",
    "ClosureError",
    "FLAVORS",
    "H0Row",
    "SliceCache",
    "betti",
    "check_d_squared",
    "cocycle_basis",
    "compare_h0",
    "differential_matrix",
    "is_coboundary",
    "slice_basis",
]
