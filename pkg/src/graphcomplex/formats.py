"""Text formats for graphs, graph vectors, matrices and polyvectors.

Graph:       ``n=4 edges=(3,1)(3,2)(2,3)(2,2)``   or   ``n=4 uedges={1,2}{1,3}``
Vector:      one ``<rational> * <graph>`` per line, optionally after a header
             ``complex=dfGC  truncation=8``
Matrix:      ``rows cols nnz`` then ``i j p/q`` per entry, 1-indexed
Polyvector:  ``d=2`` then terms joined by `` + ``, each ``p/q * x1^a1x2^a2 * θ_{1}θ_{2}``
             (the theta part is omitted when empty; the zero polyvector is ``0``)
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Tuple

from .graphs import DirectedGraph, GraphError, UndirectedGraph
from .linalg import SparseRationalMatrix
from .polyvector import Polyvector
from .vectors import GraphVector

COMPLEXES = ("dfGC", "fGC", "GC")


class FormatError(ValueError):
    """Malformed input; carries 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int = 1, column: int = 1, token: str = ""):
        self.line, self.column, self.token = line, column, token
        where = f"line {line}, column {column}"
        super().__init__(f"{where}: {message}" + (f" (token {token!r})" if token else ""))


_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def format_rational(q) -> str:
    return str(Fraction(q))


def parse_rational(text: str, line: int = 1, column: int = 1) -> Fraction:
    if not _RATIONAL.match(text):
        raise FormatError("malformed rational", line, column, text)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise FormatError("zero denominator", line, column, text)
    return Fraction(text)


# -- graphs ---------------------------------------------------------------------

_GRAPH = re.compile(r"^n=(\d+) (u?edges)=(.*)$")
_DEDGE = re.compile(r"\((-?\d+),(-?\d+)\)")
_UEDGE = re.compile(r"\{(-?\d+),(-?\d+)\}")


def format_graph(g) -> str:
    return str(g)


def parse_graph(text: str, line: int = 1, column: int = 1):
    m = _GRAPH.match(text)
    if not m:
        raise FormatError("expected 'n=<int> edges=...' or 'n=<int> uedges=...'", line, column, text)
    n = int(m.group(1))
    directed = m.group(2) == "edges"
    body = m.group(3)
    pattern = _DEDGE if directed else _UEDGE
    body_col = column + m.start(3)
    edges = []
    pos = 0
    while pos < len(body):
        em = pattern.match(body, pos)
        if not em:
            raise FormatError("malformed edge", line, body_col + pos, body[pos : pos + 8])
        s, t = int(em.group(1)), int(em.group(2))
        for v in (s, t):
            if not 1 <= v <= n:
                raise FormatError(f"edge endpoint {v} outside 1..{n}", line, body_col + pos, em.group(0))
        edges.append((s, t))
        pos = em.end()
    if n < 1:
        raise FormatError("vertex count must be >= 1", line, column + 2, m.group(1))
    try:
        return (DirectedGraph if directed else UndirectedGraph)(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc), line, column, text) from exc


# -- graph vectors ----------------------------------------------------------------

_HEADER = re.compile(r"^complex=(\S+)  truncation=(\d+)$")


def format_graph_vector(vec: GraphVector, header: Optional[dict] = None) -> str:
    lines = []
    if header is not None:
        lines.append(f"complex={header['complex']}  truncation={header['truncation']}")
    for g, c in vec.items():
        lines.append(f"{format_rational(c)} * {g}")
    return "\n".join(lines) + "\n"


def parse_graph_vector(text: str, labeled: bool = False) -> Tuple[GraphVector, Optional[dict]]:
    """Parse a vector file.

    Terms are reduced to canonical classes unless ``labeled`` is set, in which
    case vertex labels are kept and only the edge lists are sorted (with sign).
    """
    header = None
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        if raw.startswith("complex="):
            if header is not None or items:
                raise FormatError("header must be the first line", lineno, 1, raw)
            m = _HEADER.match(raw)
            if not m or m.group(1) not in COMPLEXES:
                raise FormatError("bad header, expected 'complex=dfGC|fGC|GC  truncation=<int>'", lineno, 1, raw)
            header = {"complex": m.group(1), "truncation": int(m.group(2))}
            continue
        sep = raw.find(" * ")
        if sep < 0:
            raise FormatError("expected '<rational> * <graph>'", lineno, 1, raw)
        coef = parse_rational(raw[:sep], lineno, 1)
        g = parse_graph(raw[sep + 3 :], lineno, sep + 4)
        items.append((g, coef, lineno))
    if header is not None:
        for g, _, lineno in items:
            _check_header(g, header, lineno)
    build = GraphVector.labeled if labeled else GraphVector.from_graphs
    return build((g, c) for g, c, _ in items), header


def _check_header(g, header: dict, lineno: int) -> None:
    from .lie import graph_in_gc

    flavor = header["complex"]
    if flavor == "dfGC" and not g.directed:
        raise FormatError("undirected graph in a dfGC file", lineno, 1, str(g))
    if flavor in ("fGC", "GC") and g.directed:
        raise FormatError(f"directed graph in a {flavor} file", lineno, 1, str(g))
    if flavor == "GC" and not graph_in_gc(g):
        raise FormatError("graph violates the GC conditions", lineno, 1, str(g))
    if g.n > header["truncation"]:
        raise FormatError(f"graph has {g.n} vertices, above truncation {header['truncation']}", lineno, 1, str(g))


# -- matrices ---------------------------------------------------------------------


def format_matrix(m: SparseRationalMatrix) -> str:
    lines = [f"{m.rows} {m.cols} {m.nnz}"]
    for (i, j), v in sorted(m.entries.items()):
        lines.append(f"{i + 1} {j + 1} {format_rational(v)}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SparseRationalMatrix:
    lines = [(k, ln) for k, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise FormatError("empty matrix file", 1, 1)
    k, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise FormatError("header must be 'rows cols nnz'", k, 1, head)
    rows, cols, nnz = map(int, parts)
    entries = {}
    for k, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError("entry must be 'i j p/q'", k, 1, ln)
        col = 1
        idx = []
        for p, bound in zip(parts[:2], (rows, cols)):
            if not p.isdigit() or not 1 <= int(p) <= bound:
                raise FormatError(f"index outside 1..{bound}", k, col, p)
            idx.append(int(p) - 1)
            col += len(p) + 1
        entries[tuple(idx)] = parse_rational(parts[2], k, col)
    if len(entries) != nnz or len(lines) - 1 != nnz:
        raise FormatError(f"header announces {nnz} entries, found {len(lines) - 1}", lines[0][0], 1, head)
    return SparseRationalMatrix(rows, cols, entries)


# -- polyvectors ------------------------------------------------------------------

_TERM = re.compile(r"^(-?\d+(?:/\d+)?) \* ((?:x\d+\^\d+)+)(?: \* ((?:θ_\{\d+\})+))?$")


def _format_term(d: int, key, c) -> str:
    exps, th = key
    mono = "".join(f"x{i + 1}^{a}" for i, a in enumerate(exps))
    out = f"{format_rational(c)} * {mono}"
    if th:
        out += " * " + "".join(f"θ_{{{i}}}" for i in th)
    return out


def format_polyvector(v: Polyvector) -> str:
    body = " + ".join(_format_term(v.d, k, c) for k, c in v.items()) or "0"
    return f"d={v.d}\n{body}\n"


def parse_polyvector(text: str) -> Polyvector:
    lines = [ln for ln in text.splitlines()]
    if not lines or not re.match(r"^d=\d+$", lines[0].strip()):
        raise FormatError("first line must be 'd=<int>'", 1, 1, lines[0] if lines else "")
    d = int(lines[0].strip()[2:])
    if d < 1:
        raise FormatError("dimension must be >= 1", 1, 3, str(d))
    body_lines = [ln for ln in lines[1:] if ln.strip()]
    if len(body_lines) != 1:
        raise FormatError("expected exactly one line of terms after the header", 2, 1)
    body = body_lines[0]
    terms = {}
    if body.strip() == "0":
        return Polyvector(d)
    col = 1
    for chunk in body.split(" + "):
        m = _TERM.match(chunk)
        if not m:
            raise FormatError("malformed polyvector term", 2, col, chunk)
        coef = parse_rational(m.group(1), 2, col)
        exps_found = re.findall(r"x(\d+)\^(\d+)", m.group(2))
        if [int(i) for i, _ in exps_found] != list(range(1, d + 1)):
            raise FormatError(f"monomial must list x1..x{d} in order", 2, col, m.group(2))
        exps = tuple(int(a) for _, a in exps_found)
        th = tuple(int(i) for i in re.findall(r"θ_\{(\d+)\}", m.group(3) or ""))
        if any(not 1 <= i <= d for i in th) or list(th) != sorted(set(th)):
            raise FormatError("theta indices must be strictly increasing in 1..d", 2, col, m.group(3))
        if (exps, th) in terms:
            raise FormatError("repeated term", 2, col, chunk)
        terms[(exps, th)] = coef
        col += len(chunk) + 3
    return Polyvector(d, terms)

