"""``gc`` command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import checks
from .action import theta_action
from .cohomology import FLAVORS, SliceCache, betti, compare_h0, differential_matrix, slice_basis
from .config import ConfigError, resolve
from .enumeration import ResourceLimitError
from .formats import (
    FormatError,
    format_graph_vector,
    format_matrix,
    format_polyvector,
    parse_graph_vector,
    parse_polyvector,
)
from .lie import MC_DIRECTED, bracket, differential
from .polyvector import random_polyvector, schouten
from .vectors import GraphVector

SCHEMA_VERSION = 1
log = logging.getLogger("graphcomplex")


class VerificationFailed(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--config", default=None, help="key=value settings file")
    p.add_argument("--out", default=None, help="write the main result to this file")
    p.add_argument("--timing", action="store_true", help="include wall-clock times in check reports")
    p.add_argument("-v", "--verbose", action="store_true")


def _slice_args(p):
    p.add_argument("--flavor", choices=FLAVORS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gc", description="Graph complex workbench")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enum", help="list the basis of a bidegree slice")
    _slice_args(p)
    p = sub.add_parser("diff", help="matrix of the differential out of a slice")
    _slice_args(p)
    p = sub.add_parser("betti", help="dimension of cohomology of a slice")
    _slice_args(p)
    p = sub.add_parser("cocycle", help="test whether a graph vector file is closed")
    p.add_argument("--in", dest="infile", required=True)
    p = sub.add_parser("compare-h0", help="degree-zero cohomology of dfGC versus GC")
    p.add_argument("--window", type=int, default=4)
    p = sub.add_parser("bracket", help="Lie bracket of two graph vector files")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = sub.add_parser("act", help="evaluate a graph vector on polyvector inputs")
    p.add_argument("--graph", required=True)
    p.add_argument("--inputs", nargs="+", required=True)
    p = sub.add_parser("schouten", help="Schouten bracket of two polyvector files")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = sub.add_parser("check-props", help="globalization properties b), c), d) for a cocycle")
    p.add_argument("--cocycle", default="tetrahedron", help="'tetrahedron' or a graph vector file")
    p.add_argument("--d", type=int, action="append", dest="dims", help="dimension (repeatable); default 2 and 3")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--controls", action="store_true", help="also run the negative controls on the one-edge graph")
    p = sub.add_parser("selftest", help="run the built-in verification suite")
    p.add_argument("--full", action="store_true", help="use the full acceptance slice set")
    for sp in sub.choices.values():
        _common(sp)
    return parser


class Runner:
    def __init__(self, args, settings):
        self.args = args
        self.seed = int(settings["seed"])
        self.jobs = max(1, int(settings["jobs"]))
        self.trials = int(settings["trials"])
        self.cache = None if args.no_cache else SliceCache(settings["cache_dir"])
        self.json = args.json
        self.timing = args.timing

    def emit(self, payload: dict, text: str) -> None:
        if self.json:
            payload = {"schema_version": SCHEMA_VERSION, "verb": self.args.verb, **payload}
            sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
        sys.stdout.flush()

    def write_out(self, text: str) -> None:
        if self.args.out:
            Path(self.args.out).write_text(text)

    # -- verbs
    def enum(self):
        a = self.args
        sl = slice_basis(a.flavor, a.n, a.e, self.cache)
        body = "".join(f"{g}\n" for g in sl.basis)
        self.write_out(body)
        self.emit(
            {"flavor": a.flavor, "n": a.n, "e": a.e, "degree": sl.degree, "dimension": len(sl), "basis": [str(g) for g in sl.basis]},
            f"# {a.flavor} (n={a.n}, e={a.e}) degree {sl.degree}: dimension {len(sl)}\n" + body,
        )

    def diff(self):
        a = self.args
        m = differential_matrix(a.flavor, a.n, a.e, self.cache, self.jobs)
        text = format_matrix(m)
        self.write_out(text)
        self.emit(
            {"flavor": a.flavor, "n": a.n, "e": a.e, "rows": m.rows, "cols": m.cols,
             "entries": [[i + 1, j + 1, str(v)] for (i, j), v in sorted(m.entries.items())]},
            text,
        )

    def betti(self):
        a = self.args
        b = betti(a.flavor, a.n, a.e, self.cache, self.jobs)
        self.emit({"flavor": a.flavor, "n": a.n, "e": a.e, "degree": 2 * a.n - 2 - a.e, "betti": b}, f"dim H = {b}")

    def cocycle(self):
        vec, header = _read_vector(self.args.infile)
        image = differential(vec)
        first = None
        if image:
            g, c = image.items()[0]
            first = f"{c} * {g}"
        payload = {"cocycle": not image, "image_terms": len(image), "first_nonzero": first,
                   "complex": header["complex"] if header else None}
        text = "cocycle: yes" if not image else f"cocycle: no ({len(image)} image terms)\nfirst nonzero term: {first}"
        self.emit(payload, text)
        if image:
            raise VerificationFailed

    def compare_h0(self):
        rows = compare_h0(self.args.window, self.cache, self.jobs)
        lines = [f"{'n':>3} {'e':>3} {'H0(dfGC)':>9} {'H0(GC)':>7} {'GC cocycles':>12} {'expansions closed':>18}"]
        for r in rows:
            lines.append(f"{r.n:>3} {r.e:>3} {r.betti_dfgc:>9} {r.betti_gc:>7} {r.gc_cocycles:>12} {str(r.expansions_closed):>18}")
        ok = all(r.betti_dfgc == r.betti_gc and r.expansions_closed for r in rows)
        self.emit({"rows": [r.as_dict() for r in rows], "agree": ok}, "\n".join(lines))
        if not ok:
            raise VerificationFailed

    def bracket(self):
        left, _ = _read_vector(self.args.left)
        right, _ = _read_vector(self.args.right)
        res = bracket(left, right)
        text = format_graph_vector(res)
        self.write_out(text)
        self.emit({"result": text.splitlines()}, text if res else "0")

    def act(self):
        vec, _ = _read_vector(self.args.graph)
        inputs = [_read_polyvector(p) for p in self.args.inputs]
        res = theta_action(vec, inputs)
        text = format_polyvector(res)
        self.write_out(text)
        self.emit({"result": text}, text)

    def schouten(self):
        res = schouten(_read_polyvector(self.args.left), _read_polyvector(self.args.right))
        text = format_polyvector(res)
        self.write_out(text)
        self.emit({"result": text}, text)

    def check_props(self):
        if self.args.cocycle == "tetrahedron":
            gamma = GraphVector({checks.TETRAHEDRON: 1})
        else:
            gamma, _ = _read_vector(self.args.cocycle)
        trials = self.args.trials if self.args.trials is not None else self.trials
        dims = self.args.dims or [2, 3]
        results = checks.check_globalization(gamma, dims, trials, self.seed)
        if self.args.controls:
            results += [checks.check_negative_controls(d) for d in dims]
        ok = all(r.passed for r in results)
        self.emit({"seed": self.seed, "results": [r.as_dict(self.timing) for r in results], "passed": ok},
                  "\n".join(r.line(self.timing) for r in results))
        if not ok:
            raise VerificationFailed

    def selftest(self):
        results = run_selftest(full=self.args.full, seed=self.seed, cache=self.cache, jobs=self.jobs)
        ok = all(r.passed for r in results)
        self.emit({"seed": self.seed, "results": [r.as_dict(self.timing) for r in results], "passed": ok}, "\n".join(r.line(self.timing) for r in results))
        if not ok:
            raise VerificationFailed


def run_selftest(full: bool = False, seed: int = 0, cache=None, jobs: int = 1) -> List[checks.CheckResult]:
    """Criteria 1, 2 (a reduced slice set unless ``full``), 4 and 8, plus serializer round trips."""
    results = [checks.check_mc()]
    results.append(checks.check_d_squared_matrices("dfGC", 4, cache, jobs))
    if full:
        results.append(checks.check_d_squared_matrices("GC", 6, cache, jobs))
        results.append(checks.check_d_squared_matrices("fGC", 6, cache, jobs))
        results.append(checks.check_d_squared_vectors("dfGC", 3))
    else:
        results.append(checks.check_d_squared_matrices("fGC", 5, cache, jobs))
    results.append(checks.check_prelie_jacobi(samples=100, seed=seed))
    results.append(checks.check_schouten(triples=500, seed=seed))
    results.append(checks.check_theta_anchor(max_d=3, max_order=3))
    results.append(checks.timed("serializer_round_trip", round_trips))
    return results


def round_trips():
    """parse(format(x)) == x and format(parse(text)) == text for every serializer."""
    import random

    from .formats import format_graph, parse_graph, parse_matrix
    from .operad import directed_expansion

    vectors = [
        (MC_DIRECTED, {"complex": "dfGC", "truncation": 8}, False),
        (directed_expansion(checks.TETRAHEDRON), None, True),
        (GraphVector({checks.TETRAHEDRON: 1}), {"complex": "GC", "truncation": 8}, False),
        (GraphVector.labeled([(checks.SAMPLE_DIGRAPH, -3), (checks.PENTAGON.relabel((2, 1, 3, 4, 5)), 2)]), None, True),
    ]
    count = bad = 0
    for vec, header, labeled in vectors:
        text = format_graph_vector(vec, header)
        parsed, h = parse_graph_vector(text, labeled=labeled)
        count += 1
        bad += parsed != vec or h != header or format_graph_vector(parsed, h) != text
    for g in (checks.SAMPLE_DIGRAPH, checks.TETRAHEDRON, checks.TADPOLE):
        count += 1
        bad += parse_graph(format_graph(g)) != g
    rng = random.Random(0)
    for d in (1, 2, 3):
        v = random_polyvector(rng, d, max_order=3, nterms=5)
        count += 1
        bad += parse_polyvector(format_polyvector(v)) != v
    for flavor, n, e in (("dfGC", 2, 2), ("fGC", 3, 3), ("GC", 4, 6)):
        m = differential_matrix(flavor, n, e)
        count += 1
        bad += parse_matrix(format_matrix(m)) != m
    return not bad, f"{count} round trips, {bad} mismatches"


def _read_vector(path):
    try:
        return parse_graph_vector(Path(path).read_text())
    except FormatError as exc:
        exc.path = path
        raise


def _read_polyvector(path):
    try:
        return parse_polyvector(Path(path).read_text())
    except FormatError as exc:
        exc.path = path
        raise


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = resolve(
            {"seed": args.seed, "jobs": args.jobs, "cache_dir": args.cache_dir},
            config_path=args.config,
        )
        runner = Runner(args, settings)
        getattr(runner, args.verb.replace("-", "_"))()
    except VerificationFailed:
        return 1
    except (FormatError, ConfigError, ResourceLimitError, OSError, ValueError) as exc:
        where = f"{exc.path}: " if getattr(exc, "path", None) else ""
        sys.stderr.write(f"gc: error: {where}{exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
