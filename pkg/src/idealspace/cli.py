"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds a violated claim, 2 on
input or usage errors. Reports go to standard output as JSON; errors go to
standard error as ``{"error": {"code": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import operators as ops
from .continuity import classify
from .documents import (
    dumps,
    ideal_doc,
    labels_of,
    parse_ideal,
    parse_map,
    parse_set,
    parse_space,
    set_labels,
    space_doc,
)
from .enumeration import UniverseBounds, enumerate_ideals, enumerate_maps, enumerate_topologies
from .errors import IdealSpaceError, InputError, UnknownLabel
from .reports import (
    classify_report,
    enumerate_report,
    matrix_report,
    mine_report,
    operator_report,
    verify_report,
)
from .setspace import closure, interior, minimal_nbhd, trivial_ideal
from .verify import THEOREM_IDS, Claim, check_theorem, implication_matrix, mine_counterexample

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


SET_OPERATORS = {
    "closure": lambda S, I, A: closure(S, A),
    "interior": lambda S, I, A: interior(S, A),
    "cl-theta": lambda S, I, A: ops.theta_closure(S, A),
    "int-theta": lambda S, I, A: ops.theta_interior(S, A),
    "cl-tau-theta": lambda S, I, A: ops.tau_theta_closure(S, A),
    "int-tau-theta": lambda S, I, A: ops.tau_theta_interior(S, A),
    "local": ops.local_function,
    "cl-star": ops.star_closure,
    "gamma": ops.gamma,
    "psi-gamma": ops.psi_gamma,
    "cl-sigma": ops.sigma_closure,
}
SPACE_OPERATORS = {
    "tau-theta": lambda S, I: ops.tau_theta(S),
    "tau-star": ops.tau_star,
    "sigma": ops.sigma,
}
OPERATOR_NAMES = sorted([*SET_OPERATORS, *SPACE_OPERATORS, "cl-sequence", "min-nbhd"])


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", path=path) from None


def _emit(doc) -> None:
    sys.stdout.write(dumps(doc))


def _bounds(args, x: int, y: int) -> UniverseBounds:
    return UniverseBounds(
        x, y, include_ideals=not getattr(args, "no_ideals", False), sample_budget=getattr(args, "sample", None)
    )


def cmd_operator(args) -> int:
    S = parse_space(_read(args.space))
    I = parse_ideal(_read(args.ideal), S) if args.ideal else trivial_ideal(S.n)
    name = args.name
    base = {"space": space_doc(S), "ideal": ideal_doc(I, S)["generator"]}
    if name in SPACE_OPERATORS:
        _emit(operator_report(name, **base, result=space_doc(SPACE_OPERATORS[name](S, I))))
        return EXIT_OK
    if name == "min-nbhd":
        if args.point is None:
            raise UsageError("min-nbhd needs --point")
        lookup = {lab: i for i, lab in enumerate(labels_of(S))}
        if args.point not in lookup:
            raise UnknownLabel(f"unknown point label {args.point!r}", label=args.point)
        result = minimal_nbhd(S, lookup[args.point])
        _emit(operator_report(name, **base, point=args.point, result=set_labels(S, result.mask)))
        return EXIT_OK
    if args.set is None:
        raise UsageError(f"operator {name} needs --set")
    A = parse_set(args.set, S)
    base["set"] = set_labels(S, A.mask)
    if name == "cl-sequence":
        seq = ops.cl_sequence(S, I, A)
        _emit(
            operator_report(
                name,
                **base,
                stages=[set_labels(S, s.mask) for s in seq.stages],
                stabilized_at=seq.stabilized_at,
                result=set_labels(S, seq.fixpoint.mask),
            )
        )
        return EXIT_OK
    result = SET_OPERATORS[name](S, I, A)
    _emit(operator_report(name, **base, result=set_labels(S, result.mask)))
    return EXIT_OK


def cmd_classify(args) -> int:
    X = parse_space(_read(args.x))
    Y = parse_space(_read(args.y))
    f = parse_map(_read(args.map), X, Y)
    ideals = None
    if args.ideal_x or args.ideal_y:
        Ix = parse_ideal(_read(args.ideal_x), X) if args.ideal_x else trivial_ideal(X.n)
        Iy = parse_ideal(_read(args.ideal_y), Y) if args.ideal_y else trivial_ideal(Y.n)
        ideals = (Ix, Iy)
    _emit(classify_report(f, classify(f, ideals)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.n
    if args.what == "topologies":
        items = [space_doc(S) for S in enumerate_topologies(n)]
    elif args.what == "ideals":
        items = [ideal_doc(I)["generator"] for I in enumerate_ideals(n)]
    else:
        items = [list(t) for t in enumerate_maps(n, args.ny or n)]
    _emit(enumerate_report(args.what, n, items))
    return EXIT_OK


def cmd_verify(args) -> int:
    x = args.max_x or args.max_n
    y = args.max_y or args.max_n
    if x is None or y is None:
        raise UsageError("verify needs --max-n or both --max-x and --max-y")
    bounds = _bounds(args, x, y)
    ids = THEOREM_IDS if args.theorem.lower() == "all" else [args.theorem]
    reports = []
    for tid in ids:
        r = check_theorem(tid, bounds, jobs=args.jobs)
        if args.timing:
            print(f"{r.theorem}: {r.instances_checked} instances in {r.elapsed:.2f}s", file=sys.stderr)
        reports.append(r)
    _emit(verify_report(reports))
    if args.figure:
        from .plotting import plot_verification

        plot_verification(reports, args.figure)
    return EXIT_VIOLATION if any(r.outcome.violated for r in reports) else EXIT_OK


def cmd_mine(args) -> int:
    claim = Claim.parse(args.claim, drop=args.drop or ())
    bounds = _bounds(args, args.max_x, args.max_y)
    t0 = time.perf_counter()
    w = mine_counterexample(claim, bounds, jobs=args.jobs)
    if args.timing:
        print(f"{claim.name}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    _emit(mine_report(claim.name, bounds, w))
    return EXIT_OK


def cmd_matrix(args) -> int:
    bounds = UniverseBounds(args.max_n, args.max_n, include_ideals=False)
    t0 = time.perf_counter()
    m = implication_matrix(bounds, jobs=args.jobs)
    if args.timing:
        print(f"matrix: {m.maps_checked} maps in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    _emit(matrix_report(m))
    if args.figure:
        from .plotting import plot_matrix

        plot_matrix(m, args.figure)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="idealspace", description="Finite ideal topological spaces: operators, continuity, verification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    o = sub.add_parser("operator", help="apply one operator to a space")
    o.add_argument("name", choices=OPERATOR_NAMES)
    o.add_argument("--space", required=True)
    o.add_argument("--ideal")
    o.add_argument("--set", help="comma-separated point labels")
    o.add_argument("--point", help="point label (min-nbhd)")
    o.set_defaults(func=cmd_operator)

    c = sub.add_parser("classify", help="decide the five continuity notions for a map")
    c.add_argument("--x", required=True)
    c.add_argument("--y", required=True)
    c.add_argument("--map", required=True)
    c.add_argument("--ideal-x")
    c.add_argument("--ideal-y")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="list labeled topologies, ideals or maps")
    e.add_argument("what", choices=["topologies", "ideals", "maps"], nargs="?", default="topologies")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--ny", type=int, help="codomain size for maps (default: --n)")
    e.set_defaults(func=cmd_enumerate)

    def common(sp):
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--sample", type=int, help="check this many random instances instead of all")
        sp.add_argument("--no-ideals", action="store_true", help="quantify over trivial ideals only")
        sp.add_argument("--timing", action="store_true", help="print elapsed time to stderr")

    v = sub.add_parser("verify", help="check a theorem over an enumerated universe")
    v.add_argument("--theorem", required=True, help=f"one of {', '.join(THEOREM_IDS)}, or 'all'")
    v.add_argument("--max-n", type=int)
    v.add_argument("--max-x", type=int)
    v.add_argument("--max-y", type=int)
    v.add_argument("--figure", help="write a chart of the results to this file")
    common(v)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("mine", help="search for the first counterexample to a claim")
    m.add_argument("--claim", required=True, help="'P=>Q' over continuity notions, or a theorem id")
    m.add_argument("--drop", action="append", help="hypothesis to drop from a theorem claim (repeatable)")
    m.add_argument("--max-x", type=int, required=True)
    m.add_argument("--max-y", type=int, required=True)
    common(m)
    m.set_defaults(func=cmd_mine)

    x = sub.add_parser("matrix", help="implication matrix between the five notions")
    x.add_argument("--max-n", type=int, required=True)
    x.add_argument("--jobs", type=int, default=1)
    x.add_argument("--figure", help="write the matrix as an image to this file")
    x.add_argument("--timing", action="store_true")
    x.set_defaults(func=cmd_matrix)
    return p


def _error(code: str, message: str, details=None) -> int:
    err = {"code": code, "message": message}
    if details:
        err["details"] = details
    sys.stderr.write(json.dumps({"error": err}, ensure_ascii=False) + "\n")
    return EXIT_INPUT


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return _error(UsageError.code, str(exc))
    except IdealSpaceError as exc:
        d = exc.to_dict()
        return _error(d["code"], d["message"], d.get("details"))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
