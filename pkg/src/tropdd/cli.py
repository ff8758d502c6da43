"""Command-line driver.

Exit status: 0 on success, 1 on parse or validation errors, 2 when an internal
invariant check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bench import parse_bench_spec, random_system, records_to_csv, run_bench
from .dd import ORDERS, FILTERS, compute_extreme, dehomogenize
from .extremality import NotMemberError, extreme_types
from .formats import CONE, ParseError, ProblemFile, emit_generators, format_problem, parse_problem
from .oracle import ray_bound, upper_bound
from .semiring import is_zero, parse_scalar


class InvariantError(RuntimeError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_compute(args) -> int:
    problem = parse_problem(_read(args.file))
    cone = problem.cone()
    gens = compute_extreme(cone, order=args.order, filter=args.filter)
    bad = [g for g in gens if not cone.contains(g)]
    if bad:
        raise InvariantError(f"{len(bad)} generators violate the input system")
    if cone.dim > 1 and len(gens) > ray_bound(cone.n, cone.dim):
        raise InvariantError("more extreme rays than the upper bound allows")
    result = gens if problem.kind == CONE else dehomogenize(gens)
    _write(emit_generators(result), args.output)
    return 0


def cmd_check(args) -> int:
    problem = parse_problem(_read(args.file))
    if not args.vector:
        raise ValueError("missing vector entries")
    x = tuple(parse_scalar(t) for t in args.vector)
    if len(x) != problem.dim:
        raise ValueError(f"expected {problem.dim} entries, got {len(x)}")
    cone = problem.cone()
    point = x if problem.kind == CONE else x + (0,)
    if is_zero(point):
        raise ValueError("the zero vector spans no ray")
    out = []
    try:
        types = extreme_types(cone, point)
    except NotMemberError:
        out.append("member: no")
    else:
        out.append("member: yes")
        out.append(f"extreme: {'yes' if types else 'no'}")
        if problem.kind == CONE:
            shown = sorted(t + 1 for t in types)
        else:
            shown = sorted(t + 1 for t in types if t < problem.dim)
        out.append("types: " + (" ".join(map(str, shown)) if shown else "-"))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_rand(args) -> int:
    s = random_system(args.d, args.n, args.seed, args.density, args.lo, args.hi)
    _write(format_problem(ProblemFile(CONE, s.dim, s)), args.output)
    return 0


def cmd_bound(args) -> int:
    value = ray_bound(args.n, args.d) if args.cone else upper_bound(args.n, args.d)
    sys.stdout.write(f"{value}\n")
    return 0


def cmd_bench(args) -> int:
    records = run_bench(parse_bench_spec(_read(args.specfile)))
    _write(records_to_csv(records), args.output)
    return 2 if any(r.status != "OK" for r in records) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropdd", description="Extreme rays of tropical cones and polyhedra.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="extreme rays (or points and rays) of a problem file")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.add_argument("--order", choices=ORDERS, default="dynamic")
    c.add_argument("--filter", choices=FILTERS, default="hypergraph")
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="membership, extremality and types of a vector")
    k.add_argument("file")
    k.add_argument("vector", nargs=argparse.REMAINDER, help="entries such as 2 -oo 5/2")
    k.set_defaults(func=cmd_check)

    r = sub.add_parser("rand", help="write a seeded random cone problem")
    r.add_argument("-d", type=int, required=True)
    r.add_argument("-n", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--density", type=float, default=0.7)
    r.add_argument("--lo", type=int, default=-10)
    r.add_argument("--hi", type=int, default=10)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_rand)

    b = sub.add_parser("bound", help="McMullen bound U(n, d)")
    b.add_argument("n", type=int)
    b.add_argument("d", type=int)
    b.add_argument("--cone", action="store_true", help="print the ray bound U(n + d, d - 1) instead")
    b.set_defaults(func=cmd_bound)

    h = sub.add_parser("bench", help="compare hypergraph and residuation filtering")
    h.add_argument("specfile")
    h.add_argument("-o", "--output")
    h.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"tropdd: internal error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError) as exc:
        print(f"tropdd: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
