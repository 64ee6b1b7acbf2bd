"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 guard, 4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .drawings import build_drawing_family
from .errors import ParseError, SizeError
from .instances import gen_p12, gen_random_instance
from .oracle import MAX_ELEMENTS, exact_dimension
from .permutations import build_3suitable, build_weakly_3suitable, is_3suitable, is_weakly_3suitable
from .realizer import build_realizer, corollary_bound, dimension_bound, poset_from_paths, verify_realizer
from .tree import root_at_center

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD, EXIT_VERIFY = 0, 1, 2, 3, 4
PERMS_VERIFY_LIMIT = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunReport:
    delta: int
    radius: int
    leaves: int
    p: int
    size: int
    bound: int
    dimension_bound: int
    verdict: str
    times: dict[str, float] = field(default_factory=dict)

    def render(self) -> str:
        lines = [
            f"max degree      {self.delta}",
            f"radius          {self.radius}",
            f"leaves          {self.leaves}",
            f"elements        {self.p}",
            f"realizer size   {self.size}",
            f"bound           {self.bound}",
            f"min(leaves, .)  {self.dimension_bound}",
            f"verification    {self.verdict}",
        ]
        lines += [f"time {name:<10} {secs:.4f}s" for name, secs in self.times.items()]
        return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_perms(args) -> int:
    if args.n < 1:
        raise UsageError(f"n must be a positive integer, got {args.n}")
    fam = build_weakly_3suitable(args.n) if args.weak else build_3suitable(args.n)
    _emit(formats.format_permutations(fam), args.out)
    if args.verify:
        if args.n > PERMS_VERIFY_LIMIT:
            print(f"verification refused: n = {args.n} exceeds {PERMS_VERIFY_LIMIT}", file=sys.stderr)
            return EXIT_GUARD
        ok = is_weakly_3suitable(fam) if args.weak else is_3suitable(fam)
        print(f"verification {'pass' if ok else 'fail'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args) -> int:
    if (args.p12 is None) == (args.random is None):
        raise UsageError("give exactly one of --p12 DELTA R or --random N P SEED")
    if args.p12 is not None:
        delta, radius = args.p12
        if delta < 2 or radius < 1:
            raise UsageError("--p12 needs DELTA >= 2 and R >= 1")
        inst = gen_p12(delta, radius)
    else:
        n, p, seed = args.random
        if n < 1 or p < 1:
            raise UsageError("--random needs N >= 1 and P >= 1")
        inst = gen_random_instance(n, p, seed, duplicates=args.duplicates)
    Path(f"{args.prefix}.tree").write_text(formats.format_tree(inst.tree))
    Path(f"{args.prefix}.paths").write_text(formats.format_paths(inst))
    print(f"wrote {args.prefix}.tree ({inst.tree.n} nodes) and {args.prefix}.paths "
          f"({inst.p} paths)", file=sys.stderr)
    return EXIT_OK


def cmd_realize(args) -> int:
    times = {}
    t0 = time.perf_counter()
    inst = formats.read_instance(args.tree, args.paths)
    times["load"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    family = build_drawing_family(inst.tree)
    realizer = build_realizer(inst, family)
    times["realize"] = time.perf_counter() - t0

    verdict = "skipped"
    if not args.no_verify:
        t0 = time.perf_counter()
        ok = verify_realizer(poset_from_paths(inst), realizer)
        times["verify"] = time.perf_counter() - t0
        verdict = "pass" if ok else "FAIL"

    _emit(formats.format_realizer(realizer), args.out)
    if args.drawings:
        Path(args.drawings).write_text(family.dump())
    t = inst.tree
    report = RunReport(t.maxdeg, t.radius, t.leafcount, inst.p, len(realizer),
                       corollary_bound(t), dimension_bound(t), verdict, times)
    sys.stderr.write(report.render())
    return EXIT_VERIFY if verdict == "FAIL" else EXIT_OK


def cmd_dim(args) -> int:
    inst = formats.read_instance(args.tree, args.paths)
    if inst.p > MAX_ELEMENTS:
        raise SizeError(f"{inst.p} elements; exact dimension is limited to {MAX_ELEMENTS}")
    poset = poset_from_paths(inst)
    result = exact_dimension(poset, kmax=args.kmax)
    realizer = build_realizer(inst)
    t = inst.tree
    print(f"dimension       {result}")
    print(f"realizer size   {len(realizer)}")
    print(f"bound           {corollary_bound(t)}")
    print(f"min(leaves, .)  {dimension_bound(t)}")
    if result.value is not None and result.value > len(realizer):
        print("oracle exceeds realizer size", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bound(args) -> int:
    t = root_at_center(formats.read_tree(args.tree))
    print(f"root            {t.root}")
    print(f"max degree      {t.maxdeg}")
    print(f"branching       {t.branching}")
    print(f"radius          {t.radius}")
    print(f"leaves          {t.leafcount}")
    print(f"bound           {corollary_bound(t)}")
    print(f"min(leaves, .)  {dimension_bound(t)}")
    if args.drawings:
        sys.stdout.write(build_drawing_family(t).dump())
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cptdim", description="Realizers for posets of paths in a tree.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("perms", help="build a (weakly) 3-suitable permutation family")
    p.add_argument("n", type=int)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--weak", action="store_true")
    kind.add_argument("--strong", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_perms)

    p = sub.add_parser("gen", help="write an instance as PREFIX.tree and PREFIX.paths")
    p.add_argument("--p12", nargs=2, type=int, metavar=("DELTA", "R"))
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "P", "SEED"))
    p.add_argument("--duplicates", type=int, default=0)
    p.add_argument("--prefix", default="instance")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("realize", help="compute and verify a realizer")
    p.add_argument("tree")
    p.add_argument("paths")
    p.add_argument("-o", "--out")
    p.add_argument("--drawings", help="also write the drawing descriptors here")
    p.add_argument("--no-verify", action="store_true", help="skip verification (benchmarking)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("dim", help="exact dimension of a tiny instance")
    p.add_argument("tree")
    p.add_argument("paths")
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("bound", help="report the dimension bound of a host tree")
    p.add_argument("tree")
    p.add_argument("--drawings", action="store_true", help="print the drawing descriptors")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except SizeError as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
