"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a mathematical
check fails (a witness is printed), 2 on usage, parse or resource errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families, textio
from .errors import BirkhoffError, BudgetExceeded, NonterminatingFrontier, NotALattice
from .laws import lattice_chain_report, partial_join_chain, sample_antichains
from .lattice import is_distributive, lattice_law_violations, try_lattice
from .lazy import (
    DEFAULT_FRONTIER_BOUND,
    LazyPoset,
    enumerate_finite_ideals,
    from_finite,
    quadrant_poset,
    shifted_octant_poset,
)
from .poset import default_budget
from .representation import verify_representation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GENERATORS = {"quadrant": quadrant_poset, "shifted-octant": shifted_octant_poset}


class UsageError(Exception):
    pass


def _emit(text: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from None


def resolve_generator(name: str) -> LazyPoset:
    """Accepts a built-in name, ``finite:<path>``, or a path to a text file."""
    if name in GENERATORS:
        return GENERATORS[name]()
    if name.startswith("finite:"):
        return from_finite(textio.load_poset(name[len("finite:"):]))
    if Path(name).is_file():
        parsed = textio.read_text(name)
        if parsed.generator is not None:
            return resolve_generator(parsed.generator)
        return from_finite(parsed.to_poset())
    raise UsageError(f"unknown generator {name!r}")


def cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, tuple(args.params))
    try:
        spec = spec.validate()
    except families.FamilyError as exc:
        raise UsageError(str(exc)) from None
    if spec.name in families.LAZY_FAMILIES:
        text = f"# infinite poset; enumerate its finite ideals with the ideals command\ngenerator {spec.name}\n"
    elif spec.name == "finite-file":
        text = textio.dumps_poset(textio.load_poset(spec.params[0]))
    else:
        text = textio.format_cover_text(*families.family_covers(spec))
    _emit(text, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    P = textio.load_poset(args.file)
    want_laws = args.laws or not (args.distributive or args.birkhoff)
    try:
        L = try_lattice(P)
    except NotALattice as exc:
        print(f"not a lattice: {exc}")
        if args.kv:
            print(f"lattice=false\nwitness={exc.pair[0]},{exc.pair[1]}")
        return EXIT_FAIL
    status = EXIT_OK

    if want_laws:
        problems = lattice_law_violations(L)
        report = lattice_chain_report(L)
        report.violations.extend(problems)
        if is_distributive(L) is True:
            for A in sample_antichains(L, args.samples, seed=args.seed):
                try:
                    partial_join_chain(L, A)
                except BirkhoffError as exc:
                    report.violations.append(f"partial joins of {A}: {exc}")
        print(report.to_text())
        if args.kv:
            print(report.to_kv())
        if not report.ok:
            status = EXIT_FAIL

    if args.distributive:
        witness = is_distributive(L)
        if witness is True:
            print("distributive: yes")
        else:
            a, b, c = witness
            print(f"distributive: NO, witness a={a} b={b} c={c}")
            print(f"  {a}∧({b}∨{c}) = {L.meet(a, L.join(b, c))}")
            print(f"  ({a}∧{b})∨({a}∧{c}) = {L.join(L.meet(a, b), L.meet(a, c))}")
            status = EXIT_FAIL
        if args.kv:
            print(f"distributive={str(witness is True).lower()}")

    if args.birkhoff:
        rep = verify_representation(L, budget=args.budget)
        print(rep.to_text())
        if args.kv:
            print(rep.to_kv())
        if not rep.ok:
            status = EXIT_FAIL
    return status


def cmd_ideals(args) -> int:
    P = resolve_generator(args.generator)
    if args.max_size < 0:
        raise UsageError("max size must be >= 0")
    try:
        T = enumerate_finite_ideals(P, args.max_size, budget=args.budget, frontier_bound=args.frontier_bound)
    except (BudgetExceeded, NonterminatingFrontier) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    show_counts = args.counts or not args.list
    lines = []
    if show_counts:
        lines.extend(f"rank {k}: {c}" for k, c in enumerate(T.rank_counts()))
    if args.list:
        lines.extend(ideal.canonical for ideal in T)
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    source = args.source
    is_plain_file = Path(source).is_file() and textio.read_text(source).generator is None
    if is_plain_file and args.max_size is None:
        text = textio.poset_to_dot(textio.load_poset(source))
    else:
        if args.max_size is None:
            raise UsageError("exporting an ideal lattice needs a max size")
        P = resolve_generator(source)
        T = enumerate_finite_ideals(P, args.max_size, budget=args.budget, frontier_bound=args.frontier_bound)
        text = textio.poset_to_dot(T.as_poset())
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="birkhoff",
        description="Distributive lattices, order ideals and the Birkhoff correspondence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--budget", type=int, default=None,
                       help="ideal cap (default 1000000, or $BIRKHOFF_BUDGET)")
        p.add_argument("--frontier-bound", type=int, default=DEFAULT_FRONTIER_BOUND,
                       help="max addable elements per ideal")

    p = sub.add_parser("gen", help="write a poset family in the text format")
    p.add_argument("family", choices=sorted(families.ARITY))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_gen)

    for name, helptext in (("check", "check lattice laws, distributivity, representation"),
                           ("birkhoff", "same as check --birkhoff")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        if name == "check":
            p.add_argument("--laws", action="store_true")
            p.add_argument("--distributive", action="store_true")
            p.add_argument("--birkhoff", action="store_true")
        p.add_argument("--kv", action="store_true", help="also print key=value lines")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=100,
                       help="random antichains for the partial-join check")
        budget_flags(p)
        p.set_defaults(func=cmd_check)
        if name == "birkhoff":
            p.set_defaults(laws=False, distributive=False, birkhoff=True)

    p = sub.add_parser("ideals", help="enumerate finite order ideals up to a size")
    p.add_argument("generator", help="quadrant, shifted-octant, finite:<path> or a file")
    p.add_argument("max_size", type=int)
    p.add_argument("--counts", action="store_true")
    p.add_argument("--list", action="store_true")
    budget_flags(p)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("export", help="write a Hasse diagram in DOT")
    p.add_argument("source", help="poset file, or a generator (with max size)")
    p.add_argument("max_size", type=int, nargs="?", default=None)
    p.add_argument("-o", "--out", default=None)
    budget_flags(p)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BirkhoffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
