"""Command-line interface.

Subcommands: ``translate`` (compile to DLV syntax), ``solve`` (enumerate
answer sets), ``check`` (faithfulness / strong faithfulness / modularity
/ the answer-set vs. equilibrium-model cross-check), ``stats`` (growth
CSV) and ``gen`` (seeded program generation).

Exit status: 0 success, 1 check mismatch, 2 parse or flag errors,
3 resource (cap or guard) errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    NotDisjunctiveError, ParseError, ResourceLimitError, StageInputError,
)
from .semantics import DEFAULT_CAP, Interpretation, answer_sets, equilibrium_models
from .syntax import Atom, AtomKind, BAR_PREFIX, LABEL_PREFIX, Program
from .textio import parse, print_dlv, print_nested
from .verify import (
    GeneratorConfig, check_faithful, check_modular, check_strongly_faithful,
    generate_program, growth_csv, measure_growth, translate_mode,
)


def _read_text(path: str | None) -> tuple[str, str]:
    if path is None or path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as handle:
        return handle.read(), path


def _read_program(path: str | None, allow_internal: bool) -> Program:
    text, origin = _read_text(path)
    return parse(text, origin, allow_internal=allow_internal)


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _parse_atom_list(spec: str) -> frozenset[Atom]:
    atoms = set()
    for name in spec.split(","):
        name = name.strip()
        if not name:
            continue
        if name.startswith(LABEL_PREFIX):
            atoms.add(Atom(name, AtomKind.LABEL))
        elif name.startswith(BAR_PREFIX):
            atoms.add(Atom(name, AtomKind.BAR))
        else:
            atoms.add(Atom(name, AtomKind.USER))
    return frozenset(atoms)


def _format_interp(interp: Interpretation) -> str:
    return "{" + ", ".join(sorted(a.name for a in interp)) + "}"


def _sorted_interps(interps) -> list[Interpretation]:
    return sorted(interps, key=lambda i: tuple(sorted(a.name for a in i)))


def _cmd_translate(args: argparse.Namespace) -> int:
    program = _read_program(args.input, allow_internal=False)
    if args.mode == "structural" or args.mode == "polarity":
        from .translate import translate_polarity_variant, translate_structural
        fn = translate_structural if args.mode == "structural" \
            else translate_polarity_variant
        translated, report = fn(program, simplify=args.simplify)
    else:
        translated, report = translate_mode(program, args.mode)
    _write_text(args.output, print_dlv(translated))
    for key, value in report.as_dict().items():
        print(f"{key}={value}", file=sys.stderr)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    program = _read_program(args.input, allow_internal=True)
    alphabet = program.var()
    if args.alphabet:
        alphabet |= _parse_atom_list(args.alphabet)
    sets = answer_sets(program, alphabet, cap=args.cap)
    if args.project:
        projection = _parse_atom_list(args.project)
        sets = frozenset(i & projection for i in sets)
    if not sets:
        print("0 answer sets")
        return 0
    for interp in _sorted_interps(sets):
        print(_format_interp(interp))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    program = _read_program(args.input, allow_internal=False)
    if args.kind == "faithful":
        verdict = check_faithful(program, mode=args.mode, cap=args.cap)
        if verdict.equal:
            print("faithful: yes")
            return 0
        print("faithful: no")
        if verdict.witness is not None:
            print(f"witness: {_format_interp(verdict.witness)}")
        return 1
    if args.kind == "strong":
        config = GeneratorConfig(seed=args.seed)
        verdicts = check_strongly_faithful(
            program, args.contexts, config, mode=args.mode, cap=args.cap)
        failed = False
        for index, verdict in enumerate(verdicts):
            if verdict.equal:
                print(f"context {index}: ok")
            else:
                failed = True
                line = f"context {index}: mismatch"
                if verdict.witness is not None:
                    line += f" witness {_format_interp(verdict.witness)}"
                print(line)
        return 1 if failed else 0
    if args.kind == "modular":
        if args.second is None:
            raise ParseError("check modular requires -j FILE2")
        other = _read_program(args.second, allow_internal=False)
        ok = check_modular(program, other)
        print(f"modular: {'yes' if ok else 'no'}")
        return 0 if ok else 1
    # props: answer sets coincide with equilibrium models
    alphabet = program.alphabet
    stable = answer_sets(program, alphabet, cap=args.cap)
    equilibria = equilibrium_models(program, alphabet, cap=args.cap)
    ok = stable == equilibria
    print(f"answer sets match equilibrium models: {'yes' if ok else 'no'}")
    if not ok:
        for interp in _sorted_interps(stable ^ equilibria):
            print(f"witness: {_format_interp(interp)}")
    return 0 if ok else 1


def _cmd_stats(args: argparse.Namespace) -> int:
    rows = measure_growth(args.family, range(1, args.n_max + 1),
                          guard=args.guard)
    _write_text(args.output, growth_csv(rows))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    config = GeneratorConfig(seed=args.seed, max_atoms=args.atoms,
                             max_depth=args.depth, max_rules=args.rules,
                             family=args.family)
    sys.stdout.write(print_nested(generate_program(config)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlp2dlp",
        description="Compile nested logic programs into disjunctive logic "
                    "programs, and check the translation against a "
                    "brute-force answer-set oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("translate", help="compile to DLV syntax")
    p_tr.add_argument("--mode", choices=("structural", "distributive",
                                         "polarity"), default="structural")
    p_tr.add_argument("--simplify", action="store_true",
                      help="do not label the truth constants")
    p_tr.add_argument("-i", "--input", default=None)
    p_tr.add_argument("-o", "--output", default=None)
    p_tr.set_defaults(func=_cmd_translate)

    p_solve = sub.add_parser("solve", help="enumerate answer sets")
    p_solve.add_argument("--alphabet", default=None,
                         help="comma-separated atoms added to the alphabet")
    p_solve.add_argument("--project", default=None,
                         help="comma-separated atoms to project onto")
    p_solve.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_solve.add_argument("-i", "--input", default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_check = sub.add_parser("check", help="verify translation properties")
    p_check.add_argument("kind", choices=("faithful", "strong", "modular",
                                          "props"))
    p_check.add_argument("--mode", choices=("structural", "distributive",
                                            "polarity"), default="structural")
    p_check.add_argument("--contexts", type=int, default=25)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--cap", type=int, default=DEFAULT_CAP + 4)
    p_check.add_argument("-i", "--input", default=None)
    p_check.add_argument("-j", "--second", default=None,
                         help="second program (check modular)")
    p_check.set_defaults(func=_cmd_check)

    p_stats = sub.add_parser("stats", help="emit the growth CSV")
    p_stats.add_argument("--family", choices=("dnf_head", "cnf_body"),
                         required=True)
    p_stats.add_argument("--n-max", type=int, required=True)
    p_stats.add_argument("--guard", type=int, default=1_000_000)
    p_stats.add_argument("-o", "--output", default=None)
    p_stats.set_defaults(func=_cmd_stats)

    p_gen = sub.add_parser("gen", help="generate a seeded random program")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--atoms", type=int, default=4)
    p_gen.add_argument("--rules", type=int, default=3)
    p_gen.add_argument("--depth", type=int, default=3)
    p_gen.add_argument("--family", default="random")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3
    except (NotDisjunctiveError, StageInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
