"""Empirical checks for the translation's meta-properties.

Faithfulness, strong faithfulness and modularity are validated against
the enumeration oracle on concrete programs; polynomiality is exhibited
by measuring growth against the distributive translation on the
worst-case rule families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .semantics import Interpretation, answer_sets
from .syntax import (
    BOT, TOP, And, Atom, Expr, Not, Or, Program, Rule, Var, conjunction,
    disjunction, user_atom,
)
from .textio import format_expr
from .translate import (
    AtomTable, TranslationReport, _structural_pipeline,
    translate_distributive, translate_polarity_variant, translate_structural,
)

DEFAULT_VERIFY_CAP = 24

GROWTH_FAMILIES = ("dnf_head", "cnf_body")


@dataclass(frozen=True)
class FaithfulnessVerdict:
    input_answer_sets: frozenset[Interpretation]
    projected_translated_sets: frozenset[Interpretation]
    equal: bool
    witness: Interpretation | None = None


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    max_atoms: int = 4
    max_depth: int = 3
    max_rules: int = 3
    family: str = "random"


def translate_mode(program: Program, mode: str
                   ) -> tuple[Program, TranslationReport]:
    if mode == "structural":
        return translate_structural(program)
    if mode == "polarity":
        return translate_polarity_variant(program)
    if mode == "distributive":
        return translate_distributive(program)
    raise ValueError(f"unknown translation mode {mode!r}")


def _interp_key(interp: Interpretation) -> tuple[str, ...]:
    return tuple(sorted(a.name for a in interp))


def _verdict(inputs: frozenset[Interpretation],
             outputs: frozenset[Interpretation],
             projection: frozenset[Atom]) -> FaithfulnessVerdict:
    projected = frozenset(i & projection for i in outputs)
    one_to_one = len(projected) == len(outputs)
    equal = projected == inputs and one_to_one
    witness = None
    if projected != inputs:
        witness = min(projected ^ inputs, key=_interp_key)
    elif not one_to_one:
        # two translated answer sets collapse onto one projection
        seen: set[Interpretation] = set()
        for i in sorted(outputs, key=_interp_key):
            p = i & projection
            if p in seen:
                witness = p
                break
            seen.add(p)
    return FaithfulnessVerdict(inputs, projected, equal, witness)


def check_faithful(program: Program, mode: str = "structural",
                   cap: int = DEFAULT_VERIFY_CAP) -> FaithfulnessVerdict:
    """Compare answer sets of the input with the projection of the
    answer sets of its translation, including the one-to-one property."""
    source_alphabet = program.alphabet
    inputs = answer_sets(program, source_alphabet, cap)
    translated, _ = translate_mode(program, mode)
    target_alphabet = translated.var() | source_alphabet
    outputs = answer_sets(translated, target_alphabet, cap)
    return _verdict(inputs, outputs, source_alphabet)


def check_strongly_faithful(program: Program, contexts: int,
                            config: GeneratorConfig, mode: str = "structural",
                            cap: int = DEFAULT_VERIFY_CAP
                            ) -> list[FaithfulnessVerdict]:
    """Faithfulness under sampled context programs over the input
    alphabet: answer sets of program + context versus the projection of
    translation + context."""
    rng = random.Random(config.seed)
    source_alphabet = program.alphabet
    atoms = tuple(sorted(source_alphabet))
    translated, _ = translate_mode(program, mode)
    verdicts = []
    for _ in range(contexts):
        context = Program(
            _random_rules(rng, atoms, config.max_depth, config.max_rules),
            source_alphabet)
        combined_inputs = answer_sets(program.union(context),
                                      source_alphabet, cap)
        combined = translated.union(context)
        outputs = answer_sets(combined, combined.var() | source_alphabet, cap)
        verdicts.append(_verdict(combined_inputs, outputs, source_alphabet))
    return verdicts


def _canonical_expr(expr: Expr, inverse: dict[Atom, Expr]) -> str:
    if isinstance(expr, Var):
        formula = inverse.get(expr.atom)
        if formula is not None:
            return "L{" + format_expr(formula) + "}"
        return expr.atom.name
    if isinstance(expr, Not):
        return "not(" + _canonical_expr(expr.child, inverse) + ")"
    if isinstance(expr, And):
        return ("and(" + _canonical_expr(expr.left, inverse) + ","
                + _canonical_expr(expr.right, inverse) + ")")
    if isinstance(expr, Or):
        return ("or(" + _canonical_expr(expr.left, inverse) + ","
                + _canonical_expr(expr.right, inverse) + ")")
    return "true" if expr == TOP else "false"


def _canonical_rules(program: Program, table: AtomTable) -> frozenset[str]:
    inverse = {atom: expr for expr, atom in table.labels.items()}
    return frozenset(
        _canonical_expr(r.head, inverse) + " <- " + _canonical_expr(r.body, inverse)
        for r in program.rules)


def check_modular(p1: Program, p2: Program) -> bool:
    """The structural translation commutes with program union, compared
    as rule sets modulo the structural relabeling of label atoms."""
    union, union_table, _ = _structural_pipeline(p1.union(p2))
    t1, table1, _ = _structural_pipeline(p1)
    t2, table2, _ = _structural_pipeline(p2)
    lhs = _canonical_rules(union, union_table)
    rhs = _canonical_rules(t1, table1) | _canonical_rules(t2, table2)
    return lhs == rhs


def family_program(family: str, n: int) -> Program:
    """Worst-case growth families.

    ``dnf_head``: one rule whose head is the disjunction over i of
    (a_i and b_i); its head CNF has 2^n clauses.  ``cnf_body``: one rule
    whose body is the conjunction over i of (a_i or b_i).
    """
    if family not in GROWTH_FAMILIES:
        raise ValueError(f"unknown growth family {family!r}")
    if n < 1:
        raise ValueError("family size must be at least 1")
    pairs = [(user_atom(f"a{i}"), user_atom(f"b{i}")) for i in range(1, n + 1)]
    if family == "dnf_head":
        head = disjunction([And(Var(a), Var(b)) for a, b in pairs])
        return Program((Rule(head, TOP),))
    body = conjunction([Or(Var(a), Var(b)) for a, b in pairs])
    return Program((Rule(Var(user_atom("p")), body),))


@dataclass(frozen=True)
class GrowthRow:
    n: int
    structural_size: int
    structural_rules: int
    distributive_size: int | None
    distributive_rules: int | None
    overflow: bool


def measure_growth(family: str, n_values: Iterable[int],
                   guard: int = 1_000_000) -> list[GrowthRow]:
    rows = []
    for n in n_values:
        prog = family_program(family, n)
        structural, s_report = translate_structural(prog)
        try:
            distributive, d_report = translate_distributive(prog, guard)
            rows.append(GrowthRow(n, s_report.output_size, len(structural.rules),
                                  d_report.output_size, len(distributive.rules),
                                  False))
        except ResourceLimitError:
            rows.append(GrowthRow(n, s_report.output_size,
                                  len(structural.rules), None, None, True))
    return rows


def growth_csv(rows: Sequence[GrowthRow]) -> str:
    lines = ["n,structural_size,distributive_size,distributive_overflow"]
    for row in rows:
        dist = "" if row.overflow else str(row.distributive_size)
        lines.append(f"{row.n},{row.structural_size},{dist},"
                     f"{1 if row.overflow else 0}")
    return "\n".join(lines) + "\n"


def _atom_names(count: int) -> list[str]:
    names = []
    letters = "abcdefghijklmnopqrstuvwxyz"
    i = 0
    while len(names) < count:
        if i < len(letters):
            names.append(letters[i])
        else:
            names.append(f"x{i - len(letters)}")
        i += 1
    return names


def _random_expr(rng: random.Random, atoms: Sequence[Atom], depth: int) -> Expr:
    if not atoms or depth <= 1 or rng.random() < 0.35:
        roll = rng.random()
        if not atoms or roll < 0.05:
            return TOP
        if roll < 0.10:
            return BOT
        return Var(rng.choice(atoms))
    roll = rng.random()
    if roll < 0.30:
        return Not(_random_expr(rng, atoms, depth - 1))
    if roll < 0.65:
        return And(_random_expr(rng, atoms, depth - 1),
                   _random_expr(rng, atoms, depth - 1))
    return Or(_random_expr(rng, atoms, depth - 1),
              _random_expr(rng, atoms, depth - 1))


def _random_rules(rng: random.Random, atoms: Sequence[Atom], max_depth: int,
                  max_rules: int) -> tuple[Rule, ...]:
    rules = []
    for _ in range(rng.randint(1, max(1, max_rules))):
        head = BOT if rng.random() < 0.10 else _random_expr(rng, atoms, max_depth)
        body = TOP if rng.random() < 0.35 else _random_expr(rng, atoms, max_depth)
        rules.append(Rule(head, body))
    return tuple(rules)


def generate_program(config: GeneratorConfig) -> Program:
    """Seeded random nested program; identical configs yield identical
    programs.  The growth families delegate to ``family_program`` with
    n taken from ``max_rules``."""
    if config.family in GROWTH_FAMILIES:
        return family_program(config.family, max(1, config.max_rules))
    rng = random.Random(config.seed)
    atoms = tuple(user_atom(n) for n in _atom_names(config.max_atoms))
    rules = _random_rules(rng, atoms, config.max_depth, config.max_rules)
    return Program(rules, frozenset(atoms))
