"""Translation pipeline from nested to disjunctive logic programs.

The structural translation composes four passes:

1. rewrite heads and bodies into HT negational normal form;
2. abbreviate every subformula by a fresh label atom, keeping programs
   polynomial in the input size;
3. eliminate doubly negated literals by moving them across the arrow;
4. replace negated head atoms by bar atoms guarded by a constraint.

Also provided: the exponential distributivity-based translation, and a
polarity-optimized labeling variant that is deliberately unsound for
answer-set projection (a negative control).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimitError, StageInputError
from .syntax import (
    BOT, TOP, And, Atom, Bot, Expr, Not, Or, Program, ProgramClass, Rule,
    Top, Var, bar_atom, conjuncts, disjunction, disjuncts, conjunction,
    is_ht_literal, label_atom, program_in_class, program_size, subformulas,
)


@dataclass
class AtomTable:
    """Bookkeeping for the generated alphabets.

    Labels are keyed by structural equality, so identical subformulas
    share one label; the first occurrence in program order receives the
    lowest index.
    """

    user: frozenset[Atom] = frozenset()
    labels: dict[Expr, Atom] = field(default_factory=dict)
    bars: dict[Atom, Atom] = field(default_factory=dict)
    next_label_index: int = 0

    def label(self, expr: Expr) -> Atom:
        atom = self.labels.get(expr)
        if atom is None:
            atom = label_atom(self.next_label_index)
            self.next_label_index += 1
            self.labels[expr] = atom
        return atom

    def bar(self, atom: Atom) -> Atom:
        barred = self.bars.get(atom)
        if barred is None:
            barred = bar_atom(atom)
            self.bars[atom] = barred
        return barred

    def formula_of(self, label: Atom) -> Expr:
        for expr, atom in self.labels.items():
            if atom == label:
                return expr
        raise KeyError(label.name)


@dataclass(frozen=True)
class TranslationReport:
    input_size: int
    output_size: int
    rules_in: int
    rules_out: int
    labels_created: int
    bars_created: int
    mode: str

    def as_dict(self) -> dict[str, object]:
        return {
            "mode": self.mode,
            "input_size": self.input_size,
            "output_size": self.output_size,
            "rules_in": self.rules_in,
            "rules_out": self.rules_out,
            "labels_created": self.labels_created,
            "bars_created": self.bars_created,
        }


def normalize_nnf(expr: Expr) -> Expr:
    """HT negational normal form of an expression.

    The result is built from HT-literals, conjunctions and disjunctions,
    and has the same HT-models as the input.
    """
    if is_ht_literal(expr):
        return expr
    if isinstance(expr, And):
        return And(normalize_nnf(expr.left), normalize_nnf(expr.right))
    if isinstance(expr, Or):
        return Or(normalize_nnf(expr.left), normalize_nnf(expr.right))
    inner = expr.child
    if isinstance(inner, And):
        return Or(normalize_nnf(Not(inner.left)), normalize_nnf(Not(inner.right)))
    if isinstance(inner, Or):
        return And(normalize_nnf(Not(inner.left)), normalize_nnf(Not(inner.right)))
    # expr = not not x with x compound
    x = inner.child
    if isinstance(x, Not):
        return normalize_nnf(Not(x.child))
    if isinstance(x, And):
        return And(normalize_nnf(Not(Not(x.left))), normalize_nnf(Not(Not(x.right))))
    return Or(normalize_nnf(Not(Not(x.left))), normalize_nnf(Not(Not(x.right))))


def tr1(program: Program) -> Program:
    """Normalize every head and body into HT-NNF."""
    return Program(
        tuple(Rule(normalize_nnf(r.head), normalize_nnf(r.body))
              for r in program.rules),
        program.alphabet,
    )


def _require(program: Program, cls: ProgramClass, stage: str) -> None:
    if not program_in_class(program, cls):
        raise StageInputError(
            f"{stage} expects a program in class {cls.name.lower()}")


def tr2(program: Program, table: AtomTable, *, polarity: bool = False,
        simplify: bool = False) -> Program:
    """Label every subformula, flattening rules to label-level shape.

    With ``polarity`` set, only the direction needed for the position of
    each occurrence is emitted (body: introduction, head: elimination);
    this optimization is unsound for answer-set projection and exists as
    a negative control.  With ``simplify``, the truth constants keep
    their own place instead of receiving labels.
    """
    _require(program, ProgramClass.NNF, "tr2")

    occurrences: dict[Expr, set[str]] = {}
    order: list[Expr] = []
    for rule in program.rules:
        for position, root in (("head", rule.head), ("body", rule.body)):
            for sub in subformulas(root, ht_atomic=True):
                if sub not in occurrences:
                    occurrences[sub] = set()
                    order.append(sub)
                occurrences[sub].add(position)

    def lab(expr: Expr) -> Expr:
        if simplify and isinstance(expr, (Top, Bot)):
            return expr
        return Var(table.label(expr))

    for sub in order:
        lab(sub)

    main = [Rule(lab(r.head), lab(r.body)) for r in program.rules]
    aux: list[Rule] = []
    for sub in order:
        if simplify and isinstance(sub, (Top, Bot)):
            continue
        lv = lab(sub)
        where = occurrences[sub]
        if is_ht_literal(sub):
            intro = [Rule(lv, sub)]
            elim = [Rule(sub, lv)]
        elif isinstance(sub, And):
            intro = [Rule(lv, And(lab(sub.left), lab(sub.right)))]
            elim = [Rule(lab(sub.left), lv), Rule(lab(sub.right), lv)]
        else:
            intro = [Rule(lv, lab(sub.left)), Rule(lv, lab(sub.right))]
            elim = [Rule(Or(lab(sub.left), lab(sub.right)), lv)]
        if not polarity:
            if isinstance(sub, Or):
                aux.extend(elim + intro)
            else:
                aux.extend(intro + elim)
        else:
            if "body" in where:
                aux.extend(intro)
            if "head" in where:
                aux.extend(elim)

    return Program(tuple(main + aux), program.alphabet)


def _negate(expr: Expr) -> Expr:
    # literal-level negation with constant folding, for moved literals
    if isinstance(expr, Top):
        return BOT
    if isinstance(expr, Bot):
        return TOP
    return Not(expr)


def _is_double_negation(expr: Expr) -> bool:
    return isinstance(expr, Not) and isinstance(expr.child, Not)


def tr3(program: Program) -> Program:
    """Eliminate doubly negated literals from heads and bodies.

    A head literal ``not not p`` becomes a body literal ``not p``; a
    body literal ``not not q`` becomes a head literal ``not q``.  Head
    occurrences are removed left-to-right before body occurrences.
    """
    _require(program, ProgramClass.GDLP_HT, "tr3")
    out = []
    for rule in program.rules:
        head_lits = disjuncts(rule.head)
        body_lits = conjuncts(rule.body)
        if not any(_is_double_negation(l) for l in head_lits + body_lits):
            out.append(rule)
            continue
        new_body = list(body_lits)
        new_head = []
        for lit in head_lits:
            if _is_double_negation(lit):
                new_body.append(_negate(lit.child.child))
            else:
                new_head.append(lit)
        final_body = []
        for lit in new_body:
            if _is_double_negation(lit):
                new_head.append(_negate(lit.child.child))
            else:
                final_body.append(lit)
        # neutral elements introduced by moving literals are dropped
        head_parts = [l for l in new_head if not isinstance(l, Bot)]
        body_parts = [l for l in final_body if not isinstance(l, Top)]
        out.append(Rule(disjunction(head_parts), conjunction(body_parts)))
    return Program(tuple(out), program.alphabet)


def tr4(program: Program, table: AtomTable) -> Program:
    """Replace negated head atoms by bar atoms.

    For every atom p with ``not p`` in some head, each such occurrence
    becomes the bar atom of p, and the constraint ``:- p, n_p`` plus the
    rule ``n_p :- not p`` are appended once.
    """
    _require(program, ProgramClass.GENERALIZED_DISJUNCTIVE, "tr4")
    barred: list[Atom] = []
    rules = []
    for rule in program.rules:
        lits = disjuncts(rule.head)
        if not any(isinstance(l, Not) and isinstance(l.child, Var) for l in lits):
            rules.append(rule)
            continue
        new_lits = []
        for lit in lits:
            if isinstance(lit, Not) and isinstance(lit.child, Var):
                atom = lit.child.atom
                if atom not in barred:
                    barred.append(atom)
                new_lits.append(Var(table.bar(atom)))
            else:
                new_lits.append(lit)
        rules.append(Rule(disjunction(new_lits), rule.body))
    for atom in barred:
        bar = table.bar(atom)
        rules.append(Rule(BOT, And(Var(atom), Var(bar))))
        rules.append(Rule(Var(bar), Not(Var(atom))))
    return Program(tuple(rules), program.alphabet)


def _structural_pipeline(program: Program, *, polarity: bool = False,
                         simplify: bool = False
                         ) -> tuple[Program, AtomTable, TranslationReport]:
    table = AtomTable(user=frozenset(program.alphabet))
    staged = tr1(program)
    staged = tr2(staged, table, polarity=polarity, simplify=simplify)
    staged = tr3(staged)
    staged = tr4(staged, table)
    _require(staged, ProgramClass.DISJUNCTIVE, "pipeline output")
    report = TranslationReport(
        input_size=program_size(program),
        output_size=program_size(staged),
        rules_in=len(program.rules),
        rules_out=len(staged.rules),
        labels_created=table.next_label_index,
        bars_created=len(table.bars),
        mode="polarity" if polarity else "structural",
    )
    return staged, table, report


def translate_structural(program: Program, simplify: bool = False
                         ) -> tuple[Program, TranslationReport]:
    """Polynomial, strongly faithful, modular translation into a
    disjunctive program over user, label and bar atoms."""
    translated, _, report = _structural_pipeline(program, simplify=simplify)
    return translated, report


def translate_polarity_variant(program: Program, simplify: bool = False
                               ) -> tuple[Program, TranslationReport]:
    """Polarity-reduced labeling: smaller output, unsound projection."""
    translated, _, report = _structural_pipeline(
        program, polarity=True, simplify=simplify)
    return translated, report


class _NodeBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise ResourceLimitError(
                f"distributive expansion exceeded {self.limit} nodes")


def _dnf(expr: Expr, budget: _NodeBudget) -> list[list[Expr]]:
    if is_ht_literal(expr):
        budget.charge(1)
        return [[expr]]
    if isinstance(expr, Or):
        return _dnf(expr.left, budget) + _dnf(expr.right, budget)
    left = _dnf(expr.left, budget)
    right = _dnf(expr.right, budget)
    budget.charge(sum(len(a) + len(b) for a in left for b in right))
    return [a + b for a in left for b in right]


def _cnf(expr: Expr, budget: _NodeBudget) -> list[list[Expr]]:
    if is_ht_literal(expr):
        budget.charge(1)
        return [[expr]]
    if isinstance(expr, And):
        return _cnf(expr.left, budget) + _cnf(expr.right, budget)
    left = _cnf(expr.left, budget)
    right = _cnf(expr.right, budget)
    budget.charge(sum(len(a) + len(b) for a in left for b in right))
    return [a + b for a in left for b in right]


def translate_distributive(program: Program, max_nodes: int = 1_000_000
                           ) -> tuple[Program, TranslationReport]:
    """Exponential label-free translation via distributivity.

    Bodies expand to disjunctive normal form, heads to conjunctive
    normal form, and every rule splits into one rule per (clause, term)
    pair.  The expansion is guarded by ``max_nodes``.
    """
    staged = tr1(program)
    budget = _NodeBudget(max_nodes)
    rules = []
    for rule in staged.rules:
        clauses = _cnf(rule.head, budget)
        terms = _dnf(rule.body, budget)
        for term in terms:
            for clause in clauses:
                rules.append(Rule(disjunction(clause), conjunction(term)))
    mid = Program(tuple(rules), program.alphabet)
    table = AtomTable(user=frozenset(program.alphabet))
    translated = tr4(tr3(mid), table)
    _require(translated, ProgramClass.DISJUNCTIVE, "pipeline output")
    report = TranslationReport(
        input_size=program_size(program),
        output_size=program_size(translated),
        rules_in=len(program.rules),
        rules_out=len(translated.rules),
        labels_created=0,
        bars_created=len(table.bars),
        mode="distributive",
    )
    return translated, report
