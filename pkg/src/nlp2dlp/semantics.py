"""Brute-force semantics engine: classical models, reducts, answer sets,
here-and-there (HT) valuation, HT-models and equilibrium models.

Everything works by explicit enumeration over a caller-supplied alphabet
and is intended as a desk-scale oracle, not a solver.  Classical model
enumeration is bit-parallel: the truth of an expression over all 2^n
interpretations is a single big integer, one bit per interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .syntax import (
    BOT, TOP, And, Atom, Expr, Not, Or, Program, Rule, Top, Var,
    negation_free,
)

DEFAULT_CAP = 20

Interpretation = frozenset[Atom]


class World(Enum):
    H = "H"
    T = "T"


@dataclass(frozen=True)
class HTInterpretation:
    here: Interpretation
    there: Interpretation

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError("the 'here' world must be contained in 'there'")

    def is_total(self) -> bool:
        return self.here == self.there


def _check_cap(alphabet: Iterable[Atom], cap: int) -> list[Atom]:
    atoms = sorted(set(alphabet))
    if len(atoms) > cap:
        raise ResourceLimitError(
            f"alphabet of {len(atoms)} atoms exceeds the enumeration cap {cap}")
    return atoms


def eval_classical(expr: Expr, interp: Interpretation) -> bool:
    """Two-valued truth of an expression under a set of atoms."""
    if isinstance(expr, Var):
        return expr.atom in interp
    if isinstance(expr, Not):
        return not eval_classical(expr.child, interp)
    if isinstance(expr, And):
        return eval_classical(expr.left, interp) and \
            eval_classical(expr.right, interp)
    if isinstance(expr, Or):
        return eval_classical(expr.left, interp) or \
            eval_classical(expr.right, interp)
    return isinstance(expr, Top)


def _reduce_expr(expr: Expr, interp: Interpretation) -> Expr:
    if isinstance(expr, Not):
        # maximal negated subexpression: nested negations are untouched
        return BOT if eval_classical(expr.child, interp) else TOP
    if isinstance(expr, And):
        return And(_reduce_expr(expr.left, interp),
                   _reduce_expr(expr.right, interp))
    if isinstance(expr, Or):
        return Or(_reduce_expr(expr.left, interp),
                  _reduce_expr(expr.right, interp))
    return expr


def reduct(program: Program, interp: Interpretation) -> Program:
    """Negation-free program obtained by fixing negated subexpressions
    to their classical truth value under ``interp``."""
    return Program(
        tuple(Rule(_reduce_expr(r.head, interp), _reduce_expr(r.body, interp))
              for r in program.rules),
        program.alphabet,
    )


@lru_cache(maxsize=None)
def _atom_pattern(n: int, j: int) -> int:
    """Bitmap over 2^n interpretation indices: bit i is (i >> j) & 1."""
    block = 1 << j
    pat = ((1 << block) - 1) << block
    width = block << 1
    total = 1 << n
    while width < total:
        pat |= pat << width
        width <<= 1
    return pat


def _expr_bitmap(expr: Expr, table: dict[Atom, int], full: int) -> int:
    if isinstance(expr, Var):
        return table.get(expr.atom, 0)
    if isinstance(expr, Not):
        return full ^ _expr_bitmap(expr.child, table, full)
    if isinstance(expr, And):
        return _expr_bitmap(expr.left, table, full) & \
            _expr_bitmap(expr.right, table, full)
    if isinstance(expr, Or):
        return _expr_bitmap(expr.left, table, full) | \
            _expr_bitmap(expr.right, table, full)
    return full if isinstance(expr, Top) else 0


def _models_bitmap(rules: Iterable[Rule], atoms: list[Atom]) -> int:
    """Bitmap of classical models of {B(r) -> H(r)} over the atom list."""
    n = len(atoms)
    full = (1 << (1 << n)) - 1
    table = {atom: _atom_pattern(n, j) for j, atom in enumerate(atoms)}
    bm = full
    for r in rules:
        bm &= (full ^ _expr_bitmap(r.body, table, full)) | \
            _expr_bitmap(r.head, table, full)
        if not bm:
            break
    return bm


def _iter_bits(bm: int) -> Iterator[int]:
    while bm:
        low = bm & -bm
        yield low.bit_length() - 1
        bm ^= low


def _index_to_interp(index: int, atoms: list[Atom]) -> Interpretation:
    return frozenset(a for j, a in enumerate(atoms) if (index >> j) & 1)


def classical_models(program: Program, alphabet: Iterable[Atom],
                     cap: int = DEFAULT_CAP) -> frozenset[Interpretation]:
    atoms = _check_cap(alphabet, cap)
    bm = _models_bitmap(program.rules, atoms)
    return frozenset(_index_to_interp(i, atoms) for i in _iter_bits(bm))


def minimal_models(program: Program, alphabet: Iterable[Atom],
                   cap: int = DEFAULT_CAP) -> frozenset[Interpretation]:
    """All subset-minimal classical models of a negation-free program."""
    if not all(negation_free(r.head) and negation_free(r.body)
               for r in program.rules):
        raise ValueError("minimal_models requires a negation-free program")
    atoms = _check_cap(alphabet, cap)
    bm = _models_bitmap(program.rules, atoms)
    indices = sorted(_iter_bits(bm), key=lambda i: (i.bit_count(), i))
    minimal: list[int] = []
    for i in indices:
        if not any(m & i == m for m in minimal):
            minimal.append(i)
    return frozenset(_index_to_interp(i, atoms) for i in minimal)


def _is_stable(program: Program, interp: Interpretation) -> bool:
    red = reduct(program, interp)
    if not interp <= red.var():
        # an atom unused by the reduct can be dropped: not minimal
        return False
    atoms = sorted(interp)
    m = len(atoms)
    bm = _models_bitmap(red.rules, atoms)
    # interp is the all-true index; stable iff no proper subset is a model
    return bm & ((1 << ((1 << m) - 1)) - 1) == 0


def answer_sets(program: Program, alphabet: Iterable[Atom],
                cap: int = DEFAULT_CAP) -> frozenset[Interpretation]:
    """All I within the alphabet that are minimal models of the reduct
    of the program with respect to I."""
    atoms = _check_cap(alphabet, cap)
    # only classical models of the rule implications are candidates
    bm = _models_bitmap(program.rules, atoms)
    found = []
    for i in _iter_bits(bm):
        interp = _index_to_interp(i, atoms)
        if _is_stable(program, interp):
            found.append(interp)
    return frozenset(found)


def eval_ht(expr: Expr, f: HTInterpretation, w: World) -> bool:
    """Truth of an expression at a world of an HT-interpretation."""
    if isinstance(expr, Var):
        return expr.atom in (f.here if w is World.H else f.there)
    if isinstance(expr, Not):
        if w is World.T:
            return not eval_ht(expr.child, f, World.T)
        return not eval_ht(expr.child, f, World.H) and \
            not eval_ht(expr.child, f, World.T)
    if isinstance(expr, And):
        return eval_ht(expr.left, f, w) and eval_ht(expr.right, f, w)
    if isinstance(expr, Or):
        return eval_ht(expr.left, f, w) or eval_ht(expr.right, f, w)
    return isinstance(expr, Top)


def _implication_holds(body: Expr, head: Expr, f: HTInterpretation,
                       w: World) -> bool:
    # clause for ->: true at w iff it holds at every world above w
    there = (not eval_ht(body, f, World.T)) or eval_ht(head, f, World.T)
    if w is World.T:
        return there
    here = (not eval_ht(body, f, World.H)) or eval_ht(head, f, World.H)
    return here and there


def is_ht_model(program: Program, f: HTInterpretation) -> bool:
    """F satisfies B(r) -> H(r) at H for every rule."""
    return all(_implication_holds(r.body, r.head, f, World.H)
               for r in program.rules)


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def ht_models(program: Program, alphabet: Iterable[Atom],
              cap: int = DEFAULT_CAP) -> frozenset[HTInterpretation]:
    atoms = _check_cap(alphabet, cap)
    n = len(atoms)
    out = []
    for t in range(1 << n):
        there = _index_to_interp(t, atoms)
        for h in _subsets(t):
            f = HTInterpretation(_index_to_interp(h, atoms), there)
            if is_ht_model(program, f):
                out.append(f)
    return frozenset(out)


def ht_equivalent(p1: Program, p2: Program, alphabet: Iterable[Atom],
                  cap: int = DEFAULT_CAP) -> bool:
    """Same HT-models over the alphabet; decides strong equivalence."""
    atoms = frozenset(alphabet)
    if not (p1.var() | p2.var()) <= atoms:
        raise ValueError("alphabet must cover both programs")
    atom_list = _check_cap(atoms, cap)
    n = len(atom_list)
    for t in range(1 << n):
        there = _index_to_interp(t, atom_list)
        for h in _subsets(t):
            f = HTInterpretation(_index_to_interp(h, atom_list), there)
            if is_ht_model(p1, f) != is_ht_model(p2, f):
                return False
    return True


def equilibrium_models(program: Program, alphabet: Iterable[Atom],
                       cap: int = DEFAULT_CAP) -> frozenset[Interpretation]:
    """Total HT-models <I,I> with no <J,I>, J a proper subset, a model."""
    atoms = _check_cap(alphabet, cap)
    n = len(atoms)
    out = []
    for t in range(1 << n):
        there = _index_to_interp(t, atoms)
        if not is_ht_model(program, HTInterpretation(there, there)):
            continue
        if any(h != t and
               is_ht_model(program, HTInterpretation(_index_to_interp(h, atoms), there))
               for h in _subsets(t)):
            continue
        out.append(there)
    return frozenset(out)
