import pytest

from nlp2dlp import (
    TOP, And, Atom, AtomKind, Not, Or, Program, ProgramClass, Rule, Var,
    bar_atom, classify, expr_size, label_atom, program_in_class, program_size,
    subformulas, user_atom,
)
from nlp2dlp.syntax import walk

p, q, r = Var(user_atom("p")), Var(user_atom("q")), Var(user_atom("r"))


def test_atom_kinds_and_validation():
    assert user_atom("p").kind is AtomKind.USER
    assert label_atom(3).name == "l_3"
    assert bar_atom(user_atom("p")).name == "n_p"
    with pytest.raises(ValueError):
        user_atom("l_0")
    with pytest.raises(ValueError):
        user_atom("n_p")
    with pytest.raises(ValueError):
        user_atom("Pascal")
    with pytest.raises(ValueError):
        Atom("l_x", AtomKind.LABEL)
    with pytest.raises(ValueError):
        bar_atom(label_atom(0))


def test_classify_examples():
    # {p :- not q} satisfies the generalized-disjunctive shape; with no
    # negated head it is already disjunctive, the more specific class
    neg_body = Program((Rule(p, Not(q)),))
    assert program_in_class(neg_body, ProgramClass.GENERALIZED_DISJUNCTIVE)
    assert classify(neg_body) is ProgramClass.DISJUNCTIVE
    nested_head = Program((Rule(Or(r, And(p, q)), TOP),))
    assert classify(nested_head) is ProgramClass.NNF
    assert classify(Program((Rule(Or(p, q), r),))) is ProgramClass.BASIC


def test_classify_chain_is_monotone(corpus):
    order = list(ProgramClass)
    for program in corpus:
        cls = classify(program)
        for larger in order[order.index(cls):]:
            assert program_in_class(program, larger)


def test_classify_ht_literal_heads():
    doubled = Program((Rule(Or(p, Not(Not(q))), TOP),))
    assert classify(doubled) is ProgramClass.GDLP_HT
    neg_head = Program((Rule(Not(q), r),))
    assert classify(neg_head) is ProgramClass.GENERALIZED_DISJUNCTIVE


def test_subformulas_order_and_dedup():
    e = Or(r, And(p, q))
    assert subformulas(e) == [r, p, q, And(p, q), e]
    assert subformulas(Not(Not(p)), ht_atomic=True) == [Not(Not(p))]
    assert subformulas(And(p, p)) == [p, And(p, p)]


def test_subformulas_bounded_by_node_count(corpus):
    for program in corpus:
        for rule in program.rules:
            for e in (rule.head, rule.body):
                subs = subformulas(e)
                assert len(subs) <= expr_size(e)
                nodes = set(walk(e))
                assert all(s in nodes for s in subs)


def test_program_size_examples():
    assert program_size(Program()) == 0
    assert program_size(Program((Rule(p, TOP),))) == 3
    assert program_size(Program((Rule(Or(r, And(p, q)), TOP),))) == 7


def test_program_union_deduplicates():
    one = Program((Rule(p, TOP),))
    two = Program((Rule(p, TOP), Rule(q, TOP)))
    assert one.union(two).rules == (Rule(p, TOP), Rule(q, TOP))
    assert one.union(one).rules == one.rules


def test_alphabet_covers_occurring_atoms():
    prog = Program((Rule(p, q),), alphabet=frozenset({user_atom("z")}))
    assert prog.var() == {p.atom, q.atom}
    assert prog.var() | {user_atom("z")} == prog.alphabet
