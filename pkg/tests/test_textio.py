import pytest
from hypothesis import given, settings, strategies as st

from nlp2dlp import (
    BOT, TOP, And, Not, NotDisjunctiveError, Or, ParseError, Program, Rule,
    Var, bar_atom, classify, format_expr, parse, parse_expression, print_dlv,
    print_nested, user_atom,
)

p, q, r = Var(user_atom("p")), Var(user_atom("q")), Var(user_atom("r"))


def test_parse_examples():
    prog = parse("r v (p, q).")
    assert prog.rules == (Rule(Or(r, And(p, q)), TOP),)
    prog = parse("a :- not not b.")
    a, b = Var(user_atom("a")), Var(user_atom("b"))
    assert prog.rules == (Rule(a, Not(Not(b))),)


def test_parse_fact_and_constraint_forms():
    assert parse("p.").rules == (Rule(p, TOP),)
    assert parse(":- p, q.").rules == (Rule(BOT, And(p, q)),)
    assert parse("p :- true.").rules == (Rule(p, TOP),)
    assert parse("- p :- q.").rules == (Rule(Not(p), q),)


def test_parse_rejects_reserved_prefixes():
    with pytest.raises(ParseError):
        parse(":- p, n_p.")
    with pytest.raises(ParseError):
        parse("l_0 :- p.")
    # re-reading translated output is allowed explicitly
    prog = parse("n_p :- not p.", allow_internal=True)
    assert prog.rules == (Rule(Var(bar_atom(user_atom("p"))), Not(p)),)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse("p :- q\nr ::.", origin="bad.lp")
    err = info.value
    assert err.origin == "bad.lp"
    assert err.line == 2
    with pytest.raises(ParseError, match="empty rule"):
        parse(".")
    with pytest.raises(ParseError):
        parse("p :- ?.")
    with pytest.raises(ParseError):
        parse("p :- q")  # missing final dot


def test_v_is_disjunction_only_in_infix_position():
    assert parse("v.").rules == (Rule(Var(user_atom("v")), TOP),)
    assert parse("p v q.").rules == (Rule(Or(p, q), TOP),)
    assert parse("v v v.").rules == (
        Rule(Or(Var(user_atom("v")), Var(user_atom("v"))), TOP),)


def test_precedence_and_comments():
    prog = parse("p v q, not r. % trailing comment\n% full-line comment\n")
    assert prog.rules == (Rule(Or(p, And(q, Not(r))), TOP),)
    assert parse_expression("(p v q), r") == And(Or(p, q), r)
    assert parse_expression("not (p, q)") == Not(And(p, q))


def test_print_nested_examples():
    assert print_nested(Program((Rule(Not(Not(p)), TOP),))) == "not not p.\n"
    assert print_nested(Program((Rule(BOT, And(p, q)),))) == ":- p, q.\n"
    assert print_nested(Program()) == ""


def test_format_expr_parenthesizes_to_preserve_structure():
    assert format_expr(Or(p, And(q, r))) == "p v q, r"
    assert format_expr(And(Or(p, q), r)) == "(p v q), r"
    assert format_expr(Not(Or(p, q))) == "not (p v q)"
    assert format_expr(And(p, And(q, r))) == "p, (q, r)"


def test_round_trip_over_corpus(corpus):
    for program in corpus:
        assert parse(print_nested(program)).rules == program.rules


_atom_names = st.sampled_from(["a", "b", "c", "d"])


def _exprs():
    leaves = st.one_of(
        st.just(TOP), st.just(BOT),
        _atom_names.map(lambda n: Var(user_atom(n))))
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            kids.map(Not),
            st.tuples(kids, kids).map(lambda t: And(*t)),
            st.tuples(kids, kids).map(lambda t: Or(*t))),
        max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(head=_exprs(), body=_exprs())
def test_round_trip_property(head, body):
    program = Program((Rule(head, body),))
    assert parse(print_nested(program)).rules == program.rules


def test_print_dlv_examples():
    n_p = Var(bar_atom(user_atom("p")))
    assert print_dlv(Program((Rule(n_p, Not(p)),))) == "n_p :- not p.\n"
    assert print_dlv(Program((Rule(BOT, And(p, n_p)),))) == ":- p, n_p.\n"
    assert print_dlv(Program((Rule(Or(p, q), And(r, Not(q))),))) == \
        "p v q :- r, not q.\n"
    assert print_dlv(Program((Rule(p, TOP),))) == "p.\n"


def test_print_dlv_rejects_nested_programs():
    nested = Program((Rule(Or(r, And(p, q)), TOP),))
    with pytest.raises(NotDisjunctiveError, match="not in disjunctive form"):
        print_dlv(nested)


def test_print_dlv_output_reparses_disjunctive(corpus):
    from nlp2dlp import ProgramClass, translate_structural
    for program in corpus[:40]:
        translated, _ = translate_structural(program)
        back = parse(print_dlv(translated), allow_internal=True)
        assert classify(back).value <= ProgramClass.DISJUNCTIVE.value
