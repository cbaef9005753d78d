"""Surface syntax: parser and printers for nested and DLV-style programs.

Grammar (EBNF)::

    program  := { rule } ;
    rule     := [ expr ] [ ":-" expr ] "." ;
    expr     := disj ;
    disj     := conj { ("|" | ";" | "v") conj } ;
    conj     := neg { ("," | "&") neg } ;
    neg      := { "not" | "-" } prim ;
    prim     := "true" | "false" | atom | "(" expr ")" ;
    comment  := "%" to end of line ;

A rule without ":-" has body ``true``; a rule without a head has head
``false``.  ``not`` and ``-`` both denote negation; ``v`` in infix
position is disjunction, elsewhere it is an ordinary atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotDisjunctiveError, ParseError
from .syntax import (
    BAR_PREFIX, BOT, LABEL_PREFIX, TOP, And, Atom, AtomKind, Bot, Expr, Not,
    Or, Program, ProgramClass, Rule, Top, Var, classify, conjuncts, disjuncts,
    _rule_in_class,
)

_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r]+)
      | (?P<comment>%[^\n]*)
      | (?P<nl>\n)
      | (?P<arrow>:-)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<punct>[().,;&|-])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"not": "not", "true": "true", "false": "false"}
_PUNCT = {
    ".": "dot", "(": "lparen", ")": "rparen", ",": "and", "&": "and",
    ";": "or", "|": "or", "-": "not",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, origin: str) -> list[Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             origin, line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "nl":
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(lexeme)
        else:
            if kind == "arrow":
                tok_kind = "arrow"
            elif kind == "ident":
                tok_kind = _KEYWORDS.get(lexeme, "ident")
            else:
                tok_kind = _PUNCT[lexeme]
            tokens.append(Token(tok_kind, lexeme, line, col))
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], origin: str, allow_internal: bool):
        self.tokens = tokens
        self.pos = 0
        self.origin = origin
        self.allow_internal = allow_internal

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, self.origin, tok.line, tok.col)

    def expect(self, kind: str, what: str) -> Token:
        if self.peek().kind != kind:
            raise self.error(f"expected {what}, found {self.peek().text!r}")
        return self.advance()

    def program(self) -> Program:
        rules = []
        while self.peek().kind != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))

    def rule(self) -> Rule:
        tok = self.peek()
        if tok.kind == "dot":
            raise self.error("empty rule")
        head = None
        body = None
        if tok.kind != "arrow":
            head = self.expr()
        if self.peek().kind == "arrow":
            self.advance()
            body = self.expr()
        self.expect("dot", "'.'")
        return Rule(head if head is not None else BOT,
                    body if body is not None else TOP)

    def expr(self) -> Expr:
        return self.disj()

    def disj(self) -> Expr:
        e = self.conj()
        while True:
            tok = self.peek()
            if tok.kind == "or" or (tok.kind == "ident" and tok.text == "v"):
                self.advance()
                e = Or(e, self.conj())
            else:
                return e

    def conj(self) -> Expr:
        e = self.neg()
        while self.peek().kind == "and":
            self.advance()
            e = And(e, self.neg())
        return e

    def neg(self) -> Expr:
        count = 0
        while self.peek().kind == "not":
            self.advance()
            count += 1
        e = self.prim()
        for _ in range(count):
            e = Not(e)
        return e

    def prim(self) -> Expr:
        tok = self.peek()
        if tok.kind == "true":
            self.advance()
            return TOP
        if tok.kind == "false":
            self.advance()
            return BOT
        if tok.kind == "ident":
            self.advance()
            return Var(self.atom(tok))
        if tok.kind == "lparen":
            self.advance()
            e = self.expr()
            self.expect("rparen", "')'")
            return e
        raise self.error(f"expected an expression, found {tok.text!r}")

    def atom(self, tok: Token) -> Atom:
        name = tok.text
        if name.startswith((LABEL_PREFIX, BAR_PREFIX)):
            if not self.allow_internal:
                raise self.error(
                    f"atom {name!r} uses a reserved prefix", tok)
            kind = AtomKind.LABEL if name.startswith(LABEL_PREFIX) else AtomKind.BAR
            try:
                return Atom(name, kind)
            except ValueError as exc:
                raise self.error(str(exc), tok) from None
        try:
            return Atom(name, AtomKind.USER)
        except ValueError as exc:
            raise self.error(str(exc), tok) from None


def parse(text: str, origin: str = "<string>",
          allow_internal: bool = False) -> Program:
    """Parse program text.

    ``allow_internal`` admits label (``l_``) and bar (``n_``) atoms, as
    needed to re-read translated output; user input rejects them.
    """
    return _Parser(_tokenize(text, origin), origin, allow_internal).program()


def parse_expression(text: str, origin: str = "<string>",
                     allow_internal: bool = False) -> Expr:
    parser = _Parser(_tokenize(text, origin), origin, allow_internal)
    e = parser.expr()
    parser.expect("eof", "end of input")
    return e


_PREC_OR, _PREC_AND, _PREC_NOT, _PREC_ATOM = 1, 2, 3, 4


def _prec(expr: Expr) -> int:
    if isinstance(expr, Or):
        return _PREC_OR
    if isinstance(expr, And):
        return _PREC_AND
    if isinstance(expr, Not):
        return _PREC_NOT
    return _PREC_ATOM


def format_expr(expr: Expr) -> str:
    """Nested syntax for an expression; reparsing restores the tree."""
    return _fmt(expr, _PREC_OR)


def _fmt(expr: Expr, min_prec: int) -> str:
    if isinstance(expr, Top):
        s = "true"
    elif isinstance(expr, Bot):
        s = "false"
    elif isinstance(expr, Var):
        s = expr.atom.name
    elif isinstance(expr, Not):
        s = "not " + _fmt(expr.child, _PREC_NOT)
    elif isinstance(expr, And):
        # right operand at a higher level keeps reparsing left-associative
        s = _fmt(expr.left, _PREC_AND) + ", " + _fmt(expr.right, _PREC_NOT)
    else:
        s = _fmt(expr.left, _PREC_OR) + " v " + _fmt(expr.right, _PREC_AND)
    if _prec(expr) < min_prec:
        return "(" + s + ")"
    return s


def format_rule(rule: Rule) -> str:
    if rule.head == BOT:
        return ":- " + format_expr(rule.body) + "."
    if rule.body == TOP:
        return format_expr(rule.head) + "."
    return format_expr(rule.head) + " :- " + format_expr(rule.body) + "."


def print_nested(program: Program) -> str:
    """Nested syntax, one rule per line; empty program prints nothing."""
    return "".join(format_rule(r) + "\n" for r in program.rules)


def _dlv_literal(expr: Expr) -> str:
    if isinstance(expr, Not):
        return "not " + _dlv_literal(expr.child)
    if isinstance(expr, Var):
        return expr.atom.name
    if isinstance(expr, Top):
        return "true"
    return "false"


def format_dlv_rule(rule: Rule) -> str:
    body = None if rule.body == TOP else \
        ", ".join(_dlv_literal(c) for c in conjuncts(rule.body))
    if rule.head == BOT:
        return ":- " + (body if body is not None else "true") + "."
    head = " v ".join(_dlv_literal(d) for d in disjuncts(rule.head))
    if body is None:
        return head + "."
    return head + " :- " + body + "."


def print_dlv(program: Program) -> str:
    """DLV-compatible disjunctive syntax, one rule per line.

    The program must classify as disjunctive (or basic); otherwise the
    first offending rule is reported.
    """
    if classify(program).value > ProgramClass.DISJUNCTIVE.value:
        bad = next(r for r in program.rules
                   if not _rule_in_class(r, ProgramClass.DISJUNCTIVE))
        raise NotDisjunctiveError(
            f"not in disjunctive form: {format_rule(bad)}")
    return "".join(format_dlv_rule(r) + "\n" for r in program.rules)
