"""Concrete syntax: lexer, parser and conversion to closed terms.

Grammar (bodies of lambdas and lets extend maximally to the right,
application and addition associate to the left):

    expr ::= "\\" ident "." expr
           | "let" ident "=" expr "in" expr
           | sum
    sum  ::= app ("+" app)*
    app  ::= atom atom*
    atom ::= ident | integer | "error" | "(" expr ")"

Parsing builds a named tree first, rejects unbound identifiers (terms are
closed), then converts to a parametric term by environment-passing
closure conversion: each binder becomes an embedded function extending
the environment with its token's occurrence.  Inner bindings shadow outer
ones.  Every construct can also be tagged with the source position of its
first lexeme.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .lang import FULL, App, Err, Lam, Let, Lit, Plus
from .signature import Signature
from .term import Cxt, Term, Var, inject

KEYWORDS = frozenset({"let", "in", "error"})

_IDENT = re.compile(r"[a-z][a-zA-Z0-9]*")
_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True, order=True)
class SrcPos:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(ValueError):
    def __init__(self, pos: SrcPos, message: str):
        super().__init__(f"{pos}: {message}")
        self.pos = pos
        self.message = message


# Named intermediate tree; also the shape the random generators produce.

@dataclass(frozen=True)
class NVar:
    name: str
    pos: SrcPos


@dataclass(frozen=True)
class NLam:
    name: str
    body: Any
    pos: SrcPos


@dataclass(frozen=True)
class NApp:
    fn: Any
    arg: Any
    pos: SrcPos


@dataclass(frozen=True)
class NLit:
    value: int
    pos: SrcPos


@dataclass(frozen=True)
class NPlus:
    lhs: Any
    rhs: Any
    pos: SrcPos


@dataclass(frozen=True)
class NLet:
    name: str
    bound: Any
    body: Any
    pos: SrcPos


@dataclass(frozen=True)
class NErr:
    pos: SrcPos


NAst = Any

_NOWHERE = SrcPos(1, 1)


def nvar(name):
    return NVar(name, _NOWHERE)


def nlam(name, body):
    return NLam(name, body, _NOWHERE)


def napp(fn, arg):
    return NApp(fn, arg, _NOWHERE)


def nlit(value):
    return NLit(value, _NOWHERE)


def nplus(lhs, rhs):
    return NPlus(lhs, rhs, _NOWHERE)


def nlet(name, bound, body):
    return NLet(name, bound, body, _NOWHERE)


def nerr():
    return NErr(_NOWHERE)


@dataclass(frozen=True)
class _Token:
    kind: str  # ident, int, keyword or a literal lexeme
    text: str
    pos: SrcPos


def _lex(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            col += 1
            i += 1
            continue
        pos = SrcPos(line, col)
        if ch in "\\.()=+":
            tokens.append(_Token(ch, ch, pos))
            i += 1
            col += 1
            continue
        m = _INT.match(text, i)
        if m:
            tokens.append(_Token("int", m.group(), pos))
            col += len(m.group())
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group()
            kind = word if word in KEYWORDS else "ident"
            tokens.append(_Token(kind, word, pos))
            col += len(word)
            i = m.end()
            continue
        raise ParseError(pos, f"unexpected token {ch!r}")
    tokens.append(_Token("eof", "", SrcPos(line, col)))
    return tokens


_ATOM_STARTS = frozenset({"ident", "int", "error", "("})

# recursive descent plus the later conversion and folds all recurse once
# per nesting level; stay well clear of the host's recursion limit
MAX_NESTING = 160


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self.unexpected()
        return self.advance()

    def unexpected(self) -> ParseError:
        tok = self.peek()
        if tok.kind == "eof":
            # point at the construct left unterminated, not past the end
            pos = self.tokens[self.i - 1].pos if self.i > 0 else tok.pos
            return ParseError(pos, "unexpected end of input")
        return ParseError(tok.pos, f"unexpected token {tok.text!r}")

    def expr(self) -> NAst:
        tok = self.peek()
        if self.depth >= MAX_NESTING:
            raise ParseError(tok.pos, f"nesting too deep (limit {MAX_NESTING})")
        self.depth += 1
        try:
            if tok.kind == "\\":
                self.advance()
                name = self.expect("ident").text
                self.expect(".")
                return NLam(name, self.expr(), tok.pos)
            if tok.kind == "let":
                self.advance()
                name = self.expect("ident").text
                self.expect("=")
                bound = self.expr()
                self.expect("in")
                return NLet(name, bound, self.expr(), tok.pos)
            return self.sum()
        finally:
            self.depth -= 1

    def sum(self) -> NAst:
        node = self.app()
        while self.peek().kind == "+":
            self.advance()
            node = NPlus(node, self.app(), node.pos)
        return node

    def app(self) -> NAst:
        node = self.atom()
        while self.peek().kind in _ATOM_STARTS:
            node = NApp(node, self.atom(), node.pos)
        return node

    def atom(self) -> NAst:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return NVar(tok.text, tok.pos)
        if tok.kind == "int":
            self.advance()
            return NLit(int(tok.text), tok.pos)
        if tok.kind == "error":
            self.advance()
            return NErr(tok.pos)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise self.unexpected()


def parse_named(text: str) -> NAst:
    """Parse to the named tree, checking closedness."""
    parser = _Parser(_lex(text))
    ast = parser.expr()
    if parser.peek().kind != "eof":
        raise parser.unexpected()
    _check_closed(ast, frozenset())
    return ast


def _check_closed(ast: NAst, bound: frozenset[str]) -> None:
    match ast:
        case NVar(name, pos):
            if name not in bound:
                raise ParseError(pos, f"unbound identifier {name!r}")
        case NLam(name, body, _):
            _check_closed(body, bound | {name})
        case NLet(name, expr, body, _):
            _check_closed(expr, bound)
            _check_closed(body, bound | {name})
        case NApp(fn, arg, _) | NPlus(fn, arg, _):
            _check_closed(fn, bound)
            _check_closed(arg, bound)
        case NLit(_, _) | NErr(_):
            pass


def to_preterm(
    ast: NAst,
    env: Mapping[str, Cxt],
    mk: Callable[[Any, SrcPos], Cxt],
) -> Cxt:
    """Closure-convert a closed named tree into a preterm.

    ``env`` maps bound names to the occurrence their binder passed in;
    the conversion never looks at tokens, it only places them.
    """
    match ast:
        case NVar(name, _):
            return env[name]
        case NLam(name, body, pos):
            return mk(
                Lam(lambda tok: to_preterm(body, {**env, name: Var(tok)}, mk)), pos
            )
        case NLet(name, bound, body, pos):
            return mk(
                Let(
                    to_preterm(bound, env, mk),
                    lambda tok: to_preterm(body, {**env, name: Var(tok)}, mk),
                ),
                pos,
            )
        case NApp(fn, arg, pos):
            return mk(App(to_preterm(fn, env, mk), to_preterm(arg, env, mk)), pos)
        case NPlus(lhs, rhs, pos):
            return mk(Plus(to_preterm(lhs, env, mk), to_preterm(rhs, env, mk)), pos)
        case NLit(value, pos):
            return mk(Lit(value), pos)
        case NErr(pos):
            return mk(Err(), pos)
    raise TypeError(f"not a named tree: {ast!r}")


def term_of_named(ast: NAst, sig: Signature = FULL, annotate: bool = False) -> Term:
    """Build a closed term from an already-checked named tree."""
    if annotate:
        mk = lambda node, pos: inject(node, sig, ann=pos)
    else:
        mk = lambda node, pos: inject(node, sig)
    return Term(lambda: to_preterm(ast, {}, mk))


def parse(text: str) -> Term:
    """Parse a closed expression; raises :class:`ParseError` otherwise."""
    return term_of_named(parse_named(text))


def parse_ann(text: str) -> Term:
    """Like :func:`parse`, tagging every node with its first lexeme's position."""
    return term_of_named(parse_named(text), annotate=True)
