"""A sorted core language whose evaluator has no stuck state.

Sorts are integers and arrows.  Construction checks sorts, so the only
representable terms are well-sorted ones and the evaluator can dispense
with value tags entirely: integers evaluate to raw ints, lambdas to raw
functions, and application just applies.  The single failure left is the
explicit error construct.

The host cannot carry the sort indices statically, so the checks run when
a term is built: ``t_app`` demands an arrow whose domain matches the
argument, ``t_plus`` demands integer operands, and a binder's body is
probed once with a sorted placeholder to determine the arrow sort.
Erasing sorts yields an ordinary core term with the same behaviour.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from .lang import CORE, IntV, FunV, i_app, i_err, i_lam, i_lit, i_plus
from .result import Failure, Result, Success
from .term import Term


@dataclass(frozen=True)
class TInt:
    def __str__(self) -> str:
        return "int"


@dataclass(frozen=True)
class TArrow:
    dom: "ObjType"
    cod: "ObjType"

    def __str__(self) -> str:
        return f"({self.dom} -> {self.cod})"


ObjType = TInt | TArrow
INT = TInt()


class SortMismatchError(TypeError):
    pass


@dataclass(frozen=True)
class TVar:
    sort: ObjType
    payload: Any


@dataclass(frozen=True)
class TLam:
    dom: ObjType
    body: Callable[[TVar], Any]
    sort: ObjType


@dataclass(frozen=True)
class TApp:
    fn: Any
    arg: Any
    sort: ObjType


@dataclass(frozen=True)
class TLit:
    value: int
    sort: ObjType = INT


@dataclass(frozen=True)
class TPlus:
    lhs: Any
    rhs: Any
    sort: ObjType = INT


@dataclass(frozen=True)
class TErr:
    sort: ObjType


TypedTerm = Any

_PROBE = object()


def t_lam(dom: ObjType, f: Callable[[TVar], TypedTerm]) -> TLam:
    """Typed binder; the body fixes the codomain sort."""
    body = f(TVar(dom, _PROBE))
    return TLam(dom, f, TArrow(dom, body.sort))


def t_app(fn: TypedTerm, arg: TypedTerm) -> TApp:
    if not isinstance(fn.sort, TArrow):
        raise SortMismatchError(f"applying a non-function of sort {fn.sort}")
    if fn.sort.dom != arg.sort:
        raise SortMismatchError(
            f"argument sort {arg.sort} does not match domain {fn.sort.dom}"
        )
    return TApp(fn, arg, fn.sort.cod)


def t_lit(n: int) -> TLit:
    return TLit(n)


def t_plus(lhs: TypedTerm, rhs: TypedTerm) -> TPlus:
    if lhs.sort != INT or rhs.sort != INT:
        raise SortMismatchError("addition needs integer operands")
    return TPlus(lhs, rhs)


def t_err(sort: ObjType) -> TErr:
    return TErr(sort)


def typed_eval(t: TypedTerm) -> Result:
    """Evaluate call by value into the sort-directed domain.

    Integer-sorted terms yield ints, arrow-sorted terms yield functions
    from the domain's values to fallible codomain values.  There is no
    "stuck" branch: sorts rule those states out at construction.
    """
    match t:
        case TVar(_, payload):
            return payload
        case TLit(value, _):
            return Success(value)
        case TPlus(lhs, rhs, _):
            left = typed_eval(lhs)
            if isinstance(left, Failure):
                return left
            right = typed_eval(rhs)
            if isinstance(right, Failure):
                return right
            return Success(left.value + right.value)
        case TLam(dom, body, _):
            return Success(lambda v: typed_eval(body(TVar(dom, Success(v)))))
        case TApp(fn, arg, _):
            f = typed_eval(fn)
            if isinstance(f, Failure):
                return f
            x = typed_eval(arg)
            if isinstance(x, Failure):
                return x
            return f.value(x.value)
        case TErr(_):
            return Failure("error")
    raise TypeError(f"not a typed term: {t!r}")


def erase(t: TypedTerm) -> Term:
    """Forget the sorts, producing a closed core-language term."""

    def walk(node):
        match node:
            case TVar(_, payload):
                return payload
            case TLit(value, _):
                return i_lit(value, CORE)
            case TPlus(lhs, rhs, _):
                return i_plus(walk(lhs), walk(rhs), CORE)
            case TLam(dom, body, _):
                return i_lam(lambda occ: walk(body(TVar(dom, occ))), CORE)
            case TApp(fn, arg, _):
                return i_app(walk(fn), walk(arg), CORE)
            case TErr(_):
                return i_err(CORE)
        raise TypeError(f"not a typed term: {node!r}")

    return Term(lambda: walk(t))


_SAMPLE_INTS = (0, 1, -1, 2, 7, -3, 10, 42)


def _canonical(sort: ObjType, k: int):
    """Paired typed/untyped argument values used to probe functions."""
    if sort == INT:
        return k, IntV(k)
    sem, val = _canonical(sort.cod, k)
    return (lambda _v: Success(sem)), FunV(lambda _v: Success(val))


def results_agree(sort: ObjType, typed_r: Result, untyped_r: Result) -> bool:
    """Extensional agreement between the two evaluators' results."""
    if isinstance(typed_r, Failure) or isinstance(untyped_r, Failure):
        return typed_r == untyped_r
    return _values_agree(sort, typed_r.value, untyped_r.value)


def _values_agree(sort: ObjType, sem, val) -> bool:
    if sort == INT:
        return isinstance(val, IntV) and sem == val.value
    if not isinstance(val, FunV):
        return False
    for k in _SAMPLE_INTS:
        a_sem, a_val = _canonical(sort.dom, k)
        if not results_agree(sort.cod, sem(a_sem), val.fn(a_val)):
            return False
    return True


_ARG_SORTS = (INT, TArrow(INT, INT))


def _subst(node: TypedTerm, placeholder: TVar, replacement: TVar) -> TypedTerm:
    """Swap one variable occurrence for another, lazily under binders."""
    match node:
        case TVar(_, _):
            return replacement if node is placeholder else node
        case TLit(_, _) | TErr(_):
            return node
        case TPlus(lhs, rhs, sort):
            return TPlus(
                _subst(lhs, placeholder, replacement),
                _subst(rhs, placeholder, replacement),
                sort,
            )
        case TApp(fn, arg, sort):
            return TApp(
                _subst(fn, placeholder, replacement),
                _subst(arg, placeholder, replacement),
                sort,
            )
        case TLam(dom, body, sort):
            return TLam(
                dom, lambda v: _subst(body(v), placeholder, replacement), sort
            )
    raise TypeError(f"not a typed term: {node!r}")


def random_typed_term(
    rng: random.Random,
    sort: ObjType = INT,
    depth: int = 4,
    scope: tuple[tuple[ObjType, TVar], ...] = (),
    allow_err: bool = False,
) -> TypedTerm:
    """A random well-sorted term of the requested sort.

    Bodies are generated once against a placeholder variable and then
    substituted per instantiation, so a binder's function yields the same
    shape every time it is applied.  Everything goes through the checked
    constructors: an ill-sorted candidate would fail loudly here.
    """
    matching = [v for s, v in scope if s == sort]
    if isinstance(sort, TArrow):
        if matching and rng.random() < 0.4:
            return rng.choice(matching)
        placeholder = TVar(sort.dom, object())
        body_depth = depth - 1 if depth > 0 else 0
        tree = random_typed_term(
            rng, sort.cod, body_depth, scope + ((sort.dom, placeholder),), allow_err
        )
        return t_lam(sort.dom, lambda v: _subst(tree, placeholder, v))
    choices = ["lit"]
    if depth > 0:
        choices += ["plus", "plus", "app"]
    if matching:
        choices += ["var", "var"]
    if allow_err and depth > 0:
        choices.append("err")
    pick = rng.choice(choices)
    if pick == "lit":
        return t_lit(rng.randrange(0, 50))
    if pick == "var":
        return rng.choice(matching)
    if pick == "err":
        return t_err(sort)
    if pick == "plus":
        return t_plus(
            random_typed_term(rng, INT, depth - 1, scope, allow_err),
            random_typed_term(rng, INT, depth - 1, scope, allow_err),
        )
    dom = rng.choice(_ARG_SORTS)
    fn = random_typed_term(rng, TArrow(dom, sort), depth - 1, scope, allow_err)
    arg = random_typed_term(rng, dom, depth - 1, scope, allow_err)
    return t_app(fn, arg)


def typed_demo(family_size: int = 100, seed: int = 42) -> str:
    """Build the worked example and exercise the no-stuck-state claim."""
    example = t_app(t_lam(INT, lambda x: t_plus(x, x)), t_lit(2))
    outcome = typed_eval(example)
    lines = ["typed core language demo"]
    lines.append(f"  (\\x. x + x) 2  ==>  {outcome.value}")
    rng = random.Random(seed)
    failures = 0
    for _ in range(family_size):
        t = random_typed_term(rng, INT, depth=4)
        if isinstance(typed_eval(t), Failure):
            failures += 1
    lines.append(
        f"  error-free family: {family_size - failures}/{family_size} evaluated "
        "without failure"
    )
    bad = typed_eval(t_err(INT))
    lines.append(f'  error construct at int sort  ==>  failure "{bad.message}"')
    return "\n".join(lines)
