"""Algebras and the folds they induce.

An algebra collapses one signature node whose slots already carry results
into a result:

    cata phi: In(t)  ->  phi(fmap_co(cata phi, t))
              Var(x) ->  x

Variables evaluate to whatever carrier value their binder was applied to,
so a fold instantiates the term's builder at the carrier type.  The
effectful variant ``cata_m`` sequences the children's results before the
algebra runs and is therefore restricted to binder-free signatures.
"""
from __future__ import annotations

from typing import Any, Callable

from .result import Failure, Result, Success
from .signature import Signature, SlotKind, disequence, fmap_co, leaf_of, unwrap_node
from .term import Cxt, In, Term, Var


class MissingCaseError(LookupError):
    """An assembled pass has no rule for a constructor it encountered."""


def make_cases(
    cases: dict[type, Callable], default: Callable | None = None
) -> Callable[[Any], Any]:
    """Assemble a per-constructor function table into one node function.

    Sum tags and annotations are stripped before dispatch; ``default``
    handles every constructor without an explicit rule.  This is the
    artifact's stand-in for open algebra families: a pass lists special
    rules and routes the rest to a default.
    """

    def apply(node):
        leaf = leaf_of(node)
        rule = cases.get(type(leaf), default)
        if rule is None:
            raise MissingCaseError(
                f"no rule for constructor {type(leaf).__name__}"
            )
        return rule(leaf)

    return apply


def cata_pre(phi: Callable, c: Cxt) -> Any:
    """Fold a preterm whose variable type is already the carrier."""
    if isinstance(c, In):
        return phi(fmap_co(lambda child: cata_pre(phi, child), c.node))
    if isinstance(c, Var):
        return c.token
    raise TypeError("cata_pre folds hole-free preterms; use free for contexts")


def cata(phi: Callable, t: Term) -> Any:
    """Fold a closed term; instantiates the builder exactly once."""
    return cata_pre(phi, t.preterm())


def free(phi: Callable, hole_fn: Callable, c: Cxt) -> Any:
    """Fold a context, mapping hole payloads into the carrier.

    ``In`` nodes go through the algebra after their children are folded,
    variables are carrier values, and ``Hole(h)`` becomes ``hole_fn(h)``.
    """
    if isinstance(c, In):
        return phi(fmap_co(lambda child: free(phi, hole_fn, child), c.node))
    if isinstance(c, Var):
        return c.token
    return hole_fn(c.payload)


def cata_m(phi_m: Callable[[Any], Result], t: Term) -> Result:
    """Effectful fold over a binder-free term.

    Children's effects run left to right in slot order via ``disequence``;
    the first failure aborts the fold.  Signatures with binder slots (any
    contravariant slot) raise :class:`~phoaskit.signature.TraversalError`.
    """

    def cat(c: Cxt) -> Result:
        if isinstance(c, Var):
            return Success(c.token)
        if not isinstance(c, In):
            raise TypeError("cata_m folds hole-free preterms")
        seq = disequence(fmap_co(cat, c.node))
        if isinstance(seq, Failure):
            return seq
        return phi_m(seq.value)

    return cat(t.preterm())


def lift_pure(phi: Callable) -> Callable[[Any], Result]:
    """View a pure algebra as an effectful one that always succeeds."""
    return lambda node: Success(phi(node))


def deep_project(t: Term, target: Signature) -> Term | None:
    """Recursively re-tag a term into a smaller signature.

    Present exactly when every node's constructor is a summand of
    ``target``; the result is the same term modulo injection paths.  The
    source term must be binder-free (this is an effectful fold).
    """

    def phi(node) -> Result:
        leaf = leaf_of(node)
        w = target.find(type(leaf))
        if w is None:
            return Failure(
                f"{type(leaf).__name__} is not a summand of {target.name}"
            )
        return Success(In(w.inj(leaf)))

    if isinstance(cata_m(phi, t), Failure):
        return None

    def build() -> Cxt:
        out = cata_m(phi, t)
        assert isinstance(out, Success)
        return out.value

    return Term(build)


def node_count(t: Term) -> int:
    """Number of constructor nodes, counting each binder body once."""

    def phi(node) -> int:
        leaf = unwrap_node(node)[0]
        total = 1
        for slot, value in leaf.slot_values():
            if slot.kind is SlotKind.COVARIANT:
                total += value
            elif slot.kind is SlotKind.CONTRAVARIANT:
                total += value(0)
        return total

    return cata(phi, t)
