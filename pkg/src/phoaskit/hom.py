"""Term homomorphisms: fusable constructor-to-context transformations.

A homomorphism maps one source node to a context over the target
signature, embedding the node's children through holes rather than
inspecting them.  Application merges the produced contexts:

    app_hom rho: In(t)  -> app_cxt(rho(fmap_co(app_hom rho, t)))
                 Var(x) -> Var(x)
                 Hole(h)-> Hole(h)

Unlike general folds, homomorphisms compose: with another homomorphism
(``compose_hom``) and with an algebra (``compose_alg_hom``), satisfying

    app_hom(r1) . app_hom(r2) == app_hom(compose_hom(r1, r2))
    cata(phi) . app_term_hom(rho) == cata(compose_alg_hom(phi, rho))

so staged pipelines can be collapsed into a single traversal.  They also
lift over annotated signatures, propagating each source node's annotation
onto every node the rule produced.
"""
from __future__ import annotations

from typing import Any, Callable

from .algebra import free
from .signature import Ann, Signature, fmap_co, leaf_of
from .term import Cxt, Hole, In, Term, app_cxt


def app_hom(rho: Callable[[Any], Cxt], c: Cxt) -> Cxt:
    """Apply a homomorphism to a context (or preterm)."""
    if isinstance(c, In):
        return app_cxt(rho(fmap_co(lambda child: app_hom(rho, child), c.node)))
    return c


def app_term_hom(rho: Callable[[Any], Cxt], t: Term) -> Term:
    """Apply a homomorphism underneath the closed-term wrapper."""
    return Term(lambda: app_hom(rho, t.preterm()))


def compose_hom(rho1: Callable, rho2: Callable) -> Callable[[Any], Cxt]:
    """Fuse two homomorphisms into one traversal."""
    return lambda node: app_hom(rho1, rho2(node))


def compose_alg_hom(phi: Callable, rho: Callable) -> Callable[[Any], Any]:
    """Fuse an algebra after a homomorphism into one algebra."""
    return lambda node: free(phi, _identity, rho(node))


def _identity(x):
    return x


def identity_hom(target: Signature) -> Callable[[Any], Cxt]:
    """Re-tag nodes into ``target`` without touching their structure.

    This is both the identity homomorphism (when source and target agree)
    and the default rule a pass assembly falls back to for constructors it
    does not rewrite.  It also deep-injects terms over a sub-signature
    into a larger one via :func:`app_term_hom`.
    """

    def rho(node) -> Cxt:
        leaf = leaf_of(node)
        return In(fmap_co(Hole, target.inj(leaf)))

    return rho


def lift_ann_hom(rho: Callable[[Any], Cxt]) -> Callable[[Any], Cxt]:
    """Lift a homomorphism to annotated signatures.

    Every node of the context produced for a source node tagged ``p``
    is itself tagged ``p``; variables and holes stay untagged.  Multi-node
    rewrites (a sugared form expanding to several core nodes) thus spread
    the source annotation over all of their output.
    """

    def lifted(node) -> Cxt:
        if isinstance(node, Ann):
            return _annotate(rho(node.node), node.ann)
        return rho(node)

    return lifted


def _annotate(c: Cxt, ann: Any) -> Cxt:
    if isinstance(c, In):
        node = fmap_co(lambda child: _annotate(child, ann), c.node)
        return In(Ann(node, ann))
    return c


def strip_ann(t: Term) -> Term:
    """Forget every annotation, preserving structure."""

    def rho(node) -> Cxt:
        inner = node.node if isinstance(node, Ann) else node
        return In(fmap_co(Hole, inner))

    return app_term_hom(rho, t)


def annotations(t: Term) -> list[tuple[str, Any]]:
    """Preorder list of ``(constructor name, annotation)`` pairs."""
    from .term import iter_nodes

    return [(type(leaf).__name__, ann) for leaf, ann in iter_nodes(t.preterm())]
