"""Contexts, closed terms, and the exotic-shape exclusions."""
from __future__ import annotations

import random

import pytest

from conftest import make_corpus
from phoaskit.algebra import cata_pre
from phoaskit.lang import (
    CORE,
    FULL,
    App,
    Lam,
    Lit,
    count_alg,
    i_app,
    i_lam,
    i_let,
    i_lit,
    i_plus,
)
from phoaskit.term import (
    ExoticTermError,
    Hole,
    In,
    Term,
    Var,
    app_cxt,
    hole_count,
    inject,
    iter_nodes,
    map_holes,
    project,
    smart_binder,
    var_of,
)


def test_inject_project_round_trip():
    c = inject(Lit(2), FULL)
    assert isinstance(c, In)
    assert project(c, FULL.witness(Lit)) == Lit(2)


def test_project_on_var_and_wrong_summand():
    from phoaskit.lang import Plus

    assert project(var_of(object()), FULL.witness(Lit)) is None
    c = inject(Lit(5), FULL)
    assert project(c, FULL.witness(Plus)) is None


def test_project_looks_through_annotations():
    c = inject(Lit(5), FULL, ann="1:1")
    assert project(c, FULL.witness(Lit)) == Lit(5)


def test_inject_app_head_projects_to_app():
    t1, t2 = i_lit(1), i_lit(2)
    c = i_app(t1, t2)
    head = project(c, FULL.witness(App))
    assert head == App(t1, t2)


def test_var_of_wraps_token():
    tok = object()
    assert var_of(tok) == Var(tok)


def test_smart_binder_wraps_tokens_before_the_body():
    seen = []

    def body(x):
        seen.append(x)
        return x

    slot = smart_binder(body)
    tok = object()
    out = slot(tok)
    assert seen == [Var(tok)]
    assert out == Var(tok)


def test_binder_constructor_stores_wrapped_slot():
    c = i_lam(lambda y: y, CORE)
    lam = project(c, CORE.witness(Lam))
    tok = object()
    assert lam.body(tok) == Var(tok)


def test_app_cxt_single_hole_and_var():
    t = i_lit(7, CORE)
    assert app_cxt(Hole(t)) is t
    v = Var(object())
    assert app_cxt(v) is v


def test_app_cxt_merges_nested_contexts():
    t1, t2 = i_lit(1, CORE), i_lit(2, CORE)
    merged = app_cxt(i_plus(Hole(t1), Hole(t2), CORE))
    assert merged == i_plus(t1, t2, CORE)


def random_context(rng: random.Random, depth: int, payloads: list):
    if depth == 0 or rng.random() < 0.4:
        payload = i_lit(rng.randrange(10), CORE)
        payloads.append(payload)
        return Hole(payload)
    return i_plus(
        random_context(rng, depth - 1, payloads),
        random_context(rng, depth - 1, payloads),
        CORE,
    )


def test_app_cxt_keeps_exactly_the_payload_holes():
    rng = random.Random(7)
    for _ in range(100):
        payloads = []
        # payloads are themselves contexts with holes
        ctx = random_context(rng, 3, payloads)
        with_holes = map_holes(lambda t: i_plus(Hole(t), i_lit(1, CORE), CORE), ctx)
        merged = app_cxt(with_holes)
        assert hole_count(merged) == len(payloads)


def test_map_holes_passes_variables_through():
    v = Var(object())
    assert map_holes(lambda h: h, v) is v


def test_iter_nodes_descends_into_hole_payloads():
    ctx = i_plus(Hole(i_lit(1, CORE)), i_lit(2, CORE), CORE)
    names = [type(leaf).__name__ for leaf, _ in iter_nodes(ctx)]
    assert names == ["Plus", "Lit", "Lit"]


def test_non_contexts_are_rejected():
    with pytest.raises(ExoticTermError):
        Term(lambda: 42)


def test_map_holes_then_merge_is_identity():
    rng = random.Random(8)
    for _ in range(100):
        ctx = random_context(rng, 3, [])
        assert app_cxt(map_holes(Hole, ctx)) == ctx


def test_closed_terms_contain_no_holes():
    for t in make_corpus(40, depth=4, seed=11):
        assert hole_count(t.preterm()) == 0


def test_term_builder_runs_once_per_instantiation():
    calls = []

    def build():
        calls.append(1)
        return i_lit(3)

    t = Term(build)
    base = len(calls)  # construction validates once
    t.preterm()
    assert len(calls) == base + 1


# The three classic exotic shapes.

def test_bad_place_concrete_payload_rejected():
    with pytest.raises(ExoticTermError):
        Term(lambda: var_of(True))
    with pytest.raises(ExoticTermError):
        Term(lambda: i_plus(var_of(3), i_lit(1)))


def test_tokens_cannot_escape_their_binder():
    leaked = []

    def capture(x):
        leaked.append(x)
        return x

    Term(lambda: i_lam(capture))
    assert leaked, "binder body was walked"
    with pytest.raises(ExoticTermError):
        Term(lambda: leaked[0])
    with pytest.raises(ExoticTermError):
        Term(lambda: i_plus(i_lit(0), leaked[0]))


def test_holes_rejected_in_closed_terms():
    with pytest.raises(ExoticTermError):
        Term(lambda: Hole(i_lit(1)))
    with pytest.raises(ExoticTermError):
        Term(lambda: i_plus(i_lit(1), Hole(i_lit(2))))


def test_bad_case_branching_sees_nothing():
    """A body that pattern matches its argument cannot distinguish it.

    The argument is always a Var occurrence: projection fails for every
    summand, so a case-splitting body collapses to one branch.
    """
    observed = []

    def body(x):
        observed.append(x)
        for cls in FULL.summands:
            assert project(x, FULL.witness(cls)) is None
        return x

    Term(lambda: i_lam(body))
    assert len(observed) == 1
    assert isinstance(observed[0], Var)


def test_bad_cata_folding_the_argument_yields_the_opaque_token():
    """A body that folds its argument just gets the token back.

    There is no structure underneath a bound occurrence for an analysis
    to act on, which is what rules out result-dependent bodies.
    """
    results = []

    def body(x):
        results.append(cata_pre(count_alg, x))
        return x

    Term(lambda: i_lam(body))
    (token,) = results
    assert not isinstance(token, int)  # no countable structure leaked
    assert type(token).__name__ == "_BoundToken"
    assert not [a for a in dir(token) if not a.startswith("_")]


def test_iter_nodes_walks_each_binder_body_once():
    t = Term(
        lambda: i_let(i_lit(2), lambda x: i_app(i_lam(lambda y: i_plus(y, x)), i_lit(3)))
    )
    names = [type(leaf).__name__ for leaf, _ in iter_nodes(t.preterm())]
    assert names == ["Let", "Lit", "App", "Lam", "Plus", "Lit"]
