"""Modular abstract syntax with parametric binders.

Language signatures are two-parameter shapes composed by coproduct;
binders are embedded functions over an opaque variable type; passes are
algebras folded by catamorphisms or constructor-to-context homomorphisms
that fuse with each other and with algebras.  The ``lang`` module wires
the machinery into a small lambda language with a parser, pretty printer,
desugarer, constant folder and interpreters.
"""
from .algebra import (
    MissingCaseError,
    cata,
    cata_m,
    cata_pre,
    deep_project,
    free,
    lift_pure,
    make_cases,
    node_count,
)
from .hom import (
    annotations,
    app_hom,
    app_term_hom,
    compose_alg_hom,
    compose_hom,
    identity_hom,
    lift_ann_hom,
    strip_ann,
)
from .names import (
    FreshComp,
    FreshSupply,
    Name,
    alpha_compare,
    alpha_eq,
    eval_fresh,
    pure,
    struct_show,
    with_name,
)
from .result import Failure, Result, Success
from .signature import (
    Ann,
    Inl,
    Inr,
    Node,
    Signature,
    Slot,
    SlotKind,
    SubsumptionError,
    Subsumption,
    TraversalError,
    dimap,
    disequence,
    fmap_co,
    leaf_of,
    unwrap_node,
)
from .term import (
    Cxt,
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

__all__ = [
    "Ann",
    "Cxt",
    "ExoticTermError",
    "Failure",
    "FreshComp",
    "FreshSupply",
    "Hole",
    "In",
    "Inl",
    "Inr",
    "MissingCaseError",
    "Name",
    "Node",
    "Result",
    "Signature",
    "Slot",
    "SlotKind",
    "Subsumption",
    "SubsumptionError",
    "Success",
    "Term",
    "TraversalError",
    "Var",
    "alpha_compare",
    "alpha_eq",
    "annotations",
    "app_cxt",
    "app_hom",
    "app_term_hom",
    "cata",
    "cata_m",
    "cata_pre",
    "compose_alg_hom",
    "compose_hom",
    "deep_project",
    "dimap",
    "disequence",
    "eval_fresh",
    "fmap_co",
    "free",
    "hole_count",
    "identity_hom",
    "inject",
    "iter_nodes",
    "leaf_of",
    "lift_ann_hom",
    "lift_pure",
    "make_cases",
    "map_holes",
    "node_count",
    "project",
    "pure",
    "smart_binder",
    "strip_ann",
    "struct_show",
    "unwrap_node",
    "var_of",
    "with_name",
]
