"""Two-parameter signature shapes and their composition.

A signature constructor is a non-recursive node shape with three kinds of
slots:

* covariant slots hold recursive positions (children),
* contravariant slots hold total functions from the variable side into the
  recursive side (binders),
* static slots hold constructor payload (an integer literal, say).

``dimap`` is the structure-preserving map over both sides; fixing the
contravariant side with the identity gives the ordinary child-mapping
``fmap_co``.  Signatures compose by a right-nested binary sum (``Inl`` /
``Inr``), and a :class:`Signature` records the summand order so injections
and partial projections can be derived mechanically.

Laws expected of every node class (checked by the test suite):

    dimap(id, id) == id
    dimap(f . g, h . i) == dimap(g, h) . dimap(f, i)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, ClassVar

from .result import Failure, Result, Success


class SlotKind(Enum):
    STATIC = "static"
    COVARIANT = "covariant"
    CONTRAVARIANT = "contravariant"


@dataclass(frozen=True)
class Slot:
    name: str
    kind: SlotKind

    @staticmethod
    def static(name: str) -> "Slot":
        return Slot(name, SlotKind.STATIC)

    @staticmethod
    def co(name: str) -> "Slot":
        return Slot(name, SlotKind.COVARIANT)

    @staticmethod
    def contra(name: str) -> "Slot":
        return Slot(name, SlotKind.CONTRAVARIANT)


class Node:
    """Base class for signature constructor nodes.

    Subclasses are frozen dataclasses whose ``SLOTS`` tuple names every
    field together with its variance.  All generic machinery (mapping,
    traversal, equality, printing) is driven by that tuple, so a new
    signature is just a dataclass plus its slot declaration.
    """

    SLOTS: ClassVar[tuple[Slot, ...]] = ()

    def slot_values(self):
        for slot in self.SLOTS:
            yield slot, getattr(self, slot.name)

    def rebuild(self, values: dict[str, Any]) -> "Node":
        return type(self)(**values)


class SubsumptionError(TypeError):
    """No (or no unambiguous) injection of a summand into a signature."""


class TraversalError(TypeError):
    """Sequencing was attempted over a signature with binder slots."""


@dataclass(frozen=True)
class Inl:
    value: Any


@dataclass(frozen=True)
class Inr:
    value: Any


@dataclass(frozen=True)
class Ann:
    """A node paired with a constant annotation.

    Annotating a signature leaves its shape alone: mapping and traversal
    act on the wrapped node and carry the annotation across unchanged.
    """

    node: Any
    ann: Any


def dimap(pre: Callable, post: Callable, node: Any) -> Any:
    """Map ``pre`` over the variable side and ``post`` over the children.

    Contravariant slots ``h`` become ``post . h . pre``, covariant slots
    are mapped by ``post``, static slots are untouched.  Sums and
    annotations are preserved.
    """
    if isinstance(node, Inl):
        return Inl(dimap(pre, post, node.value))
    if isinstance(node, Inr):
        return Inr(dimap(pre, post, node.value))
    if isinstance(node, Ann):
        return Ann(dimap(pre, post, node.node), node.ann)
    values = {}
    for slot, value in node.slot_values():
        if slot.kind is SlotKind.STATIC:
            values[slot.name] = value
        elif slot.kind is SlotKind.COVARIANT:
            values[slot.name] = post(value)
        else:
            values[slot.name] = _compose3(post, value, pre)
    return node.rebuild(values)


def _compose3(post: Callable, h: Callable, pre: Callable) -> Callable:
    return lambda x: post(h(pre(x)))


def fmap_co(post: Callable, node: Any) -> Any:
    """``dimap`` with the identity on the variable side."""
    return dimap(_identity, post, node)


def _identity(x):
    return x


def unwrap_node(node: Any) -> tuple[Node, str, Any]:
    """Strip sum tags and annotations.

    Returns the underlying constructor node, its injection path (one of
    ``L``/``R`` per sum level, outermost first) and the annotation if one
    was present.
    """
    path = []
    ann = None
    while True:
        if isinstance(node, Ann):
            ann = node.ann
            node = node.node
        elif isinstance(node, Inl):
            path.append("L")
            node = node.value
        elif isinstance(node, Inr):
            path.append("R")
            node = node.value
        else:
            return node, "".join(path), ann


def leaf_of(node: Any) -> Node:
    return unwrap_node(node)[0]


@dataclass(frozen=True)
class Subsumption:
    """Injection/projection witness for one summand of a signature.

    ``proj(inj(n)) == n`` for every node ``n`` of the summand, and
    ``proj`` answers ``None`` for nodes that took any other path into the
    sum.
    """

    summand: type
    path: str

    def inj(self, node: Node) -> Any:
        if not isinstance(node, self.summand):
            raise SubsumptionError(
                f"cannot inject {type(node).__name__} with a "
                f"{self.summand.__name__} witness"
            )
        for side in reversed(self.path):
            node = Inl(node) if side == "L" else Inr(node)
        return node

    def proj(self, node: Any) -> Node | None:
        for side in self.path:
            want = Inl if side == "L" else Inr
            if not isinstance(node, want):
                return None
            node = node.value
        if isinstance(node, self.summand) and not isinstance(node, (Inl, Inr, Ann)):
            return node
        return None


class Signature:
    """A right-nested sum of constructor classes, in declaration order.

    The nesting is implicit in the summand order: ``Signature((A, B, C))``
    stands for ``A + (B + C)``, so the injection paths are ``L``, ``RL``
    and ``RR``.  Witness search is leftmost-first and a class occurring
    twice is rejected here rather than at use sites.
    """

    def __init__(self, summands: tuple[type, ...], name: str | None = None):
        if not summands:
            raise SubsumptionError("a signature needs at least one summand")
        seen = set()
        for cls in summands:
            if cls in seen:
                raise SubsumptionError(
                    f"summand {cls.__name__} occurs more than once; "
                    "injection would be ambiguous"
                )
            seen.add(cls)
        self.summands = tuple(summands)
        self.name = name or "+".join(cls.__name__ for cls in summands)
        self._witnesses = {
            cls: Subsumption(cls, self._path(i)) for i, cls in enumerate(summands)
        }

    def _path(self, index: int) -> str:
        n = len(self.summands)
        if n == 1:
            return ""
        if index < n - 1:
            return "R" * index + "L"
        return "R" * (n - 1)

    def find(self, cls: type) -> Subsumption | None:
        return self._witnesses.get(cls)

    def witness(self, cls: type) -> Subsumption:
        w = self._witnesses.get(cls)
        if w is None:
            raise SubsumptionError(f"{cls.__name__} is not a summand of {self.name}")
        return w

    def inj(self, node: Node) -> Any:
        return self.witness(type(node)).inj(node)

    def __repr__(self) -> str:
        return f"Signature({self.name})"


def disequence(node: Any) -> Result:
    """Run the slot effects of a binder-free node left to right.

    Covariant slots must hold :class:`Result` values; the first failure
    aborts and is returned as is, otherwise a node of the same shape with
    the unwrapped slot values is rebuilt.  Nodes with contravariant slots
    have no meaningful sequencing and raise :class:`TraversalError`.
    """
    if isinstance(node, Inl):
        r = disequence(node.value)
        return Success(Inl(r.value)) if isinstance(r, Success) else r
    if isinstance(node, Inr):
        r = disequence(node.value)
        return Success(Inr(r.value)) if isinstance(r, Success) else r
    if isinstance(node, Ann):
        r = disequence(node.node)
        return Success(Ann(r.value, node.ann)) if isinstance(r, Success) else r
    values = {}
    for slot, value in node.slot_values():
        if slot.kind is SlotKind.CONTRAVARIANT:
            raise TraversalError(
                f"{type(node).__name__} embeds a binder and cannot be sequenced"
            )
        if slot.kind is SlotKind.COVARIANT:
            if isinstance(value, Failure):
                return value
            values[slot.name] = value.value
        else:
            values[slot.name] = value
    return Success(node.rebuild(values))

