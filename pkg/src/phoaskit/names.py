"""Fresh names and the name-instantiated views of closed terms.

Binders store functions, so comparing or printing two terms means turning
the elusive function representation into something concrete: instantiate
both terms at the opaque :class:`Name` type, and at each binder apply the
bodies to one shared fresh name.  A deterministic supply makes the
results reproducible; alpha-equivalent terms receive identical names and
therefore compare equal and print identically.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Generic, TypeVar

from .signature import SlotKind, unwrap_node
from .term import Cxt, In, Term, Var

R = TypeVar("R")


@total_ordering
@dataclass(frozen=True)
class Name:
    """An opaque distinct name; ordering and rendering follow the index."""

    index: int  # 1-based position in the canonical supply

    def render(self) -> str:
        i = self.index - 1
        letter = string.ascii_lowercase[i % 26]
        cycle = i // 26
        return letter if cycle == 0 else f"{letter}{cycle}"

    def __str__(self) -> str:
        return self.render()

    def __lt__(self, other: "Name") -> bool:
        return self.index < other.index


class FreshSupply:
    """Hands out pairwise-distinct names: a, b, ..., z, a1, b1, ..."""

    def __init__(self) -> None:
        self._next = 1

    def fresh(self) -> Name:
        name = Name(self._next)
        self._next += 1
        return name


class FreshComp(Generic[R]):
    """A computation with access to a supply of fresh names."""

    __slots__ = ("_run",)

    def __init__(self, run: Callable[[FreshSupply], R]):
        self._run = run

    def run(self, supply: FreshSupply) -> R:
        return self._run(supply)


def pure(value: R) -> FreshComp[R]:
    return FreshComp(lambda _supply: value)


def with_name(k: Callable[[Name], FreshComp[R]]) -> FreshComp[R]:
    """Provide a fresh name to the continuation."""
    return FreshComp(lambda supply: k(supply.fresh()).run(supply))


def eval_fresh(comp: FreshComp[R]) -> R:
    """Run a computation against the canonical supply."""
    return comp.run(FreshSupply())


def _heads(c: Cxt, other: Cxt):
    """Unwrapped node pairs for two ``In`` heads, or None on any mismatch."""
    leaf1, path1, ann1 = unwrap_node(c.node)
    leaf2, path2, ann2 = unwrap_node(other.node)
    if path1 != path2 or type(leaf1) is not type(leaf2) or ann1 != ann2:
        return None
    return leaf1, leaf2


def _peq(c1: Cxt, c2: Cxt, supply: FreshSupply) -> bool:
    if isinstance(c1, Var) and isinstance(c2, Var):
        return c1.token == c2.token
    if not (isinstance(c1, In) and isinstance(c2, In)):
        return False
    heads = _heads(c1, c2)
    if heads is None:
        return False
    leaf1, leaf2 = heads
    for slot in leaf1.SLOTS:
        v1 = getattr(leaf1, slot.name)
        v2 = getattr(leaf2, slot.name)
        if slot.kind is SlotKind.STATIC:
            if v1 != v2:
                return False
        elif slot.kind is SlotKind.COVARIANT:
            if not _peq(v1, v2, supply):
                return False
        else:
            x = supply.fresh()
            if not _peq(v1(x), v2(x), supply):
                return False
    return True


def preterm_eq(p1: Cxt, p2: Cxt) -> bool:
    """Structural equality of two preterms at the name instantiation.

    Binder pairs are applied to one shared fresh name from the canonical
    supply, so the comparison is exact on everything the supply reaches.
    """
    return eval_fresh(FreshComp(lambda supply: _peq(p1, p2, supply)))


def alpha_eq(t1: Term, t2: Term) -> bool:
    """Alpha-equivalence, decided at the name instantiation.

    Both builders are instantiated at names; at each binder pair the two
    bodies are applied to one shared fresh name, so consistently renamed
    terms compare equal and structurally different ones do not.
    """
    return preterm_eq(t1.preterm(), t2.preterm())


_LT, _EQ, _GT = -1, 0, 1


def _cmp(a, b) -> int:
    return _LT if a < b else (_GT if a > b else _EQ)


def _rank(c: Cxt) -> int:
    # variables order before constructor nodes; a documented choice
    return 0 if isinstance(c, Var) else 1


def _pcompare(c1: Cxt, c2: Cxt, supply: FreshSupply) -> int:
    if _rank(c1) != _rank(c2):
        return _cmp(_rank(c1), _rank(c2))
    if isinstance(c1, Var):
        return _cmp(c1.token, c2.token)
    leaf1, path1, ann1 = unwrap_node(c1.node)
    leaf2, path2, ann2 = unwrap_node(c2.node)
    if path1 != path2:
        return _cmp(path1, path2)
    if (ann1 is not None or ann2 is not None) and ann1 != ann2:
        return _cmp(ann1, ann2)
    for slot in leaf1.SLOTS:
        v1 = getattr(leaf1, slot.name)
        v2 = getattr(leaf2, slot.name)
        if slot.kind is SlotKind.STATIC:
            order = _cmp(v1, v2)
        elif slot.kind is SlotKind.COVARIANT:
            order = _pcompare(v1, v2, supply)
        else:
            x = supply.fresh()
            order = _pcompare(v1(x), v2(x), supply)
        if order != _EQ:
            return order
    return _EQ


def alpha_compare(t1: Term, t2: Term) -> int:
    """Total order compatible with alpha-equivalence.

    Lexicographic on (injection path, slots left to right); names compare
    by supply index.  Returns a negative, zero or positive int.
    """
    p1, p2 = t1.preterm(), t2.preterm()
    return eval_fresh(FreshComp(lambda supply: _pcompare(p1, p2, supply)))


def _atom(text: str) -> str:
    return text if " " not in text else f"({text})"


def _pshow(c: Cxt, supply: FreshSupply) -> str:
    if isinstance(c, Var):
        return str(c.token)
    leaf = unwrap_node(c.node)[0]
    parts = [type(leaf).__name__]
    for slot, value in leaf.slot_values():
        if slot.kind is SlotKind.STATIC:
            parts.append(_atom(str(value)))
        elif slot.kind is SlotKind.COVARIANT:
            parts.append(_atom(_pshow(value, supply)))
        else:
            x = supply.fresh()
            parts.append(f"(\\{x} -> {_pshow(value(x), supply)})")
    return " ".join(parts)


def struct_show(t: Term) -> str:
    """Constructor-applied rendering with fresh names for binders.

    Arguments are parenthesized when compound; a binder slot prints as
    ``(\\a -> body)``.  Annotations do not participate; strip them first
    if a plain rendering of an annotated term is wanted.
    """
    pre = t.preterm()
    return eval_fresh(FreshComp(lambda supply: _pshow(pre, supply)))
