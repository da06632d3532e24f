"""Object expressions over the two monoidal products, and morphisms between them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .linalg import Mat

CIRC = "circ"
BULLET = "bullet"
PRODUCTS = (CIRC, BULLET)


class UnknownAtom(KeyError):
    pass


class CompositionMismatch(ValueError):
    pass


class ObjExpr:
    """Base class of the expression tree.  Leaves are units and atoms."""

    __slots__ = ()

    def leaves(self) -> tuple:
        return (self,)

    def atoms(self) -> set:
        return {x.name for x in self.leaves() if isinstance(x, Atom)}

    def to_json(self):
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Unit(ObjExpr):
    which: str  # "I" or "J"

    def __str__(self):
        return self.which

    def to_json(self):
        return self.which


@dataclass(frozen=True, slots=True)
class Atom(ObjExpr):
    name: str

    def __str__(self):
        return self.name

    def to_json(self):
        return {"atom": self.name}


@dataclass(frozen=True, slots=True)
class Prod(ObjExpr):
    op: str  # CIRC or BULLET
    left: ObjExpr
    right: ObjExpr

    def leaves(self):
        return self.left.leaves() + self.right.leaves()

    def __str__(self):
        sym = "∘" if self.op == CIRC else "•"
        return f"({self.left}{sym}{self.right})"

    def to_json(self):
        return [self.op, self.left.to_json(), self.right.to_json()]


I = Unit("I")
J = Unit("J")


def unit_of(op: str) -> Unit:
    return I if op == CIRC else J


def prod(op: str, *xs: ObjExpr) -> ObjExpr:
    """Right-nested product of one or more expressions."""
    if not xs:
        return unit_of(op)
    return reduce(lambda acc, x: Prod(op, x, acc), reversed(xs[:-1]), xs[-1])


def circ(*xs: ObjExpr) -> ObjExpr:
    return prod(CIRC, *xs)


def bullet(*xs: ObjExpr) -> ObjExpr:
    return prod(BULLET, *xs)


def obj_from_json(data) -> ObjExpr:
    """Inverse of ``to_json``: ``"I"``, ``"J"``, ``{"atom": name}``, ``[op, lhs, rhs]``."""
    if data == "I":
        return I
    if data == "J":
        return J
    if isinstance(data, dict) and set(data) == {"atom"} and isinstance(data["atom"], str):
        return Atom(data["atom"])
    if isinstance(data, list) and len(data) == 3 and data[0] in PRODUCTS:
        return Prod(data[0], obj_from_json(data[1]), obj_from_json(data[2]))
    raise ValueError(f"not an object expression: {data!r}")


@dataclass(frozen=True)
class Morph:
    dom: ObjExpr
    cod: ObjExpr
    data: Mat

    def __repr__(self):
        return f"Morph({self.dom} -> {self.cod}, {self.data.rows}x{self.data.cols})"


def compose(g: Morph, f: Morph) -> Morph:
    """``g·f``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise CompositionMismatch(f"cannot compose: {f.cod} is not {g.dom}")
    return Morph(f.dom, g.cod, g.data @ f.data)
