"""Monoidal coherence isomorphisms, and a small language for writing diagrams.

Diagrams in the literature are drawn with associators and unitors left
implicit.  ``normalize`` rebuilds them: it rewrites an expression to a
unit-free, combed normal form using nothing but the instance's own α, λ, ρ,
and returns the composite isomorphism.  Two expressions are related by
coherence exactly when their normal forms agree.
"""
from __future__ import annotations

from .instances import DuoidalInstance, invert_iso
from .linalg import Mat
from .objects import (BULLET, CIRC, PRODUCTS, CompositionMismatch, Morph, ObjExpr, Prod, compose,
                      unit_of)


class LeafMismatch(ValueError):
    pass


def inverse(m: Morph) -> Morph:
    return Morph(m.cod, m.dom, invert_iso(m.data))


def _merge_right(inst, op, left: ObjExpr, right: ObjExpr) -> tuple[ObjExpr, Morph]:
    """``left op right`` with both sides right-combed, to a right-combed list."""
    if isinstance(left, Prod) and left.op == op:
        a, rest = left.left, left.right
        step = inst.associator(op, a, rest, right)
        tail, m = _merge_right(inst, op, rest, right)
        return Prod(op, a, tail), compose(inst.tensor(op, inst.identity(a), m), step)
    x = Prod(op, left, right)
    return x, inst.identity(x)


def _merge_left(inst, op, left: ObjExpr, right: ObjExpr) -> tuple[ObjExpr, Morph]:
    """``left op right`` with both sides left-combed, to a left-combed list."""
    if isinstance(right, Prod) and right.op == op:
        rest, b = right.left, right.right
        step = inverse(inst.associator(op, left, rest, b))
        head, m = _merge_left(inst, op, left, rest)
        return Prod(op, head, b), compose(inst.tensor(op, m, inst.identity(b)), step)
    x = Prod(op, left, right)
    return x, inst.identity(x)


def normalize(inst: DuoidalInstance, x: ObjExpr, products=PRODUCTS, comb: str = "right"):
    """Return ``(normal_form, iso: x -> normal_form)``.

    Only the products listed in ``products`` are rewritten; nodes of any other
    product are kept, with their children normalized.
    """
    merge = _merge_right if comb == "right" else _merge_left
    cache: dict = {}

    def go(e):
        hit = cache.get(e)
        if hit is not None:
            return hit
        if not isinstance(e, Prod):
            res = (e, inst.identity(e))
        else:
            nl, fl = go(e.left)
            nr, fr = go(e.right)
            step = inst.tensor(e.op, fl, fr)
            if e.op not in products:
                res = (Prod(e.op, nl, nr), step)
            elif nl == unit_of(e.op):
                res = (nr, compose(inst.left_unitor(e.op, nr), step))
            elif nr == unit_of(e.op):
                res = (nl, compose(inst.right_unitor(e.op, nl), step))
            else:
                nf, m = merge(inst, e.op, nl, nr)
                res = (nf, compose(m, step))
        cache[e] = res
        return res

    return go(x)


def _stripped_leaves(x: ObjExpr, op: str) -> tuple:
    u = unit_of(op)
    return tuple(leaf for leaf in x.leaves() if leaf != u)


def coherence_iso(inst: DuoidalInstance, product: str, src: ObjExpr, dst: ObjExpr,
                  comb: str = "right") -> Morph:
    """The coherence isomorphism ``src -> dst`` built from one product's α, λ, ρ."""
    return _coherence(inst, (product,), src, dst, comb)


def mixed_coherence_iso(inst: DuoidalInstance, src: ObjExpr, dst: ObjExpr,
                        comb: str = "right") -> Morph:
    """Coherence isomorphism using the associators and unitors of both products."""
    return _coherence(inst, PRODUCTS, src, dst, comb)


def _coherence(inst, products, src, dst, comb):
    if src == dst:
        return inst.identity(src)
    if len(products) == 1 and _stripped_leaves(src, products[0]) != _stripped_leaves(dst, products[0]):
        raise LeafMismatch(f"{src} and {dst} have different leaves")
    ns, fs = normalize(inst, src, products, comb)
    nd, fd = normalize(inst, dst, products, comb)
    if ns != nd:
        raise LeafMismatch(f"{src} and {dst} are not related by coherence")
    return compose(inverse(fd), fs)


class Diagram:
    """Helpers for writing composites the way they are drawn.

    ``c`` and ``b`` tensor their arguments with ∘ and • (right-nested); an
    object argument stands for its identity.  ``path`` composes arrows in the
    order they are applied and inserts coherence isomorphisms wherever the
    codomain of one arrow is only coherence-isomorphic to the next domain.
    """

    def __init__(self, inst: DuoidalInstance):
        self.inst = inst

    def _m(self, x) -> Morph:
        return self.inst.identity(x) if isinstance(x, ObjExpr) else x

    def tensor(self, op, *xs) -> Morph:
        ms = [self._m(x) for x in xs]
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.inst.tensor(op, m, out)
        return out

    def c(self, *xs) -> Morph:
        return self.tensor(CIRC, *xs)

    def b(self, *xs) -> Morph:
        return self.tensor(BULLET, *xs)

    def coh(self, src: ObjExpr, dst: ObjExpr) -> Morph:
        return mixed_coherence_iso(self.inst, src, dst)

    def path(self, *arrows) -> Morph:
        ms = [self._m(a) for a in arrows]
        out = ms[0]
        for m in ms[1:]:
            if out.cod != m.dom:
                try:
                    out = compose(self.coh(out.cod, m.dom), out)
                except LeafMismatch as exc:
                    raise CompositionMismatch(f"cannot compose {out.cod} with {m.dom}") from exc
            out = compose(m, out)
        return out

    def cast(self, m: Morph, dom: ObjExpr | None = None, cod: ObjExpr | None = None) -> Morph:
        """Retype ``m`` along coherence isomorphisms at either end."""
        arrows = []
        if dom is not None:
            arrows.append(dom)
        arrows.append(m)
        if cod is not None:
            arrows.append(cod)
        return self.path(*arrows)

    def align(self, lhs: Morph, rhs: Morph) -> tuple[Mat, Mat]:
        """Matrices of two parallel composites, after matching rhs's ends to lhs's."""
        return lhs.data, self.cast(rhs, lhs.dom, lhs.cod).data
