"""Concrete duoidal categories of finite-dimensional vector spaces.

An instance knows how to realize object expressions as *descriptors* (an int
dimension for plain vector spaces, a tuple of per-grade dimensions for graded
ones) and how to build the structure matrices: tensor products of morphisms,
the interchange ζ, the unit maps δ, ϖ, τ, and the associators and unitors of
both products.

Basis conventions.  Within one product, factors flatten left-factor-major.
In the graded Cauchy product the basis is ordered by output grade (declared
group order), then by summand ``(h, k)`` lexicographically, then Kronecker
inside the summand.  The Hadamard product is ordered by grade, then Kronecker.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from .linalg import QQ, Mat, try_invert, NotInvertible
from .objects import (BULLET, CIRC, Atom, Morph, ObjExpr, Prod, Unit, UnknownAtom)


def other(op: str) -> str:
    return BULLET if op == CIRC else CIRC


class NotAGroup(ValueError):
    def __init__(self, law: str, witness: tuple):
        super().__init__(f"group table violates {law} at {witness}")
        self.law = law
        self.witness = witness


class UnsupportedTransform(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    elements: tuple
    table: tuple  # table[i][j] = index of elements[i]*elements[j]

    @classmethod
    def from_lists(cls, elements, table) -> GroupTable:
        g = cls(tuple(elements), tuple(tuple(r) for r in table))
        g.validate()
        return g

    @classmethod
    def cyclic(cls, n: int) -> GroupTable:
        names = ["e"] + [f"g{i}" if n > 2 else "g" for i in range(1, n)]
        return cls.from_lists(names, [[(i + j) % n for j in range(n)] for i in range(n)])

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        raise NotAGroup("identity", ())

    def inverse(self, i: int) -> int:
        e = self.identity
        return next(j for j in range(self.order) if self.table[i][j] == e)

    def validate(self):
        n = self.order
        if n == 0 or len(self.table) != n or any(len(r) != n for r in self.table):
            raise NotAGroup("shape", (n,))
        if any(not (0 <= v < n) for r in self.table for v in r):
            raise NotAGroup("closure", ())
        for a, b, c in cartesian(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise NotAGroup("associativity", (a, b, c))
        e = self.identity
        for a in range(n):
            if not any(self.table[a][b] == e and self.table[b][a] == e for b in range(n)):
                raise NotAGroup("inverse", (a,))


@dataclass(frozen=True)
class Realized:
    dim: int
    grades: dict | None = None


def invert_iso(m: Mat) -> Mat:
    """Inverse of an invertible matrix, with a shortcut for permutation matrices."""
    if m.is_square() and all(len(c) == 1 and next(iter(c.values())) == 1 for c in m._cols):
        rows = [next(iter(c)) for c in m._cols]
        if len(set(rows)) == m.rows:
            return m.T
    inv = try_invert(m)
    if isinstance(inv, NotInvertible):
        raise ValueError("structure isomorphism is not invertible")
    return inv


class DuoidalInstance:
    """Shared machinery.  Subclasses supply the descriptor-level primitives."""

    kind = "abstract"

    def __init__(self, field, atoms: dict | None = None):
        self.field = field
        self.atoms = dict(atoms or {})
        self._desc_cache: dict = {}
        self._mat_cache: dict = {}

    # primitives

    def unit_desc(self, op):
        raise NotImplementedError

    def prod_desc(self, op, d1, d2):
        raise NotImplementedError

    def dim_of(self, d) -> int:
        raise NotImplementedError

    def grades_of(self, d) -> dict | None:
        return None

    def tensor_data(self, op, f, g, fd, fc, gd, gc) -> Mat:
        raise NotImplementedError

    def zeta_data(self, da, db, dc, dd) -> Mat:
        raise NotImplementedError

    def delta_data(self) -> Mat:
        raise NotImplementedError

    def varpi_data(self) -> Mat:
        raise NotImplementedError

    def tau_data(self) -> Mat:
        raise NotImplementedError

    def assoc_data(self, op, dx, dy, dz) -> Mat:
        raise NotImplementedError

    def lunit_data(self, op, dx) -> Mat:
        raise NotImplementedError

    def runit_data(self, op, dx) -> Mat:
        raise NotImplementedError

    def preserves_grading(self, m: Mat, dd, dc) -> bool:
        return True

    def with_atoms(self, atoms: dict) -> DuoidalInstance:
        raise NotImplementedError

    def random_data(self, dd, dc, rng) -> Mat:
        """A random morphism matrix between two realized objects (small integer entries)."""
        raise NotImplementedError

    def retract_desc(self, d, pivots):
        """Descriptor of the subobject spanned by the basis vectors ``pivots`` of ``d``."""
        raise NotImplementedError

    def declare_atom(self, name: str, d):
        """Add an atom to the (shared, append-only) atom table."""
        old = self.atoms.get(name)
        if old is not None and old != d:
            raise ValueError(f"atom {name} already declared with a different shape")
        self.atoms[name] = d
        return Atom(name)

    # realization

    def desc(self, x: ObjExpr):
        d = self._desc_cache.get(x)
        if d is not None:
            return d
        if isinstance(x, Unit):
            d = self.unit_desc("circ" if x.which == "I" else "bullet")
        elif isinstance(x, Atom):
            if x.name not in self.atoms:
                raise UnknownAtom(x.name)
            d = self.atoms[x.name]
        elif isinstance(x, Prod):
            d = self.prod_desc(x.op, self.desc(x.left), self.desc(x.right))
        else:
            raise TypeError(f"not an object expression: {x!r}")
        self._desc_cache[x] = d
        return d

    def dim(self, x: ObjExpr) -> int:
        return self.dim_of(self.desc(x))

    def realize(self, x: ObjExpr) -> Realized:
        d = self.desc(x)
        return Realized(self.dim_of(d), self.grades_of(d))

    def _cached(self, key, build):
        m = self._mat_cache.get(key)
        if m is None:
            m = build()
            self._mat_cache[key] = m
        return m

    # morphisms

    def random_morphism(self, dom: ObjExpr, cod: ObjExpr, rng) -> Morph:
        return Morph(dom, cod, self.random_data(self.desc(dom), self.desc(cod), rng))

    def morph(self, dom: ObjExpr, cod: ObjExpr, data: Mat) -> Morph:
        if data.shape != (self.dim(cod), self.dim(dom)):
            raise ValueError(f"matrix {data.shape} does not fit {dom} -> {cod}")
        return Morph(dom, cod, data)

    def identity(self, x: ObjExpr) -> Morph:
        return Morph(x, x, Mat.identity(self.dim(x), self.field))

    def tensor(self, op: str, f: Morph, g: Morph) -> Morph:
        data = self.tensor_data(op, f.data, g.data, self.desc(f.dom), self.desc(f.cod),
                                self.desc(g.dom), self.desc(g.cod))
        return Morph(Prod(op, f.dom, g.dom), Prod(op, f.cod, g.cod), data)

    def zeta(self, a: ObjExpr, b: ObjExpr, c: ObjExpr, d: ObjExpr) -> Morph:
        ds = tuple(self.desc(x) for x in (a, b, c, d))
        data = self._cached(("zeta",) + ds, lambda: self.zeta_data(*ds))
        return Morph(Prod(CIRC, Prod(BULLET, a, b), Prod(BULLET, c, d)),
                     Prod(BULLET, Prod(CIRC, a, c), Prod(CIRC, b, d)), data)

    def delta(self) -> Morph:
        from .objects import I
        return Morph(I, Prod(BULLET, I, I), self._cached(("delta",), self.delta_data))

    def varpi(self) -> Morph:
        from .objects import J
        return Morph(Prod(CIRC, J, J), J, self._cached(("varpi",), self.varpi_data))

    def tau(self) -> Morph:
        from .objects import I, J
        return Morph(I, J, self._cached(("tau",), self.tau_data))

    def associator(self, op: str, x, y, z) -> Morph:
        ds = (self.desc(x), self.desc(y), self.desc(z))
        data = self._cached(("assoc", op) + ds, lambda: self.assoc_data(op, *ds))
        return Morph(Prod(op, Prod(op, x, y), z), Prod(op, x, Prod(op, y, z)), data)

    def left_unitor(self, op: str, x) -> Morph:
        from .objects import unit_of
        dx = self.desc(x)
        data = self._cached(("lunit", op, dx), lambda: self.lunit_data(op, dx))
        return Morph(Prod(op, unit_of(op), x), x, data)

    def right_unitor(self, op: str, x) -> Morph:
        from .objects import unit_of
        dx = self.desc(x)
        data = self._cached(("runit", op, dx), lambda: self.runit_data(op, dx))
        return Morph(Prod(op, x, unit_of(op)), x, data)


class BraidedVec(DuoidalInstance):
    """Finite-dimensional vector spaces with both products the Kronecker tensor."""

    kind = "braided_vec"

    def with_atoms(self, atoms):
        return BraidedVec(self.field, {**self.atoms, **atoms})

    def unit_desc(self, op):
        return 1

    def random_data(self, dd, dc, rng):
        return Mat.from_rows([[rng.randint(-2, 2) for _ in range(dd)] for _ in range(dc)],
                             self.field, ncols=dd)

    def retract_desc(self, d, pivots):
        return len(pivots)

    def prod_desc(self, op, d1, d2):
        return d1 * d2

    def dim_of(self, d):
        return d

    def tensor_data(self, op, f, g, fd, fc, gd, gc):
        return f.kron(g)

    def zeta_data(self, na, nb, nc, nd):
        images = []
        for a, b, c, d in cartesian(range(na), range(nb), range(nc), range(nd)):
            images.append(((a * nc + c) * nb + b) * nd + d)
        return Mat.permutation(images, field=self.field)

    def delta_data(self):
        return Mat.identity(1, self.field)

    varpi_data = tau_data = delta_data

    def assoc_data(self, op, dx, dy, dz):
        return Mat.identity(dx * dy * dz, self.field)

    def lunit_data(self, op, dx):
        return Mat.identity(dx, self.field)

    runit_data = lunit_data


class GradedVec(DuoidalInstance):
    """G-graded vector spaces with the Cauchy product ∘ and the Hadamard product •."""

    kind = "graded_vec"

    def __init__(self, group: GroupTable, field=QQ, atoms=None):
        super().__init__(field, atoms)
        self.group = group
        self.e = group.identity
        self._layouts: dict = {}
        self._indexes: dict = {}

    def with_atoms(self, atoms):
        return GradedVec(self.group, self.field, {**self.atoms, **atoms})

    def unit_desc(self, op):
        n = self.group.order
        if op == CIRC:
            return tuple(1 if x == self.e else 0 for x in range(n))
        return (1,) * n

    def prod_desc(self, op, d1, d2):
        return self._layout(op, d1, d2)[1]

    def dim_of(self, d):
        return sum(d)

    def grades_of(self, d):
        return {self.group.elements[x]: n for x, n in enumerate(d)}

    def _index(self, d):
        """Per basis vector: (grade, index within its grade)."""
        idx = self._indexes.get(d)
        if idx is None:
            idx = [(x, i) for x, n in enumerate(d) for i in range(n)]
            self._indexes[d] = idx
        return idx

    def _layout(self, op, d1, d2):
        """Offsets of the blocks of ``d1 op d2`` and the resulting descriptor.

        For ∘ the block key is ``(h, k)``; for • it is the grade.
        """
        key = (op, d1, d2)
        lay = self._layouts.get(key)
        if lay is not None:
            return lay
        g = self.group
        n = g.order
        offsets = {}
        dims = []
        pos = 0
        for x in range(n):
            start = pos
            if op == CIRC:
                for h in range(n):
                    k = g.mul(g.inverse(h), x)
                    offsets[(h, k)] = pos
                    pos += d1[h] * d2[k]
            else:
                offsets[x] = pos
                pos += d1[x] * d2[x]
            dims.append(pos - start)
        lay = (offsets, tuple(dims))
        self._layouts[key] = lay
        return lay

    def _pos(self, op, d1, d2):
        offsets, _ = self._layout(op, d1, d2)
        i1, i2 = self._index(d1), self._index(d2)
        if op == CIRC:
            def pos(a, b):
                h, la = i1[a]
                k, lb = i2[b]
                return offsets[(h, k)] + la * d2[k] + lb
        else:
            def pos(a, b):
                h, la = i1[a]
                k, lb = i2[b]
                if h != k:
                    return None
                return offsets[h] + la * d2[k] + lb
        return pos

    def random_data(self, dd, dc, rng):
        gd, gc = self._grades(dd), self._grades(dc)
        entries = {(i, j): rng.randint(-2, 2) for j in range(len(gd)) for i in range(len(gc))
                   if gd[j] == gc[i]}
        return Mat.from_entries(len(gc), len(gd), entries, self.field)

    def retract_desc(self, d, pivots):
        grades = [self._grades(d)[p] for p in pivots]
        if grades != sorted(grades):
            raise ValueError("retract basis is not grade-ordered")
        return tuple(grades.count(x) for x in range(self.group.order))

    def preserves_grading(self, m, dd, dc):
        idom, icod = self._index(dd), self._index(dc)
        return all(icod[i][0] == idom[j][0] for j in range(m.cols) for i in m._cols[j])

    def tensor_data(self, op, f, g, fd, fc, gd, gc):
        pdom = self._pos(op, fd, gd)
        pcod = self._pos(op, fc, gc)
        norm = self.field.norm
        n = self.dim_of(self.prod_desc(op, fd, gd))
        m = self.dim_of(self.prod_desc(op, fc, gc))
        columns = [dict() for _ in range(n)]
        for a in range(f.cols):
            fa = f._cols[a]
            for b in range(g.cols):
                j = pdom(a, b)
                if j is None:
                    continue
                col = columns[j]
                for b2, w in g._cols[b].items():
                    for a2, v in fa.items():
                        i = pcod(a2, b2)
                        if i is not None:
                            col[i] = norm(v * w)
        return Mat(m, n, columns, self.field)

    def _grades(self, d):
        return [x for x, _ in self._index(d)]

    def zeta_data(self, da, db, dc, dd):
        pab, pcd = self._pos(BULLET, da, db), self._pos(BULLET, dc, dd)
        dab, dcd = self.prod_desc(BULLET, da, db), self.prod_desc(BULLET, dc, dd)
        pdom = self._pos(CIRC, dab, dcd)
        pac, pbd = self._pos(CIRC, da, dc), self._pos(CIRC, db, dd)
        dac, dbd = self.prod_desc(CIRC, da, dc), self.prod_desc(CIRC, db, dd)
        pcod = self._pos(BULLET, dac, dbd)
        n = self.dim_of(self.prod_desc(CIRC, dab, dcd))
        images = [None] * n
        ga, gb, gc, gd = (self._grades(x) for x in (da, db, dc, dd))
        for a, b in cartesian(range(len(ga)), range(len(gb))):
            if ga[a] != gb[b]:
                continue
            ab = pab(a, b)
            for c, d in cartesian(range(len(gc)), range(len(gd))):
                if gc[c] != gd[d]:
                    continue
                images[pdom(ab, pcd(c, d))] = pcod(pac(a, c), pbd(b, d))
        return Mat.permutation(images, rows=self.dim_of(self.prod_desc(BULLET, dac, dbd)),
                               field=self.field)

    def delta_data(self):
        return Mat.identity(1, self.field)

    def varpi_data(self):
        dj = self.unit_desc(BULLET)
        src = self._index(self.prod_desc(CIRC, dj, dj))
        return Mat.from_entries(self.group.order, len(src), {(x, j): 1 for j, (x, _) in enumerate(src)},
                                self.field)

    def tau_data(self):
        return Mat.from_entries(self.group.order, 1, {(self.e, 0): 1}, self.field)

    def assoc_data(self, op, dx, dy, dz):
        pxy, pyz = self._pos(op, dx, dy), self._pos(op, dy, dz)
        dxy, dyz = self.prod_desc(op, dx, dy), self.prod_desc(op, dy, dz)
        psrc, pdst = self._pos(op, dxy, dz), self._pos(op, dx, dyz)
        n = self.dim_of(self.prod_desc(op, dxy, dz))
        images = [None] * n
        for a, b, c in cartesian(range(sum(dx)), range(sum(dy)), range(sum(dz))):
            ab, bc = pxy(a, b), pyz(b, c)
            if ab is None or bc is None:
                continue
            images[psrc(ab, c)] = pdst(a, bc)
        return Mat.permutation(images, field=self.field)

    def lunit_data(self, op, dx):
        du = self.unit_desc(op)
        p = self._pos(op, du, dx)
        units = range(sum(du))
        images = [None] * sum(dx)
        for u in units:
            for a in range(sum(dx)):
                j = p(u, a)
                if j is not None:
                    images[j] = a
        return Mat.permutation(images, field=self.field)

    def runit_data(self, op, dx):
        du = self.unit_desc(op)
        p = self._pos(op, dx, du)
        images = [None] * sum(dx)
        for u in range(sum(du)):
            for a in range(sum(dx)):
                j = p(a, u)
                if j is not None:
                    images[j] = a
        return Mat.permutation(images, field=self.field)


TRANSFORMS = ("circ_op", "bullet_op", "star")


class Transformed(DuoidalInstance):
    """One of the three twists of a duoidal structure on the same vector spaces.

    ``circ_op`` and ``bullet_op`` reverse one product.  ``star`` swaps the two
    products and realizes the opposite category through transposition: a
    morphism X → Y here is stored as the transpose of the underlying map Y → X.
    """

    def __init__(self, base: DuoidalInstance, how: str):
        if how not in TRANSFORMS:
            raise UnsupportedTransform(how)
        super().__init__(base.field)
        self.atoms = base.atoms
        self.base = base
        self.how = how
        self.kind = f"{how}({base.kind})"

    def with_atoms(self, atoms):
        return Transformed(self.base.with_atoms(atoms), self.how)

    def _flips(self, op):
        return (self.how == "circ_op" and op == CIRC) or (self.how == "bullet_op" and op == BULLET)

    def _op(self, op):
        return other(op) if self.how == "star" else op

    def unit_desc(self, op):
        return self.base.unit_desc(self._op(op))

    def prod_desc(self, op, d1, d2):
        if self._flips(op):
            return self.base.prod_desc(op, d2, d1)
        return self.base.prod_desc(self._op(op), d1, d2)

    def dim_of(self, d):
        return self.base.dim_of(d)

    def grades_of(self, d):
        return self.base.grades_of(d)

    def random_data(self, dd, dc, rng):
        if self.how == "star":
            return self.base.random_data(dc, dd, rng).T
        return self.base.random_data(dd, dc, rng)

    def retract_desc(self, d, pivots):
        return self.base.retract_desc(d, pivots)

    def preserves_grading(self, m, dd, dc):
        if self.how == "star":
            return self.base.preserves_grading(m.T, dc, dd)
        return self.base.preserves_grading(m, dd, dc)

    def tensor_data(self, op, f, g, fd, fc, gd, gc):
        if self._flips(op):
            return self.base.tensor_data(op, g, f, gd, gc, fd, fc)
        if self.how == "star":
            return self.base.tensor_data(other(op), f.T, g.T, fc, fd, gc, gd).T
        return self.base.tensor_data(op, f, g, fd, fc, gd, gc)

    def zeta_data(self, da, db, dc, dd):
        if self.how == "circ_op":
            return self.base.zeta_data(dc, dd, da, db)
        if self.how == "bullet_op":
            return self.base.zeta_data(db, da, dd, dc)
        return self.base.zeta_data(da, dc, db, dd).T

    def delta_data(self):
        if self.how == "star":
            return self.base.varpi_data().T
        return self.base.delta_data()

    def varpi_data(self):
        if self.how == "star":
            return self.base.delta_data().T
        return self.base.varpi_data()

    def tau_data(self):
        if self.how == "star":
            return self.base.tau_data().T
        return self.base.tau_data()

    def assoc_data(self, op, dx, dy, dz):
        if self._flips(op):
            return invert_iso(self.base.assoc_data(op, dz, dy, dx))
        if self.how == "star":
            return invert_iso(self.base.assoc_data(other(op), dx, dy, dz)).T
        return self.base.assoc_data(op, dx, dy, dz)

    def lunit_data(self, op, dx):
        if self._flips(op):
            return self.base.runit_data(op, dx)
        if self.how == "star":
            return invert_iso(self.base.lunit_data(other(op), dx)).T
        return self.base.lunit_data(op, dx)

    def runit_data(self, op, dx):
        if self._flips(op):
            return self.base.lunit_data(op, dx)
        if self.how == "star":
            return invert_iso(self.base.runit_data(other(op), dx)).T
        return self.base.runit_data(op, dx)


def make_braided_vec(field=QQ, atoms: dict | None = None) -> BraidedVec:
    return BraidedVec(field, atoms)


def make_graded_vec(group: GroupTable, field=QQ, atoms: dict | None = None) -> GradedVec:
    group.validate()
    return GradedVec(group, field, atoms)


def transform(inst: DuoidalInstance, how: str) -> DuoidalInstance:
    return Transformed(inst, how)


def transform_chain(inst: DuoidalInstance, hows) -> DuoidalInstance:
    """Apply transforms innermost first; each step is cached on its base."""
    for how in hows:
        key = ("transformed", how)
        t = inst._mat_cache.get(key)
        if t is None:
            t = inst._mat_cache[key] = Transformed(inst, how)
        inst = t
    return inst


def interchange(inst: DuoidalInstance, a, b, c, d) -> Morph:
    """ζ: (a•b)∘(c•d) → (a∘c)•(b∘d)."""
    return inst.zeta(a, b, c, d)


def realize(inst: DuoidalInstance, x: ObjExpr) -> Realized:
    return inst.realize(x)


def tensor_mor(inst: DuoidalInstance, op: str, f: Morph, g: Morph) -> Morph:
    return inst.tensor(op, f, g)
