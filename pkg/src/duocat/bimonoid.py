"""Weak bimonoids in a duoidal category: the axioms, the classifier, and κ.

Each weak axiom is written out from its own diagram.  The three duality
transforms are only used to cross-check the transcriptions against each
other (``DUALITY_EDGES``).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .coherence import Diagram
from .instances import DuoidalInstance, Transformed
from .linalg import Mat
from .objects import BULLET, CIRC, I, J, Atom, Morph, ObjExpr, Prod, Unit, bullet, circ, compose
from .reports import CheckReport, Entry, PrerequisiteFailed, compare

RIGHT_AXIOMS = ("RRU", "LRU", "LLC", "LRC")
LEFT_AXIOMS = ("RLU", "LLU", "RLC", "RRC")
AXIOMS = ("WB",) + RIGHT_AXIOMS + LEFT_AXIOMS

# (transform, axiom, image of the axiom under the transform)
DUALITY_EDGES = (
    ("circ_op", "RRU", "RLU"), ("circ_op", "LRU", "LLU"),
    ("circ_op", "LLC", "RLC"), ("circ_op", "LRC", "RRC"),
    ("bullet_op", "RRU", "LRU"), ("bullet_op", "RLU", "LLU"),
    ("bullet_op", "LLC", "LRC"), ("bullet_op", "RLC", "RRC"),
    ("star", "RRU", "LLC"), ("star", "RLU", "LRC"),
    ("star", "LLU", "RRC"), ("star", "LRU", "RLC"),
)


@dataclass(frozen=True)
class WeakBimonoidData:
    """Candidate structure (A, μ, η, Δ, ε); nothing is assumed about it."""

    carrier: Atom
    mu: Morph
    eta: Morph
    delta_A: Morph
    eps: Morph

    @classmethod
    def from_matrices(cls, inst: DuoidalInstance, carrier: ObjExpr, mu: Mat, eta: Mat,
                      delta: Mat, eps: Mat) -> WeakBimonoidData:
        a = carrier
        return cls(a, inst.morph(circ(a, a), a, mu), inst.morph(I, a, eta),
                   inst.morph(a, bullet(a, a), delta), inst.morph(a, J, eps))

    @property
    def unit_comult(self) -> Morph:
        """Δ·η : I → A•A."""
        return compose(self.delta_A, self.eta)

    @property
    def counit_mult(self) -> Morph:
        """ε·μ : A∘A → J."""
        return compose(self.eps, self.mu)


# moving data along the duality transforms

def translate(x: ObjExpr, how: str) -> ObjExpr:
    """The expression naming the same realized object after the transform ``how``."""
    if isinstance(x, Unit):
        if how == "star":
            return J if x == I else I
        return x
    if not isinstance(x, Prod):
        return x
    left, right = translate(x.left, how), translate(x.right, how)
    if how == "star":
        return Prod(BULLET if x.op == CIRC else CIRC, left, right)
    if (how == "circ_op" and x.op == CIRC) or (how == "bullet_op" and x.op == BULLET):
        return Prod(x.op, right, left)
    return Prod(x.op, left, right)


def mirror(m: Morph, how: str) -> Morph:
    """The same linear map seen through the transform ``how`` (an involution).

    Under ``star`` a map X → Y becomes an arrow Y → X of the opposite
    category, stored transposed.
    """
    if how == "star":
        return Morph(translate(m.cod, how), translate(m.dom, how), m.data.T)
    return Morph(translate(m.dom, how), translate(m.cod, how), m.data)


def mirror_chain(m: Morph, hows) -> Morph:
    """Push ``m`` through a chain of transforms, innermost first."""
    for how in hows:
        m = mirror(m, how)
    return m


def pull_chain(m: Morph, hows) -> Morph:
    """Inverse of ``mirror_chain``."""
    for how in reversed(tuple(hows)):
        m = mirror(m, how)
    return m


def transform_data(d: WeakBimonoidData, how: str) -> WeakBimonoidData:
    """The same data read in ``transform(inst, how)``.

    Reversing a product leaves a (co)monoid literally unchanged.  Under
    ``star`` the monoid and the comonoid trade places.
    """
    if how == "star":
        return WeakBimonoidData(d.carrier, mirror(d.delta_A, how), mirror(d.eps, how),
                                mirror(d.mu, how), mirror(d.eta, how))
    return WeakBimonoidData(d.carrier, mirror(d.mu, how), mirror(d.eta, how),
                            mirror(d.delta_A, how), mirror(d.eps, how))


def transform_data_chain(d: WeakBimonoidData, hows) -> WeakBimonoidData:
    for how in hows:
        d = transform_data(d, how)
    return d


# monoid and comonoid laws

def check_monoid(inst: DuoidalInstance, d: WeakBimonoidData) -> CheckReport:
    dg = Diagram(inst)
    a, mu, eta = d.carrier, d.mu, d.eta
    rep = CheckReport()
    rep.add(compare("mu_assoc", *dg.align(dg.path(dg.c(mu, a), mu), dg.path(dg.c(a, mu), mu))))
    rep.add(compare("mu_left_unit", *dg.align(dg.path(dg.c(eta, a), mu), inst.identity(a))))
    rep.add(compare("mu_right_unit", *dg.align(dg.path(dg.c(a, eta), mu), inst.identity(a))))
    return rep


def check_comonoid(inst: DuoidalInstance, d: WeakBimonoidData) -> CheckReport:
    dg = Diagram(inst)
    a, delta, eps = d.carrier, d.delta_A, d.eps
    rep = CheckReport()
    rep.add(compare("delta_coassoc", *dg.align(dg.path(delta, dg.b(delta, a)),
                                               dg.path(delta, dg.b(a, delta)))))
    rep.add(compare("delta_left_counit", *dg.align(dg.path(delta, dg.b(eps, a)),
                                                   dg.coh(a, bullet(J, a)))))
    rep.add(compare("delta_right_counit", *dg.align(dg.path(delta, dg.b(a, eps)),
                                                    dg.coh(a, bullet(a, J)))))
    return rep


def require_structure(inst: DuoidalInstance, d: WeakBimonoidData):
    """Raise PrerequisiteFailed unless the monoid and comonoid laws hold."""
    rep = check_monoid(inst, d).extend(check_comonoid(inst, d))
    if not rep.passed:
        raise PrerequisiteFailed("monoid/comonoid laws", rep)


# the nine axioms, each as (one side, other side)

def _wb(dg, d):
    a, z = d.carrier, dg.inst.zeta
    return (dg.path(d.mu, d.delta_A),
            dg.path(dg.c(d.delta_A, d.delta_A), z(a, a, a, a), dg.b(d.mu, d.mu)))


def _unit_bottom_right(dg, d):
    a, delta = d.carrier, dg.inst.delta()
    return dg.path(delta, dg.b(I, d.eta), dg.b(I, d.delta_A), dg.b(I, a, d.delta_A))


def _unit_bottom_left(dg, d):
    a, delta = d.carrier, dg.inst.delta()
    return dg.path(delta, dg.b(d.eta, I), dg.b(d.delta_A, I), dg.b(d.delta_A, a, I))


def _rru(dg, d):
    a, dn, z, delta = d.carrier, d.unit_comult, dg.inst.zeta, dg.inst.delta()
    ia = bullet(I, a)
    top = dg.path(delta, dg.b(I, dn), dg.b(dg.c(ia, delta), a), dg.b(dg.c(ia, dg.b(I, dn)), a),
                  dg.b(z(I, a, ia, a), a), dg.b(I, a, d.mu, a))
    return top, _unit_bottom_right(dg, d)


def _rlu(dg, d):
    a, dn, z, delta = d.carrier, d.unit_comult, dg.inst.zeta, dg.inst.delta()
    ia = bullet(I, a)
    top = dg.path(delta, dg.b(I, dn), dg.b(dg.c(delta, ia), a), dg.b(dg.c(dg.b(I, dn), ia), a),
                  dg.b(z(ia, a, I, a), a), dg.b(I, a, d.mu, a))
    return top, _unit_bottom_right(dg, d)


def _lru(dg, d):
    a, dn, z, delta = d.carrier, d.unit_comult, dg.inst.zeta, dg.inst.delta()
    ai = bullet(a, I)
    top = dg.path(delta, dg.b(dn, I), dg.b(a, dg.c(ai, delta)), dg.b(a, dg.c(ai, dg.b(dn, I))),
                  dg.b(a, z(a, I, a, ai)), dg.b(a, d.mu, a, I))
    return top, _unit_bottom_left(dg, d)


def _llu(dg, d):
    a, dn, z, delta = d.carrier, d.unit_comult, dg.inst.zeta, dg.inst.delta()
    ai = bullet(a, I)
    top = dg.path(delta, dg.b(dn, I), dg.b(a, dg.c(delta, ai)), dg.b(a, dg.c(dg.b(dn, I), ai)),
                  dg.b(a, z(a, ai, a, I)), dg.b(a, d.mu, a, I))
    return top, _unit_bottom_left(dg, d)


def _counit_bottom_left(dg, d):
    a, varpi = d.carrier, dg.inst.varpi()
    return dg.path(dg.c(J, a, d.mu), dg.c(J, d.mu), dg.c(J, d.eps), varpi)


def _counit_bottom_right(dg, d):
    a, varpi = d.carrier, dg.inst.varpi()
    return dg.path(dg.c(d.mu, a, J), dg.c(d.mu, J), dg.c(d.eps, J), varpi)


def _lrc(dg, d):
    a, em, z, varpi = d.carrier, d.counit_mult, dg.inst.zeta, dg.inst.varpi()
    ja = circ(J, a)
    top = dg.path(dg.c(J, a, d.delta_A, a), dg.c(z(ja, J, a, a), a),
                  dg.c(dg.b(dg.c(J, em), ja), a), dg.c(dg.b(varpi, ja), a),
                  dg.c(J, em), varpi)
    return top, _counit_bottom_left(dg, d)


def _llc(dg, d):
    a, em, z, varpi = d.carrier, d.counit_mult, dg.inst.zeta, dg.inst.varpi()
    ja = circ(J, a)
    top = dg.path(dg.c(J, a, d.delta_A, a), dg.c(z(J, ja, a, a), a),
                  dg.c(dg.b(ja, dg.c(J, em)), a), dg.c(dg.b(ja, varpi), a),
                  dg.c(J, em), varpi)
    return top, _counit_bottom_left(dg, d)


def _rrc(dg, d):
    a, em, z, varpi = d.carrier, d.counit_mult, dg.inst.zeta, dg.inst.varpi()
    aj = circ(a, J)
    top = dg.path(dg.c(a, d.delta_A, a, J), dg.c(a, z(a, a, aj, J)),
                  dg.c(a, dg.b(dg.c(em, J), aj)), dg.c(a, dg.b(varpi, aj)),
                  dg.c(em, J), varpi)
    return top, _counit_bottom_right(dg, d)


def _rlc(dg, d):
    a, em, z, varpi = d.carrier, d.counit_mult, dg.inst.zeta, dg.inst.varpi()
    aj = circ(a, J)
    top = dg.path(dg.c(a, d.delta_A, a, J), dg.c(a, z(a, a, J, aj)),
                  dg.c(a, dg.b(aj, dg.c(em, J))), dg.c(a, dg.b(aj, varpi)),
                  dg.c(em, J), varpi)
    return top, _counit_bottom_right(dg, d)


_AXIOM_SIDES = {"WB": _wb, "RRU": _rru, "LRU": _lru, "LLC": _llc, "LRC": _lrc,
                "RLU": _rlu, "LLU": _llu, "RLC": _rlc, "RRC": _rrc}


def axiom_sides(inst: DuoidalInstance, d: WeakBimonoidData, name: str) -> tuple[Morph, Morph]:
    """The two composites of the named axiom, each as a Morph."""
    return _AXIOM_SIDES[name](Diagram(inst), d)


def evaluate_axiom(inst: DuoidalInstance, d: WeakBimonoidData, name: str) -> Entry:
    """Compare the two sides of an axiom without checking prerequisites."""
    if name not in _AXIOM_SIDES:
        raise ValueError(f"unknown axiom {name!r}")
    lhs, rhs = axiom_sides(inst, d, name)
    return compare(name, *Diagram(inst).align(lhs, rhs))


def check_axiom(inst: DuoidalInstance, d: WeakBimonoidData, name: str) -> Entry:
    require_structure(inst, d)
    return evaluate_axiom(inst, d, name)


def check_axioms(inst: DuoidalInstance, d: WeakBimonoidData) -> CheckReport:
    require_structure(inst, d)
    rep = CheckReport()
    for name in AXIOMS:
        rep.add(evaluate_axiom(inst, d, name))
    return rep


def check_bimonoid_laws(inst: DuoidalInstance, d: WeakBimonoidData) -> CheckReport:
    """The strict bimonoid conditions besides (WB)."""
    dg = Diagram(inst)
    rep = CheckReport()
    rep.add(compare("unit_comultiplicative", *dg.align(
        d.unit_comult, dg.path(inst.delta(), dg.b(d.eta, d.eta)))))
    rep.add(compare("counit_multiplicative", *dg.align(
        d.counit_mult, dg.path(dg.c(d.eps, d.eps), inst.varpi()))))
    rep.add(compare("unit_counit", compose(d.eps, d.eta).data, inst.tau().data))
    return rep


def classify_report(inst: DuoidalInstance, d: WeakBimonoidData) -> tuple[str, CheckReport]:
    """The strongest label together with the report it was read from."""
    rep = check_axioms(inst, d)
    strict = check_bimonoid_laws(inst, d)
    ok = {e.name: e.status == "pass" for e in rep.entries}
    right = ok["WB"] and all(ok[n] for n in RIGHT_AXIOMS)
    left = ok["WB"] and all(ok[n] for n in LEFT_AXIOMS)
    if ok["WB"] and strict.passed:
        if not (right and left):
            failing = [e.name for e in rep.failures]
            raise AssertionError(f"bimonoid data violates weak axioms {failing}")
        label = "bimonoid"
    elif right and left:
        label = "weak"
    elif right:
        label = "right_weak"
    elif left:
        label = "left_weak"
    else:
        label = "none"
    return label, rep.extend(strict)


def classify(inst: DuoidalInstance, d: WeakBimonoidData) -> str:
    return classify_report(inst, d)[0]


# κ and its three properties

def kappa(inst: DuoidalInstance, d: WeakBimonoidData, x: ObjExpr, y: ObjExpr) -> Morph:
    """κ_{X,Y} : ((J∘A)•X)∘(A•Y) → X∘Y."""
    dg = Diagram(inst)
    a = d.carrier
    xy = circ(x, y)
    return dg.path(inst.zeta(circ(J, a), x, a, y), dg.b(dg.c(J, d.counit_mult), xy),
                   dg.b(inst.varpi(), xy), xy)


def _kappa_natural(inst, d, x, x2, y, y2, rng):
    dg = Diagram(inst)
    a = d.carrier
    f = inst.random_morphism(x, x2, rng)
    g = inst.random_morphism(y, y2, rng)
    lhs = dg.path(dg.c(dg.b(circ(J, a), f), dg.b(a, g)), kappa(inst, d, x2, y2))
    rhs = dg.path(kappa(inst, d, x, y), dg.c(f, g))
    return compare("kappa_natural", *dg.align(lhs, rhs))


def _kappa_zeta(inst, d, x, y, z):
    dg = Diagram(inst)
    a = d.carrier
    xz = circ(x, z)
    lhs = dg.path(inst.zeta(circ(J, a), x, bullet(a, y), z), dg.b(kappa(inst, d, J, y), xz))
    rhs = dg.path(kappa(inst, d, x, bullet(y, z)), inst.zeta(J, x, y, z))
    return compare("kappa_zeta", *dg.align(lhs, rhs))


def _kappa_idempotent(inst, d, x, y):
    dg = Diagram(inst)
    a = d.carrier
    k = kappa(inst, d, x, y)
    lift = dg.c(dg.b(dg.c(J, a, d.unit_comult), x), dg.b(a, y))
    lhs = dg.path(lift, dg.c(dg.b(kappa(inst, d, J, a), x), dg.b(a, y)), k)
    return compare("kappa_unit_absorb", *dg.align(lhs, k))


def check_kappa_properties(inst: DuoidalInstance, d: WeakBimonoidData, probes=None,
                           seed: int = 0) -> CheckReport:
    """Naturality of κ, its compatibility with ζ, and absorption of the lifted unit."""
    require_structure(inst, d)
    if probes is None:
        probes = [I, J, d.carrier]
    probes = list(probes)
    rng = random.Random(seed)
    rep = CheckReport()
    for x, y in itertools.product(probes, repeat=2):
        label = f"{x},{y}"
        x2 = probes[(probes.index(x) + 1) % len(probes)]
        y2 = probes[(probes.index(y) + 2) % len(probes)]
        for e in (_kappa_natural(inst, d, x, x2, y, y2, rng), _kappa_idempotent(inst, d, x, y)):
            e.probe = label
            rep.merge_probe(e)
    for x, y, z in itertools.product(probes, repeat=3):
        e = _kappa_zeta(inst, d, x, y, z)
        e.probe = f"{x},{y},{z}"
        rep.merge_probe(e)
    return rep


def duality_closure(inst: DuoidalInstance, d: WeakBimonoidData) -> CheckReport:
    """For each edge of the transformation cube: same verdict on both ends."""
    base = {name: evaluate_axiom(inst, d, name).status for name in AXIOMS}
    rep = CheckReport()
    for how, u, v in DUALITY_EDGES:
        t, td = Transformed(inst, how), transform_data(d, how)
        for src, dst in ((u, v), (v, u)):
            image = evaluate_axiom(t, td, dst).status
            rep.add(Entry(f"{how}:{src}->{dst}", "pass" if image == base[src] else "fail",
                          detail=f"{src}={base[src]}, {dst}@{how}={image}"))
    return rep
