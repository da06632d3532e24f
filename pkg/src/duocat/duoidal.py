"""Verification of the duoidal axioms on probe objects."""
from __future__ import annotations

import random

from .coherence import Diagram
from .instances import DuoidalInstance
from .objects import BULLET, CIRC, I, J, Atom, Prod, bullet, circ
from .reports import CheckReport, compare

ARITY = 6


def default_probes(inst: DuoidalInstance) -> list[tuple]:
    """Probe tuples of length six built from I, J and every declared atom.

    Each object appears alone (repeated six times), and the full list of
    objects appears in every cyclic rotation.
    """
    objs = [I, J] + [Atom(n) for n in sorted(inst.atoms)]
    probes = [(x,) * ARITY for x in objs]
    for r in range(len(objs)):
        rot = objs[r:] + objs[:r]
        probes.append(tuple(rot[i % len(rot)] for i in range(ARITY)))
    return probes


def _label(objs) -> str:
    return ",".join(str(x) for x in objs)


def _pick(probe, k):
    return tuple(probe[i % len(probe)] for i in range(k))


def unit_compatibility(inst: DuoidalInstance) -> CheckReport:
    """(J, ϖ, τ) is a ∘-monoid and (I, δ, τ) is a •-comonoid."""
    d = Diagram(inst)
    rep = CheckReport()
    varpi, tau, delta = inst.varpi(), inst.tau(), inst.delta()
    lhs = d.path(d.c(varpi, J), varpi)
    rhs = d.path(circ(circ(J, J), J), d.c(J, varpi), varpi)
    rep.add(compare("J_monoid_assoc", *d.align(lhs, rhs)))
    rep.add(compare("J_monoid_left_unit", *d.align(d.path(d.c(tau, J), varpi), d.coh(circ(I, J), J))))
    rep.add(compare("J_monoid_right_unit", *d.align(d.path(d.c(J, tau), varpi), d.coh(circ(J, I), J))))
    lhs = d.path(delta, d.b(delta, I))
    rhs = d.path(delta, d.b(I, delta), bullet(bullet(I, I), I))
    rep.add(compare("I_comonoid_coassoc", *d.align(lhs, rhs)))
    rep.add(compare("I_comonoid_left_counit", *d.align(d.path(delta, d.b(tau, I)), d.coh(I, bullet(J, I)))))
    rep.add(compare("I_comonoid_right_counit", *d.align(d.path(delta, d.b(I, tau)), d.coh(I, bullet(I, J)))))
    return rep


def associativity(inst, a, b, c, dd, e, f) -> CheckReport:
    d = Diagram(inst)
    rep = CheckReport()
    z = inst.zeta
    ab, cd, ef = bullet(a, b), bullet(c, dd), bullet(e, f)
    lhs = d.path(d.c(ab, z(c, dd, e, f)), z(a, b, circ(c, e), circ(dd, f)))
    rhs = d.path(Prod(CIRC, Prod(CIRC, ab, cd), ef), d.c(z(a, b, c, dd), ef),
                 z(circ(a, c), circ(b, dd), e, f))
    rep.add(compare("assoc_circ", *d.align(lhs, rhs)))
    lhs = d.path(z(a, bullet(b, c), dd, bullet(e, f)), d.b(circ(a, dd), z(b, c, e, f)))
    rhs = d.path(circ(Prod(BULLET, ab, c), Prod(BULLET, bullet(dd, e), f)),
                 z(ab, c, bullet(dd, e), f), d.b(z(a, b, dd, e), circ(c, f)))
    rep.add(compare("assoc_bullet", *d.align(lhs, rhs)))
    return rep


def unitality(inst, a, b) -> CheckReport:
    d = Diagram(inst)
    rep = CheckReport()
    z = inst.zeta
    ab = bullet(a, b)
    rep.add(compare("unit_delta_left", *d.align(
        d.path(ab, d.c(inst.delta(), ab), z(I, I, a, b), ab), inst.identity(ab))))
    rep.add(compare("unit_delta_right", *d.align(
        d.path(ab, d.c(ab, inst.delta()), z(a, b, I, I), ab), inst.identity(ab))))
    aob = circ(a, b)
    rep.add(compare("unit_varpi_left", *d.align(
        d.path(aob, z(J, a, J, b), d.b(inst.varpi(), aob), aob), inst.identity(aob))))
    rep.add(compare("unit_varpi_right", *d.align(
        d.path(aob, z(a, J, b, J), d.b(aob, inst.varpi()), aob), inst.identity(aob))))
    return rep


def coherence_triangles(inst, a, b) -> CheckReport:
    """ζ against τ: the four placements of I and τ next to two objects."""
    d = Diagram(inst)
    rep = CheckReport()
    z, tau, varpi = inst.zeta, inst.tau(), inst.varpi()
    aob = circ(a, b)
    lhs = d.path(z(a, I, b, J), d.b(aob, d.c(tau, J)), d.b(aob, varpi), aob)
    rhs = d.c(d.b(a, tau), b)
    rep.add(compare("coh_AI_B", *d.align(lhs, rhs)))
    lhs = d.path(z(I, a, J, b), d.b(d.c(tau, J), aob), d.b(varpi, aob), aob)
    rhs = d.c(d.b(tau, a), b)
    rep.add(compare("coh_IA_B", *d.align(lhs, rhs)))
    lhs = d.path(z(a, J, b, I), d.b(aob, d.c(J, tau)), d.b(aob, varpi), aob)
    rhs = d.c(a, d.b(b, tau))
    rep.add(compare("coh_A_BI", *d.align(lhs, rhs)))
    lhs = d.path(z(J, a, I, b), d.b(d.c(J, tau), aob), d.b(varpi, aob), aob)
    rhs = d.c(a, d.b(tau, b))
    rep.add(compare("coh_A_IB", *d.align(lhs, rhs)))
    return rep


def zeta_naturality(inst, objs, targets, rng) -> CheckReport:
    d = Diagram(inst)
    a, b, c, dd = objs
    fs = [inst.random_morphism(x, y, rng) for x, y in zip(objs, targets)]
    f, g, h, k = fs
    lhs = d.path(d.c(d.b(f, g), d.b(h, k)), inst.zeta(*targets))
    rhs = d.path(inst.zeta(a, b, c, dd), d.b(d.c(f, h), d.c(g, k)))
    rep = CheckReport()
    rep.add(compare("zeta_natural", *d.align(lhs, rhs)))
    return rep


def check_duoidal(inst: DuoidalInstance, probes: list | None = None, seed: int = 0) -> CheckReport:
    """Evaluate every duoidal axiom on each probe tuple; one entry per diagram."""
    if probes is None:
        probes = default_probes(inst)
    rng = random.Random(seed)
    rep = CheckReport()
    for e in unit_compatibility(inst).entries:
        rep.merge_probe(e)
    for probe in probes:
        probe = tuple(probe)
        six = _pick(probe, 6)
        two = _pick(probe, 2)
        four = _pick(probe, 4)
        parts = [
            (associativity(inst, *six), six),
            (unitality(inst, *two), two),
            (coherence_triangles(inst, *two), two),
            (zeta_naturality(inst, four, four[1:] + four[:1], rng), four),
        ]
        for sub, objs in parts:
            for e in sub.entries:
                e.probe = _label(objs)
                rep.merge_probe(e)
    return rep
