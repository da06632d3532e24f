import itertools
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duocat.coherence import LeafMismatch, coherence_iso
from duocat.duoidal import check_duoidal, default_probes
from duocat.instances import (GradedVec, GroupTable, NotAGroup, UnsupportedTransform,
                              interchange, make_braided_vec, make_graded_vec, realize,
                              tensor_mor, transform)
from duocat.linalg import Mat, PrimeField
from duocat.objects import BULLET, CIRC, Atom, CompositionMismatch, I, J, UnknownAtom, bullet, \
    circ, compose

A, B, C, D = (Atom(n) for n in "ABCD")


def middle_four(na, nb, nc, nd):
    """Dense permutation (a,b,c,d) ↦ (a,c,b,d) with Kronecker indexing on both sides."""
    n = na * nb * nc * nd
    rows = [[0] * n for _ in range(n)]
    for a, b, c, d in itertools.product(range(na), range(nb), range(nc), range(nd)):
        src = ((a * nb + b) * nc + c) * nd + d
        dst = ((a * nc + c) * nb + b) * nd + d
        rows[dst][src] = 1
    return rows


# braided instance

def test_braided_units_and_dims():
    inst = make_braided_vec(atoms={"A": 2})
    assert realize(inst, I).dim == realize(inst, J).dim == 1
    assert realize(inst, circ(A, A)).dim == 4
    for m in (inst.delta(), inst.varpi(), inst.tau()):
        assert m.data == Mat.identity(1)


def test_braided_zeta_is_middle_four():
    inst = make_braided_vec(atoms={"A": 1, "B": 2, "C": 3, "D": 2})
    assert interchange(inst, A, A, A, A).data == Mat.identity(1)
    assert interchange(inst, A, B, C, D).data.to_lists() == middle_four(1, 2, 3, 2)
    inst.declare_atom("E", 2)
    e = Atom("E")
    z = interchange(inst, e, e, e, e)
    assert z.dom == circ(bullet(e, e), bullet(e, e)) and z.cod == bullet(circ(e, e), circ(e, e))
    assert z.data.to_lists() == middle_four(2, 2, 2, 2)


def test_unknown_atom():
    inst = make_braided_vec()
    with pytest.raises(UnknownAtom):
        realize(inst, Atom("nope"))


def test_compose_and_tensor():
    inst = make_braided_vec(atoms={"A": 2})
    aa = circ(A, A)
    swap = inst.morph(aa, aa, Mat.permutation([0, 2, 1, 3]))
    assert compose(swap, swap) == inst.identity(aa)
    assert compose(inst.identity(aa), swap) == swap == compose(swap, inst.identity(aa))
    with pytest.raises(CompositionMismatch):
        compose(inst.identity(A), swap)
    two = inst.morph(J, J, Mat.from_rows([[2]]))
    assert tensor_mor(inst, CIRC, two, inst.identity(A)).data.to_lists() == [[2, 0], [0, 2]]
    assert tensor_mor(inst, BULLET, inst.identity(A), inst.identity(A)) == inst.identity(bullet(A, A))


# graded instance

def test_group_table_validation():
    with pytest.raises(NotAGroup) as exc:
        GroupTable.from_lists(["e", "a"], [[0, 1], [1, 1]])
    assert exc.value.args
    with pytest.raises(NotAGroup):
        GroupTable.from_lists(["e", "a", "b"], [[0, 1, 2], [1, 0, 0], [2, 0, 0]])


def test_graded_dims():
    z2 = make_graded_vec(GroupTable.cyclic(2))
    assert realize(z2, I).dim == 1 and realize(z2, J).dim == 2
    r = realize(z2, circ(J, J))
    assert r.dim == 4 and list(r.grades.values()) == [2, 2]
    assert list(realize(z2, J).grades.values()) == [1, 1]
    trivial = make_graded_vec(GroupTable.cyclic(1), atoms={"A": (3,)})
    braided = make_braided_vec(atoms={"A": 3})
    for x in (I, J, circ(A, bullet(A, J)), bullet(circ(A, A), I)):
        assert realize(trivial, x).dim == realize(braided, x).dim


def test_graded_zeta_on_units_is_diagonal_inclusion():
    z2 = make_graded_vec(GroupTable.cyclic(2))
    z = interchange(z2, J, J, J, J).data
    assert z.shape == (8, 4)
    assert z.rank() == 4
    assert all(len(z.column(j)) == 1 for j in range(4))
    # (J•J)∘(J•J) has summands (h,k) of grade hk; each lands in the ((h,k),(h,k)) slot of
    # (J∘J)•(J∘J), which in grade x pairs the summand with itself
    cod_grades = z2.desc(bullet(circ(J, J), circ(J, J)))
    dom_grades = z2.desc(circ(bullet(J, J), bullet(J, J)))
    assert dom_grades == (2, 2) and cod_grades == (4, 4)


def test_graded_scaling_under_bullet():
    z2 = make_graded_vec(GroupTable.cyclic(2))
    f = z2.morph(J, J, Mat.from_rows([[1, 0], [0, 3]]))
    assert tensor_mor(z2, BULLET, f, z2.identity(J)).data.to_lists() == [[1, 0], [0, 3]]


def test_graded_associator_is_permutation():
    z2 = make_graded_vec(GroupTable.cyclic(2), atoms={"A": (1, 1)})
    m = coherence_iso(z2, CIRC, circ(circ(A, A), A), circ(A, circ(A, A))).data
    assert m.shape == (8, 8)
    assert all(len(m.column(j)) == 1 and list(m.column(j).values()) == [1] for j in range(8))
    assert sorted(next(iter(m.column(j))) for j in range(8)) == list(range(8))


# coherence

def test_coherence_basics():
    inst = make_braided_vec(atoms={"A": 2, "B": 3})
    assert coherence_iso(inst, CIRC, A, A) == inst.identity(A)
    assert coherence_iso(inst, CIRC, circ(I, A), A).data == Mat.identity(2)
    with pytest.raises(LeafMismatch):
        coherence_iso(inst, CIRC, circ(A, B), circ(B, A))
    with pytest.raises(LeafMismatch):
        coherence_iso(inst, CIRC, circ(J, A), A)


def _trees(leaves, op, rng, units):
    if len(leaves) == 1:
        x = leaves[0]
        while rng.random() < 0.3:
            x = circ(units, x) if op == CIRC and rng.random() < .5 else (circ(x, units) if op == CIRC
                                                                        else bullet(x, units))
        return x
    k = rng.randint(1, len(leaves) - 1)
    left, right = _trees(leaves[:k], op, rng, units), _trees(leaves[k:], op, rng, units)
    return circ(left, right) if op == CIRC else bullet(left, right)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6), st.sampled_from([CIRC, BULLET]))
def test_coherence_path_independent(n, seed, op):
    rng = random.Random(seed)
    inst = make_graded_vec(GroupTable.cyclic(2), atoms={"A": (1, 1), "B": (2, 1)})
    leaves = [rng.choice([A, B]) for _ in range(n)]
    unit = I if op == CIRC else J
    x, y, z = (_trees(leaves, op, rng, unit) for _ in range(3))
    xy, yz, xz = (coherence_iso(inst, op, s, t) for s, t in ((x, y), (y, z), (x, z)))
    assert compose(yz, xy) == xz
    assert compose(coherence_iso(inst, op, y, x), xy) == inst.identity(x)
    assert compose(coherence_iso(inst, op, x, y, comb="left"), inst.identity(x)) == xy


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([CIRC, BULLET]))
def test_tensor_functoriality(seed, op):
    rng = random.Random(seed)
    inst = make_graded_vec(GroupTable.cyclic(3), atoms={"A": (1, 0, 2), "B": (1, 1, 1)})
    f1, f2 = inst.random_morphism(A, B, rng), inst.random_morphism(B, A, rng)
    g1, g2 = inst.random_morphism(B, B, rng), inst.random_morphism(B, A, rng)
    lhs = tensor_mor(inst, op, compose(f2, f1), compose(g2, g1))
    rhs = compose(tensor_mor(inst, op, f2, g2), tensor_mor(inst, op, f1, g1))
    assert lhs == rhs


# the checker

def test_check_duoidal_acceptance_instances_fast():
    start = time.perf_counter()
    braided = make_braided_vec(atoms={"X1": 1, "X2": 2, "X3": 3})
    reports = [check_duoidal(braided)]
    for n in (2, 3):
        g = make_graded_vec(GroupTable.cyclic(n), atoms={"X": (1,) * n, "Y": tuple(range(n))})
        reports.append(check_duoidal(g))
    assert all(r.passed for r in reports)
    assert all(not r.failures for r in reports)
    assert time.perf_counter() - start < 10


def test_check_duoidal_over_prime_field():
    g = make_graded_vec(GroupTable.cyclic(2), PrimeField(3), atoms={"X": (2, 1)})
    assert check_duoidal(g).passed


def test_default_probes_cover_objects():
    inst = make_braided_vec(atoms={"A": 1, "B": 2})
    probes = default_probes(inst)
    assert all(len(p) == 6 for p in probes)
    for x in (I, J, A, B):
        assert (x,) * 6 in probes


class _Mutated(GradedVec):
    """ϖ keeps only the first convolution summand of every grade."""

    def varpi_data(self):
        m = super().varpi_data()
        seen, cols = set(), []
        for j in range(m.cols):
            (x, _), = m.column(j).items()
            cols.append({} if x in seen else {x: 1})
            seen.add(x)
        return Mat(m.rows, m.cols, cols, m.field)


class _Twisted(GradedVec):
    """ϖ scaled by 2 on the (g, e) summand only: a non-associative multiplication."""

    def varpi_data(self):
        m = super().varpi_data()
        src = self._index(self.prod_desc(CIRC, self.unit_desc(BULLET), self.unit_desc(BULLET)))
        layout = {}
        for j in range(m.cols):
            layout[j] = dict(m.column(j))
        g = 1
        # summands of grade g: the (e, g) one first, then (g, e)
        in_grade = [j for j, (x, _) in enumerate(src) if x == g]
        layout[in_grade[1]] = {g: 2}
        return Mat(m.rows, m.cols, [layout[j] for j in range(m.cols)], m.field)


def test_mutated_varpi_fails_with_witness():
    rep = check_duoidal(_Mutated(GroupTable.cyclic(2)))
    assert not rep.passed
    bad = rep.entry("J_monoid_right_unit")
    assert bad.status == "fail" and bad.witness is not None and bad.lhs != bad.rhs


def test_twisted_varpi_fails_associativity():
    rep = check_duoidal(_Twisted(GroupTable.cyclic(2)))
    e = rep.entry("J_monoid_assoc")
    assert e.status == "fail" and e.witness is not None and e.lhs != e.rhs


# transforms

@pytest.mark.parametrize("how", ["circ_op", "bullet_op", "star"])
def test_transform_preserves_verdict(how):
    g = make_graded_vec(GroupTable.cyclic(2), atoms={"X": (1, 1)})
    assert check_duoidal(transform(g, how)).passed
    assert not check_duoidal(transform(_Mutated(GroupTable.cyclic(2)), how)).passed


@pytest.mark.parametrize("how", ["circ_op", "bullet_op", "star"])
def test_transforms_are_involutions(how):
    g = make_graded_vec(GroupTable.cyclic(3), atoms={"X": (1, 2, 0)})
    x = Atom("X")
    tt = transform(transform(g, how), how)
    assert tt.varpi().data == g.varpi().data and tt.delta().data == g.delta().data
    assert tt.tau().data == g.tau().data
    assert tt.zeta(x, J, x, I).data == g.zeta(x, J, x, I).data


def test_star_swaps_units():
    z2 = make_graded_vec(GroupTable.cyclic(2))
    s = transform(z2, "star")
    assert realize(s, I).dim == 2 and realize(s, J).dim == 1
    b = make_braided_vec(atoms={"A": 2})
    sb = transform(b, "star")
    assert sb.zeta(A, A, A, A).data == b.zeta(A, A, A, A).data.T


def test_unsupported_transform():
    with pytest.raises(UnsupportedTransform):
        transform(make_braided_vec(), "twist")
