import pytest

from duocat.bases import base_object, frobenius_structure, regular_module
from duocat.hopf import (HopfModule, IComodule, LModule, beta, beta0, check_hopf_module,
                         check_icomodule, check_lambda0, check_lmodule, check_weak_mdl,
                         default_module_probes, free_hopf_module, fundamental_check,
                         induced_lmodule, lambda0, lambda_, lifted_coaction_idempotent,
                         module_tensor_L, omega_and_action, psi, regular_hopf_module,
                         theta_L, trivial_icomodule)
from duocat.linalg import Mat, try_invert
from duocat.objects import I, J, Atom, bullet
from duocat.reports import PrerequisiteFailed
from conftest import fresh
from oracles import group_algebra_z2, idempotent_monoid_algebra, matrix_units, rank

VALID = ["B1", "B2", "G1", "B3"]


def probes(defn):
    return [I, J, defn.carrier]


# ψ

def test_psi_shapes(fixture):
    b1, b2 = fixture("B1"), fixture("B2")
    p = psi(b1.inst, b1.data, I).data
    assert p.shape == (4, 4)
    assert try_invert(p) @ p == Mat.identity(4)
    p2 = psi(b2.inst, b2.data, I).data
    assert p2.shape == (16, 16)
    assert {x for row in p2.to_lists() for x in row} <= {0, 1}


def test_psi_matches_sweedler(fixture):
    """On I: h⊗k ↦ k₍₁₎ ⊗ h k₍₂₎ in the Kronecker basis."""
    b2 = fixture("B2")
    alg = matrix_units()
    n = alg.n
    expect = [[0] * (n * n) for _ in range(n * n)]
    for h in range(n):
        for k in range(n):
            for (k1, k2), c in alg.comult[k].items():
                for x, v in alg.mul({h: 1}, {k2: 1}).items():
                    expect[k1 * n + x][h * n + k] += c * v
    assert psi(b2.inst, b2.data, I).data.to_lists() == expect


def test_psi_on_zero_object():
    defn = fresh("B2")
    defn.inst.declare_atom("Z", 0)
    assert psi(defn.inst, defn.data, Atom("Z")).data.shape == (0, 0)


@pytest.mark.parametrize("name", VALID)
def test_weak_mixed_distributive_law(fixture, name):
    defn = fixture(name)
    rep = check_weak_mdl(defn.inst, defn.data, probes(defn))
    assert rep.passed, [e.name for e in rep.failures]
    assert {e.name for e in rep.entries} == {"psi_mult", "psi_unit", "psi_comult", "psi_counit"}


def test_n2_distributive_law_failures(fixture):
    n2 = fixture("N2")
    rep = check_weak_mdl(n2.inst, n2.data, probes(n2))
    failing = {e.name: e for e in rep.failures}
    # Δ(1) = 1⊗1 on N2, so the unit pentagon itself holds; its ∗-dual does not
    assert rep.entry("psi_unit").status == "pass"
    assert failing["psi_counit"].witness is not None
    assert failing["psi_mult"].witness == 3


# Hopf modules

@pytest.mark.parametrize("name", ["B1", "B2", "G1", "B3"])
def test_regular_hopf_module(fixture, name):
    defn = fixture(name)
    rep = check_hopf_module(defn.inst, defn.data, regular_hopf_module(defn.inst, defn.data))
    assert rep.passed
    assert "hopf_compatibility" in rep


def test_flipped_coaction_on_matrix_units_is_unchanged(fixture):
    """Δ(e_ij) = e_ij⊗e_ij is flip-invariant, so flip·Δ is again the regular Hopf module."""
    b2 = fixture("B2")
    inst, d = b2.inst, b2.data
    flip = Mat.permutation([4 * (j % 4) + j // 4 for j in range(16)])
    flipped = flip @ d.delta_A.data
    assert flipped == d.delta_A.data
    hm = HopfModule(d.carrier, d.mu, inst.morph(d.carrier, bullet(d.carrier, d.carrier), flipped))
    assert check_hopf_module(inst, d, hm).passed


def test_trivial_coaction_breaks_compatibility(fixture):
    """On the ℤ₂ group algebra, x ↦ x⊗1 is a comodule but not a Hopf module with μ."""
    b1 = fixture("B1")
    inst, d = b1.inst, b1.data
    rho = inst.morph(d.carrier, bullet(d.carrier, d.carrier), Mat.from_rows([[1, 0], [0, 0], [0, 1], [0, 0]]))
    rep = check_hopf_module(inst, d, HopfModule(d.carrier, d.mu, rho))
    assert rep.entry("coaction_coassoc").status == "pass"
    assert rep.entry("coaction_counit").status == "pass"
    e = rep.entry("hopf_compatibility")
    # basis 1⊗1, 1⊗g, g⊗1, g⊗g of A∘A; g·g = 1 with coaction 1⊗1 versus Δ-twisted 1⊗g
    assert e.status == "fail" and e.witness == 1


@pytest.mark.parametrize("name", VALID)
def test_free_hopf_module_on_trivial_comodule(fixture, name):
    defn = fixture(name)
    z = trivial_icomodule(defn.inst)
    assert check_icomodule(defn.inst, z).passed
    hm = free_hopf_module(defn.inst, defn.data, z)
    assert check_hopf_module(defn.inst, defn.data, hm).passed
    if defn.inst.kind == "braided_vec":
        # I∘A is A under the strict unitor
        assert hm.rho.data == defn.data.delta_A.data
        assert hm.gamma.data == defn.data.mu.data


def test_free_hopf_module_dim_zero():
    defn = fresh("B2")
    inst = defn.inst
    inst.declare_atom("Z", 0)
    z = Atom("Z")
    hm = free_hopf_module(inst, defn.data, IComodule(z, inst.morph(z, bullet(z, I), Mat.zero(0, 0))))
    assert check_hopf_module(inst, defn.data, hm).passed


def test_free_hopf_module_rejects_bad_comodule(fixture):
    b1 = fixture("B1")
    bad = IComodule(I, b1.inst.morph(I, bullet(I, I), Mat.zero(1, 1)))
    with pytest.raises(PrerequisiteFailed):
        free_hopf_module(b1.inst, b1.data, bad)


# the lifted comonad and λ⁰

@pytest.mark.parametrize("name, dim", [("B1", 4), ("B2", 8)])
def test_lifted_idempotent_is_chi(fixture, name, dim):
    defn = fixture(name)
    r, rep = lifted_coaction_idempotent(defn.inst, defn.data, regular_module(defn.inst, defn.data))
    assert rep.passed and r.dim == dim


@pytest.mark.parametrize("name", VALID)
def test_lifted_idempotent_all_probes(fixture, name):
    defn = fixture(name)
    for q in default_module_probes(defn.inst, defn.data).values():
        assert lifted_coaction_idempotent(defn.inst, defn.data, q)[1].passed


@pytest.mark.parametrize("name, shape", [("B1", (4, 2)), ("B2", (8, 4))])
def test_lambda0_shapes(fixture, name, shape):
    defn = fixture(name)
    l0, rep = lambda0(defn.inst, defn.data, I)
    assert rep.passed and l0.data.shape == shape
    assert l0.data.rank() == shape[1]


@pytest.mark.parametrize("name", VALID)
def test_lambda0_suite(fixture, name):
    defn = fixture(name)
    rep = check_lambda0(defn.inst, defn.data, probes(defn))
    assert rep.passed, [e.name for e in rep.failures]


# the L• side

@pytest.mark.parametrize("name", VALID)
def test_theta_l_equalizer(fixture, name):
    defn = fixture(name)
    _, rep = theta_L(defn.inst, defn.data)
    assert rep.passed
    lb = base_object(defn.inst, defn.data, "L•")
    assert rep.entry("theta_L_equalizer_dim").detail == f"equalizer {lb.dim}, L• {lb.dim}"


@pytest.mark.parametrize("name", VALID)
def test_omega(fixture, name):
    defn = fixture(name)
    omega, alpha, rep = omega_and_action(defn.inst, defn.data)
    assert rep.passed


def test_omega_values(fixture):
    b1 = fixture("B1")
    omega, _, _ = omega_and_action(b1.inst, b1.data)
    assert omega.data == b1.data.eta.data
    b2 = fixture("B2")
    omega, alpha, _ = omega_and_action(b2.inst, b2.data)
    # ω embeds the diagonal e11, e22
    assert omega.data.to_lists() == [[1, 0], [0, 0], [0, 0], [0, 1]]
    # α(e_ii ⊗ e_jk) = δ_ij e_jk, basis of L•∘A is (e11, e22) × (e11, e12, e21, e22)
    alg = matrix_units()
    diag = [0, 3]
    expect = [[0] * 8 for _ in range(4)]
    for i, di in enumerate(diag):
        for h in range(4):
            for x, v in alg.mul({di: 1}, {h: 1}).items():
                expect[x][i * 4 + h] += v
    assert alpha.data.to_lists() == expect


def regular_lmodule(defn):
    bo = base_object(defn.inst, defn.data, "L•")
    return LModule(bo.obj, frobenius_structure(defn.inst, defn.data, "L•").mu)


@pytest.mark.parametrize("name, dim", [("B1", 2), ("B2", 4)])
def test_module_tensor_l_trivial(fixture, name, dim):
    defn = fixture(name)
    p = regular_lmodule(defn)
    assert check_lmodule(defn.inst, defn.data, p).passed
    r, rep = module_tensor_L(defn.inst, defn.data, p)
    assert rep.passed and r.dim == dim


def test_module_tensor_l_on_matrix_units(fixture):
    b2 = fixture("B2")
    p = induced_lmodule(b2.inst, b2.data, regular_module(b2.inst, b2.data))
    r, rep = module_tensor_L(b2.inst, b2.data, p)
    assert rep.passed and r.dim == 8


def test_lambda_trivial_module_is_injective(fixture):
    b1 = fixture("B1")
    lam, rep = lambda_(b1.inst, b1.data, regular_lmodule(b1))
    assert rep.passed
    assert lam.data.shape == (4, 2) and lam.data.rank() == 2


def test_lambda_on_matrix_units(fixture):
    b2 = fixture("B2")
    p = induced_lmodule(b2.inst, b2.data, regular_module(b2.inst, b2.data))
    lam, rep = lambda_(b2.inst, b2.data, p)
    assert rep.entry("lambda_fork").status == "pass"
    assert rep.entry("lambda_factorization").status == "pass"
    assert rep.entry("lambda_module_map").status == "pass"
    assert lam.data.shape == (16, 8)


# β and the fundamental theorem

def galois_oracle(alg):
    return alg.galois_map()


def test_beta_group_algebra_is_galois_permutation(fixture):
    b1 = fixture("B1")
    b, rep = beta(b1.inst, b1.data, regular_module(b1.inst, b1.data))
    assert rep.passed
    # 1⊗1↦1⊗1, 1⊗g↦g⊗g, g⊗1↦g⊗1, g⊗g↦1⊗g
    assert b.data.to_lists() == [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]
    assert b.data.to_lists() == galois_oracle(group_algebra_z2())
    assert try_invert(b.data) @ b.data == Mat.identity(4)


def test_beta_idempotent_monoid_not_injective(fixture):
    b3 = fixture("B3")
    b, _ = beta(b3.inst, b3.data, regular_module(b3.inst, b3.data))
    oracle = galois_oracle(idempotent_monoid_algebra())
    assert b.data.to_lists() == oracle
    # 1⊗e and e⊗e both map to e⊗e
    assert b.data.column_list(1) == b.data.column_list(3) == [0, 0, 0, 1]
    assert rank(oracle) == 3


def test_beta_matrix_units_invertible(fixture):
    b2 = fixture("B2")
    b, rep = beta(b2.inst, b2.data, regular_module(b2.inst, b2.data))
    assert rep.passed and b.data.shape == (8, 8)
    inv = try_invert(b.data)
    assert inv @ b.data == Mat.identity(8) == b.data @ inv
    # the Sweedler Galois map on A⊗A has the same rank as the retract
    assert rank(galois_oracle(matrix_units())) == 8


@pytest.mark.parametrize("name", VALID)
def test_beta0_characterization(fixture, name):
    defn = fixture(name)
    _, rep = beta0(defn.inst, defn.data, regular_module(defn.inst, defn.data))
    assert rep.passed


@pytest.mark.parametrize("name", ["B1", "B2", "G1"])
def test_fundamental_galois(fixture, name):
    defn = fixture(name)
    res = fundamental_check(defn.inst, defn.data)
    assert res.summary == "galois-on-probes"
    assert set(res.verdicts) == {"regular", "I∘A", "J∘A"}
    assert all(str(v) == "iso" for v in res.verdicts.values())
    assert "probe" in res.note


def test_fundamental_not_galois(fixture):
    b3 = fixture("B3")
    res = fundamental_check(b3.inst, b3.data)
    assert res.summary == "not-galois"
    v = res.verdicts["regular"]
    assert (v.kernel_dim, v.cokernel_dim) == (1, 1)
    assert str(v) == "not_iso(kernel_dim=1, cokernel_dim=1)"
    e = res.report.entry("regular:beta_invertible")
    # a null vector: 1⊗e − e⊗e
    assert e.status == "fail" and e.witness == 1 and sorted(e.lhs) == [-1, 0, 0, 1]
