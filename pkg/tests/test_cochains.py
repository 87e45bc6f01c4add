from fractions import Fraction

import numpy as np
import pytest

from su21coh.cochains import (
    Cochain,
    TensorElement,
    act_tensor,
    act_tensor_seq,
    alpha_coeff,
    basis_wedges,
    beta_coeff,
    build_chi,
    build_psi,
    build_psi0,
    check_equivariance,
    chi3_element,
    cochain_to_dict,
    differential,
    gamma_coeff,
    hodge_type,
    is_equivariant,
    l_action_on_wedge,
    nullspace,
    psi_w13_element,
    random_equivariant_cochain,
    tensor_term,
    verify_closedness,
    verify_nonexactness,
    wedge_bidegree,
)
from su21coh.lie import LieGen
from su21coh.polynomials import Monomial, monomial_xy
from su21coh.report import all_passed
from su21coh.scalars import ComplexRadical, RadicalScalar
from su21coh.wigner import chi_index, psi_index

CR = ComplexRadical
RS = RadicalScalar
E, F = LieGen.U1_PLUS_IU2, LieGen.U1_MINUS_IU2


def test_act_tensor_diagonal_weight():
    k, l = 3, 1
    idx = chi_index(k, l)
    t = tensor_term(idx, monomial_xy(k, l))
    out = act_tensor(LieGen.U0, t)
    weight = idx.n.as_fraction() + Fraction(k, 2)
    assert out == t.scaled(CR.i_times(weight))
    assert act_tensor(LieGen.U0, TensorElement()).is_zero()


def test_compact_pair_fixtures():
    # the equivariance-forced identities for the chi seed, all k
    for k in range(0, 6):
        chi3 = chi3_element(k)
        chi4 = build_chi(k).value((4,))
        assert act_tensor(F, chi3).is_zero()
        assert act_tensor_seq((E, E), chi3).is_zero()
        assert act_tensor_seq((F, E), chi3) == chi3.scaled(-1)
        assert act_tensor(F, chi4) == chi3.scaled(CR.i_times(-1))


def test_lowering_raising_identity_not_minus_i():
    # regression pin: FE on the seed is -1 times the seed, not -i times it;
    # -i appears only after absorbing the i from the partner's definition
    chi3 = chi3_element(2)
    assert act_tensor_seq((F, E), chi3) != chi3.scaled(CR.i_times(-1))


def test_gamma_coefficients():
    for k in (1, 3, 7):
        assert gamma_coeff(k, 0) == RS.one()
        assert gamma_coeff(k, 1) == RS.sqrt(k + 1) * Fraction(k, k + 1)
        assert gamma_coeff(k, k) == RS.sqrt(Fraction(1, k + 1))
        for l in range(k):
            recur = gamma_coeff(k, l) * Fraction(k - l, 1) * (RS.sqrt(l + 1) * RS.sqrt(k - l + 1)).inverse()
            assert gamma_coeff(k, l + 1) == recur


def test_beta_coefficients():
    assert [beta_coeff(2, l) for l in range(3)] == [RS.one(), RS.sqrt(2), RS.one()]


def test_alpha_is_gamma_times_sqrt():
    for k in (0, 2, 5):
        for l in range(k + 1):
            assert alpha_coeff(k, l) == gamma_coeff(k, l) * RS.sqrt(l + 1)


def test_differential_on_chi():
    for k in (0, 1, 4):
        chi = build_chi(k)
        d = differential(chi)
        assert d.value((1, 2)).is_zero()
        inv_sqrt = CR(RS.sqrt(Fraction(1, k + 2)))
        assert d.value((1, 3)) == psi_w13_element(k).scaled(inv_sqrt)
    # k = 0 special value: d(chi)(X1^X3) = 1/sqrt(2) * W0 (x) 1
    d0 = differential(build_chi(0))
    expected = tensor_term(psi_index(0, 0), Monomial(0, 0, 0), CR(RS.sqrt(Fraction(1, 2))))
    assert d0.value((1, 3)) == expected


def test_differential_of_zero():
    z = Cochain(2, 1, {})
    assert differential(z).is_zero()


def test_equivariance_of_named_cochains():
    for k in (0, 1, 3):
        for coch in (build_chi(k), build_psi(k), build_psi0(k)):
            results = check_equivariance(coch)
            assert all_passed(results)
            assert len(results) == 4 * len(basis_wedges(coch.degree))


def test_truncated_cochain_fails_equivariance():
    # keeping only the leading term of psi(X1^X3) breaks equivariance
    k = 1
    truncated = Cochain(k, 2, {(1, 3): tensor_term(psi_index(k, 0), monomial_xy(k, 0))})
    assert not is_equivariant(truncated)


def test_determinacy_from_w13():
    # the three remaining mixed-wedge values are forced by equivariance
    for k in (0, 2):
        psi = build_psi(k)
        w13 = psi.value((1, 3))
        derived_23 = act_tensor(F, w13).scaled(CR.i_times(-1))
        derived_14 = act_tensor(E, w13).scaled(CR.i())
        derived_24 = w13 + act_tensor(E, derived_23).scaled(CR.i())
        assert derived_23 == psi.value((2, 3))
        assert derived_14 == psi.value((1, 4))
        assert derived_24 == psi.value((2, 4))
        assert derived_24 == -w13


def test_hodge_types():
    k = 2
    psi, psi0 = build_psi(k), build_psi0(k)
    assert hodge_type(psi) == (1, 1)
    assert hodge_type(psi0) == (0, 2)
    assert hodge_type(psi + psi0) == "mixed"
    assert hodge_type(Cochain(k, 2, {})) is None
    assert wedge_bidegree((1, 2)) == (2, 0)
    with pytest.raises(ValueError):
        hodge_type(build_chi(k))


def test_bigrading_preserved_by_compact_action():
    from su21coh.lie import L_GENS

    for u in L_GENS:
        for w in basis_wedges(2):
            for w2 in l_action_on_wedge(u, w):
                assert wedge_bidegree(w2) == wedge_bidegree(w)


def test_closedness_suite():
    for k in (0, 1, 5):
        assert all_passed(verify_closedness(k))


def test_mutation_breaks_splitting():
    res = verify_closedness(0, mutate_alpha0=True)
    failed = [r.name for r in res if not r.passed]
    assert any("d(chi)" in name for name in failed)


def test_nonexactness_k0_details():
    res = verify_nonexactness(0)
    assert all_passed(res)
    # candidate set at k=0 is the two-element chi family
    found = {chi_index(0, 0), chi_index(0, 1)}
    assert found == {chi_index(0, l) for l in range(2)}


def test_nonexactness_range():
    for k in range(0, 6):
        assert all_passed(verify_nonexactness(k))


def test_sanity_inversion_for_exact_target():
    # the same obstruction machinery applied to d(chi) finds no contradiction:
    # chi itself solves dX = d(chi), and its X1^X3 value is the nonzero vector
    # produced in step (c)
    k = 2
    d = differential(build_chi(k))
    x1_image = act_tensor(LieGen.X1, chi3_element(k))
    assert d.value((1, 3)) == x1_image
    assert not x1_image.is_zero()


def test_nullspace_small():
    one = CR.of(1)
    two = CR.of(2)
    rows = [[one, two, CR()], [CR(), CR(), one]]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    vec = basis[0]
    assert vec[0] + two * vec[1] == CR() and vec[2] == CR()


def test_dd_zero_on_random_equivariant():
    rng = np.random.default_rng(12)
    for k in (0, 2, 4):
        for _ in range(8):
            psi = random_equivariant_cochain(k, rng)
            assert is_equivariant(psi)
            d = differential(psi)
            assert is_equivariant(d)  # d preserves equivariance
            assert differential(d).is_zero()


def test_cochain_algebra_guards():
    with pytest.raises(ValueError):
        Cochain(0, 5, {})
    with pytest.raises(ValueError):
        Cochain(0, 1, {(1, 2): TensorElement()})
    a = build_psi(0)
    b = build_psi0(0)
    assert (a + b).value((3, 4)) == b.value((3, 4))
    assert (a - a).is_zero()


def test_export_schema():
    for k in (0, 1):
        psi_dict = cochain_to_dict(build_psi(k))
        assert psi_dict["hodge_type"] == [1, 1]
        assert len(psi_dict["entries"]) == 4
        psi0_dict = cochain_to_dict(build_psi0(k))
        assert psi0_dict["hodge_type"] == [0, 2]
        assert len(psi0_dict["entries"]) == 1
        chi_dict = cochain_to_dict(build_chi(k))
        assert chi_dict["hodge_type"] is None
        assert chi_dict["degree"] == 1
        # terms are sorted by (j2, m1_2, monomial)
        for entry in psi_dict["entries"]:
            keys = [
                (t["index"]["j2"], t["index"]["m1_2"], tuple(t["monomial"]))
                for t in entry["terms"]
            ]
            assert keys == sorted(keys)
