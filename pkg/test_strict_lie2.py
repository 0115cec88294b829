"""
严格 Lie 2-代数：公理、同态、半直积与严格表示
"""

import numpy as np
import pytest

from lie2_core import AxiomError, ShapeError, arrays_equal, as_rational_array, identity, zeros
from strict_lie2 import (
    AXIOMS, LieAlgebra, StrictLie2Algebra, adjoint_rep, check_homomorphism, check_strict_axioms,
    coadjoint_rep, dual_rep, first_failed_axiom, homomorphism_report, identity_lie2, lie_algebra_rep_check,
    rep_check, semidirect, tensor_rep,
)

# [e2, e1] = e2
AFFINE = [[[0, 0], [0, -1]], [[0, 1], [0, 0]]]


def test_lie_algebra_check():
    g = LieAlgebra(AFFINE)
    report = g.check()
    assert report.passed
    assert set(report.results) == {'antisymmetry', 'jacobi'}
    assert not g.is_abelian()


def test_lie_algebra_rejects_bad_shape():
    with pytest.raises(ShapeError):
        LieAlgebra(zeros(2, 2, 3))


def test_lie_algebra_antisymmetry_failure():
    bad = zeros(2, 2, 2)
    bad[0, 1, 0] = 1
    report = LieAlgebra(bad).check()
    assert report.failed() == ['antisymmetry']
    assert report['antisymmetry'].witness == ("e1", "e2")


def test_all_axioms_pass_on_n3_plane(n3_plane):
    """N3 平面上的 Lie 2-代数（d 可逆）"""
    report = check_strict_axioms(n3_plane)
    assert report.passed
    assert set(report.results) == set(AXIOMS)
    assert first_failed_axiom(n3_plane) is None


def test_identity_lie2_is_strict():
    L = identity_lie2(LieAlgebra(AFFINE))
    assert check_strict_axioms(L).passed
    assert L.space.labels_m1 == ("e1'", "e2'")


def test_d_equivariance_failure():
    """abelian g₀ 但 [x,h] 非零且 d 不等变"""
    L = StrictLie2Algebra.from_arrays([[1], [0]], zeros(2, 2, 2), [[[1]], [[0]]])
    report = check_strict_axioms(L, full=True)
    assert 'd_equivariance' in report.failed()
    assert report['d_equivariance'].witness == ("x1", "h1")
    assert first_failed_axiom(L) == 'd_equivariance'


def test_peiffer_failure():
    # g₀ = ⟨x⟩, g₋₁ = ⟨h1, h2⟩，d(h1) = x, d(h2) = 0，[x, h2] = h1
    b01 = zeros(1, 2, 2)
    b01[0, 1, 0] = 1
    L = StrictLie2Algebra.from_arrays([[1, 0]], zeros(1, 1, 1), b01)
    report = check_strict_axioms(L)
    assert 'peiffer' in report.failed()


def test_semidirect_is_lie(n3_plane):
    g = semidirect(n3_plane)
    assert g.dim == 4
    assert g.check().passed
    assert g.labels == ("e1", "e2", "e1*", "e2*")


def test_semidirect_rejects_invalid():
    L = StrictLie2Algebra.from_arrays([[1], [0]], zeros(2, 2, 2), [[[1]], [[0]]])
    with pytest.raises(AxiomError):
        semidirect(L)


def test_replace_and_shape_errors(abelian_lie2):
    with pytest.raises(ShapeError):
        StrictLie2Algebra.from_arrays([[1], [0]], zeros(2, 2, 2), zeros(1, 1, 1))
    L = abelian_lie2.replace(D=[[0], [1]])
    assert L.D[1, 0] == 1
    assert abelian_lie2.D[1, 0] == 0


def test_identity_homomorphism(n3_plane):
    assert check_homomorphism(identity(2), identity(2), n3_plane, n3_plane)


def test_zero_map_is_homomorphism(n3_plane, abelian_lie2):
    assert check_homomorphism(zeros(2, 2), zeros(1, 2), n3_plane, abelian_lie2)


def test_scaling_breaks_bracket(n3_plane):
    """2·id 不保持非零括号"""
    report = homomorphism_report(2 * identity(2), 2 * identity(2), n3_plane, n3_plane)
    assert report['chain_map'].passed
    assert not report['bracket00'].passed


def test_mismatched_scaling_breaks_chain_map(n3_plane):
    """g₀ 上 2·id、g₋₁ 上 id：f₀∘d = 2d ≠ d∘f₁"""
    report = homomorphism_report(2 * identity(2), identity(2), n3_plane, n3_plane)
    assert 'chain_map' in report.failed()
    assert not check_homomorphism(2 * identity(2), identity(2), n3_plane, n3_plane)


def test_homomorphism_shape_error(n3_plane):
    with pytest.raises(ShapeError):
        homomorphism_report(identity(3), identity(2), n3_plane, n3_plane)


def test_adjoint_and_coadjoint_reps(n3_plane, abelian_lie2):
    for L in (n3_plane, abelian_lie2):
        assert rep_check(adjoint_rep(L)).passed
        assert rep_check(coadjoint_rep(L)).passed


def test_dual_rep_is_involutive(n3_plane):
    rho = adjoint_rep(n3_plane)
    assert dual_rep(dual_rep(rho)) == rho


def test_tensor_rep_of_adjoint(n3_plane):
    """伴随表示的张量平方仍是严格表示（含 end_square）"""
    rho = tensor_rep(adjoint_rep(n3_plane), adjoint_rep(n3_plane))
    assert rho.dims == (4, 8, 4)
    report = rep_check(rho)
    assert report.passed
    assert 'end_square' in report


def test_tensor_rep_requires_same_algebra(n3_plane, abelian_lie2):
    with pytest.raises(ShapeError):
        tensor_rep(adjoint_rep(n3_plane), adjoint_rep(abelian_lie2))


def test_lie_algebra_rep_check():
    g = LieAlgebra(AFFINE)
    ad = np.stack([g.ad(i) for i in range(2)])
    assert lie_algebra_rep_check(g, ad).passed
    wrong = np.stack([identity(2), as_rational_array([[0, 1], [0, 0]])])
    assert not lie_algebra_rep_check(g, wrong).passed
    assert arrays_equal(g.ad(0), as_rational_array([[0, 0], [0, -1]]))
