"""
左对称代数、可容许的 d、分类表、辛 Lie 代数与 Â 上的二重构造
"""

import random

import numpy as np
import pytest

from lie2_core import AxiomError, ShapeError, SingularError, arrays_equal, as_rational_array, zeros
from prelie_algebra import (
    CATALOG, CatalogSearch, DMap, LeftSymmetricAlgebra, admissible_d_check, admissible_d_family,
    bilinear_from_d, build_bialgebra_from_prelie, canonical_r_cybe, catalog_entry, catalog_fidelity,
    change_basis, check_left_symmetric, compatible_product, direct_sum_prelie, dual_left_mult_rep, hat_algebra,
    invariance_check, invertible_d_verdicts, left_mult_rep, prelie_lie2, prelie_to_symplectic,
    random_left_symmetric, same_span, semidirect_prelie, sub_adjacent, symplectic_check, symplectic_double,
    symplectic_form_p, symplectic_to_prelie,
)
from strict_lie2 import LieAlgebra, check_strict_axioms, lie_algebra_rep_check

# [e2, e1] = e2
AFFINE = LieAlgebra([[[0, 0], [0, -1]], [[0, 1], [0, 0]]])
OMEGA = [[0, 1], [-1, 0]]


def test_n3_structure(n3_algebra, n3_plane):
    """e1∘e1 = e1, e2∘e1 = e2：[e1,e2] = -e2，[e1,e1*] = -e1*"""
    assert check_left_symmetric(n3_algebra).passed
    assert not n3_algebra.is_commutative()
    g = sub_adjacent(n3_algebra)
    assert arrays_equal(g.structure[0, 1], as_rational_array([0, -1]))
    assert arrays_equal(n3_plane.D, as_rational_array([[0, 1], [-1, 0]]))
    assert n3_plane.bracket01[0, 0, 0] == -1
    assert n3_plane.bracket01[1, 1, 0] == -1
    assert n3_plane.bracket01[1, 0, 1] == 0
    assert n3_plane.space.labels_m1 == ("e1*", "e2*")


def test_left_symmetry_failure():
    """e1∘e2 = e1 单独出现时 (e1,e2,e2) ≠ (e2,e1,e2)"""
    p = zeros(2, 2, 2)
    p[0, 1, 0] = 1
    report = check_left_symmetric(LeftSymmetricAlgebra(p))
    assert not report.passed
    assert report['left_symmetry'].witness == ("e1", "e2", "e2")
    with pytest.raises(AxiomError):
        LeftSymmetricAlgebra.create(p)
    with pytest.raises(AxiomError):
        build_bialgebra_from_prelie(LeftSymmetricAlgebra(p))


def test_algebra_shape_errors():
    with pytest.raises(ShapeError):
        LeftSymmetricAlgebra(zeros(2, 2, 3))
    with pytest.raises(ShapeError):
        DMap(zeros(2, 3))
    with pytest.raises(ShapeError):
        prelie_lie2(CATALOG['N3'].algebra(), zeros(3, 3))


def test_left_multiplication_representations(n3_algebra):
    g = sub_adjacent(n3_algebra)
    assert lie_algebra_rep_check(g, left_mult_rep(n3_algebra)).passed
    assert lie_algebra_rep_check(g, dual_left_mult_rep(n3_algebra)).passed
    assert semidirect_prelie(n3_algebra).check().passed


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_fidelity(name):
    """存储的 d 族等于 cond_i 的解空间"""
    entry = catalog_entry(name)
    report = catalog_fidelity(entry)
    assert report.passed, report.failed()
    for params in entry.parameter_grid():
        assert check_left_symmetric(entry.algebra(**params)).passed


def test_catalog_listed_families_differ_where_noted():
    for name in ('A2', 'A4'):
        entry = CATALOG[name]
        assert set(entry.listed) - set(entry.family) == {'a'}
        extra = entry.listed['a']
        assert not admissible_d_check(entry.algebra(), extra)['cond_i'].passed


def test_catalog_entry_unknown():
    with pytest.raises(KeyError):
        catalog_entry('N9')


def test_n3_family_is_admissible(n3_algebra):
    M = CATALOG['N3'].d_matrix(a=1)
    assert arrays_equal(M, as_rational_array([[0, -1], [1, 0]]))
    report = admissible_d_check(n3_algebra, M)
    assert report.passed
    assert same_span(admissible_d_family(n3_algebra, skew_only=True), [M])


def test_nonzero_d_on_a3_fails_cond_i():
    A = CATALOG['A3'].algebra()
    report = admissible_d_check(A, [[0, 1], [-1, 0]])
    assert not report['cond_i'].passed
    assert report['cond_ii'].passed
    assert admissible_d_family(A) == []


def test_n5_non_skew_d_is_rejected():
    """N5 的可容许 d 不反对称：cond_ii 不成立"""
    entry = CATALOG['N5']
    A, M = entry.algebra(), entry.d_matrix(a=1)
    report = admissible_d_check(A, M)
    assert report['cond_i'].passed
    assert not report['cond_ii'].passed
    with pytest.raises(AxiomError):
        build_bialgebra_from_prelie(A, M)
    with pytest.raises(AxiomError):
        invertible_d_verdicts(A, M)


def test_catalog_canonical_r_solves_cybe():
    for entry in CATALOG.values():
        for params in entry.parameter_grid():
            report = canonical_r_cybe(entry.algebra(**params))
            assert report.passed, (entry.name, params, report.failed())


def test_random_algebras_canonical_r_solves_cybe():
    """50 个随机左对称代数（1 到 3 维）上典范 r 都满足 CYBE"""
    corpus = CatalogSearch(seed=17).corpus(50)
    assert len(corpus) == 50
    for A in corpus:
        assert check_left_symmetric(A).passed
        assert canonical_r_cybe(A).passed


def test_random_left_symmetric_helper():
    A = random_left_symmetric(random.Random(4), 2)
    assert A.dim == 2
    assert check_left_symmetric(A).passed


def test_bialgebra_from_catalog_with_n3_d(n3_bialgebra):
    report = n3_bialgebra.invariants()
    assert report.passed, report.failed()


def test_invertible_d_verdicts_agree_on_n3(n3_algebra, n3_d):
    verdicts = invertible_d_verdicts(n3_algebra, n3_d)
    assert verdicts.agree()
    assert verdicts.strict and verdicts.invariant and verdicts.symplectic
    assert arrays_equal(bilinear_from_d(n3_algebra, n3_d), as_rational_array(OMEGA))


def test_invertible_d_verdicts_agree_when_strictness_fails():
    """A1 上可逆的反对称 d 不可容许，三个判定同时为假"""
    verdicts = invertible_d_verdicts(CATALOG['A1'].algebra(), [[0, 1], [-1, 0]])
    assert verdicts.agree()
    assert not verdicts.strict
    assert verdicts.cocycle_only


def test_invertible_d_verdicts_errors(n3_algebra):
    with pytest.raises(SingularError):
        invertible_d_verdicts(n3_algebra, zeros(2, 2))
    with pytest.raises(AxiomError):
        invertible_d_verdicts(n3_algebra, [[1, 0], [0, 1]])


def test_symplectic_to_prelie_round_trip():
    """辛 Lie 代数的相容积是左对称的，且次伴随括号回到原 Lie 括号"""
    A = symplectic_to_prelie(AFFINE, OMEGA)
    assert check_left_symmetric(A).passed
    assert arrays_equal(sub_adjacent(A).structure, AFFINE.structure)
    assert invariance_check(A, OMEGA).passed
    back = prelie_to_symplectic(A, OMEGA)
    assert arrays_equal(back.lie.structure, AFFINE.structure)


def test_symplectic_errors(n3_algebra):
    with pytest.raises(SingularError):
        symplectic_to_prelie(AFFINE, zeros(2, 2))
    with pytest.raises(SingularError):
        prelie_to_symplectic(n3_algebra, zeros(2, 2))
    report = symplectic_check(AFFINE, [[1, 1], [-1, 0]])
    assert report.failed() == ['skew']
    with pytest.raises(SingularError):
        compatible_product(AFFINE, [[0, 0], [0, 0]])


def test_hat_algebra(n3_algebra):
    hat = hat_algebra(n3_algebra)
    assert hat.dim == 4
    assert hat.labels == ("e1", "e2", "e1*", "e2*")
    assert check_left_symmetric(hat).passed
    oracle = compatible_product(semidirect_prelie(n3_algebra), symplectic_form_p(2))
    assert arrays_equal(oracle, hat.product)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_symplectic_double(name):
    """Â 上的严格 Lie 2-双代数，d 由 ω_p 给出"""
    B = symplectic_double(CATALOG[name].algebra())
    n = CATALOG[name].dim
    assert (B.base.n0, B.base.n1) == (2 * n, 2 * n)
    assert B.base.space.labels_m1[0] == "f1"
    report = B.invariants()
    assert report.passed, report.failed()


def test_change_basis_swaps_n3(n3_algebra):
    P = [[0, 1], [1, 0]]
    A = change_basis(n3_algebra, P)
    expected = zeros(2, 2, 2)
    expected[1, 1, 1] = 1
    expected[0, 1, 0] = 1
    assert arrays_equal(A.product, expected)
    assert check_left_symmetric(A).passed
    with pytest.raises(SingularError):
        change_basis(n3_algebra, [[1, 1], [1, 1]])


def test_direct_sum():
    one = CATALOG['1d'].algebra()
    A = direct_sum_prelie(one, one)
    assert A.dim == 2
    assert check_left_symmetric(A).passed
    assert arrays_equal(A.product, CATALOG['A1'].algebra().product)
    assert np.count_nonzero(A.product != 0) == 2


def test_strictness_matches_cond_i(n3_algebra):
    L = prelie_lie2(n3_algebra, [[0, 2], [-2, 0]])
    assert check_strict_axioms(L).passed
    assert admissible_d_check(n3_algebra, [[0, 2], [-2, 0]]).passed


def test_invertible_d_verdicts_agree_on_random_algebras():
    """随机 2 维左对称代数上，可逆反对称 d 的三个判定一致"""
    corpus = [A for A in CatalogSearch(seed=23).corpus(30, max_dim=2) if A.dim == 2]
    assert len(corpus) == 15
    for A in corpus:
        for a in (1, -2):
            assert invertible_d_verdicts(A, [[0, a], [-a, 0]]).agree()
