"""
大括号：Koszul 符号、分次 Jacobi、编码/解码与 ⟨t,t⟩ = 0
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from big_bracket import (
    COCYCLE_BIDEGREES, MASTER_BIDEGREES, STRICT_BIDEGREES, BBElement, BBGenerator, MasterElement, bb_bracket,
    bb_bracket_oracle, bidegree_name, decode, decode_algebra, dump, encode, master_check, normalize,
    random_monomial, random_word, strict_corpus, word_degree,
)
from lie2_bialgebra import triangle_corpus
from lie2_cohomology import is_2cocycle
from lie2_core import AxiomError, DegreeError, ShapeError, arrays_equal, zeros
from strict_lie2 import StrictLie2Algebra, check_strict_axioms

XI = BBGenerator.of('dual0', 0)
ETA = BBGenerator.of('dual1', 0)
E = BBGenerator.of('prim0', 0)
H = BBGenerator.of('prim1', 0)


def test_generator_degrees_and_labels():
    assert [g.degree for g in (XI, ETA, E, H)] == [1, 2, 2, 1]
    assert ETA.label() == "h1*"
    assert BBGenerator.of('prim0', 1).label() == "x2"
    with pytest.raises(DegreeError):
        BBGenerator.of('bogus', 0)


def test_normalize_koszul_sign():
    """两个奇生成元交换变号，偶生成元不变；重复奇生成元为零"""
    assert normalize((H, XI)) == (-1, (XI, H))
    assert normalize((E, XI)) == (1, (XI, E))
    assert normalize((H, H))[0] == 0
    assert normalize((E, E)) == (1, (E, E))


def test_generator_pairing():
    """⟨ξ, e⟩ = ⟨η, h⟩ = 1，交换后变号"""
    one = BBElement.monomial()
    assert bb_bracket(BBElement.monomial(XI), BBElement.monomial(E)) == one
    assert bb_bracket(BBElement.monomial(E), BBElement.monomial(XI)) == -one
    assert bb_bracket(BBElement.monomial(ETA), BBElement.monomial(H)) == one
    assert bb_bracket(BBElement.monomial(XI), BBElement.monomial(H)).is_zero()


def test_bracket_is_a_derivation():
    h2 = BBGenerator.of('prim1', 1)
    eta2 = BBGenerator.of('dual1', 1)
    hh = BBElement.monomial(H, h2)
    assert bb_bracket(BBElement.monomial(ETA), hh) == BBElement.monomial(h2)
    assert bb_bracket(BBElement.monomial(eta2), hh) == BBElement.monomial(H, coef=-1)
    assert bb_bracket(BBElement.monomial(XI, BBGenerator.of('dual0', 1)), BBElement.monomial(E)) \
        == BBElement.monomial(BBGenerator.of('dual0', 1), coef=-1)


def test_bracket_matches_oracle():
    """Leibniz 递推与直接展开在随机单项式和上逐项一致"""
    rng = random.Random(11)
    for _ in range(300):
        u = random_monomial(rng, 2, 2) + random_monomial(rng, 2, 2)
        v = random_monomial(rng, 2, 2) + random_monomial(rng, 2, 2)
        assert bb_bracket(u, v) == bb_bracket_oracle(u, v), (dump(u), dump(v))


def test_graded_jacobi_on_random_triples():
    """⟨u,⟨v,w⟩⟩ = ⟨⟨u,v⟩,w⟩ + (-1)^{(|u|-3)(|v|-3)} ⟨v,⟨u,w⟩⟩，1000 组随机单项式"""
    rng = random.Random(2024)
    for _ in range(1000):
        words = [random_word(rng, 2, 2, rng.randint(1, 3)) for _ in range(3)]
        u, v, w = (BBElement.monomial(*word, coef=rng.choice([-1, 1, 2])) for word in words)
        du, dv = word_degree(words[0]), word_degree(words[1])
        sign = -1 if (du - 3) * (dv - 3) % 2 else 1
        lhs = bb_bracket(u, bb_bracket(v, w))
        rhs = bb_bracket(bb_bracket(u, v), w) + bb_bracket(v, bb_bracket(u, w)).scale(sign)
        assert lhs == rhs, [dump(x) for x in (u, v, w)]


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_graded_jacobi_hypothesis(rng):
    """同一恒等式，由 hypothesis 提供随机源（含 3 维 g₀）"""
    words = [random_word(rng, 3, 1, rng.randint(1, 3)) for _ in range(3)]
    u, v, w = (BBElement.monomial(*word) for word in words)
    sign = -1 if (word_degree(words[0]) - 3) * (word_degree(words[1]) - 3) % 2 else 1
    assert bb_bracket(u, bb_bracket(v, w)) == \
        bb_bracket(bb_bracket(u, v), w) + bb_bracket(v, bb_bracket(u, w)).scale(sign)


def test_bracket_degree():
    rng = random.Random(5)
    for _ in range(100):
        wu, wv = random_word(rng, 2, 1, 3), random_word(rng, 2, 1, 2)
        out = bb_bracket(BBElement.monomial(*wu), BBElement.monomial(*wv))
        assert out.is_homogeneous(word_degree(wu) + word_degree(wv) - 3)


def test_word_length_cap():
    long = BBElement.monomial(*([E] * 7))
    with pytest.raises(DegreeError):
        bb_bracket(long, BBElement.monomial(XI))
    with pytest.raises(DegreeError):
        bb_bracket(BBElement.monomial(*([E] * 5)), BBElement.monomial(*([XI] + [E] * 4)))


def test_dump_and_coefficient():
    t = BBElement.from_terms([((E, XI), 2), ((XI, E), 1)])
    assert dump(t) == "x1*·x1: 3"
    assert t.coefficient((E, XI)) == 3
    assert t.by_bidegree().keys() == {(1, 1)}


def test_master_element_validation():
    with pytest.raises(DegreeError):
        # ξ e 的次数是 3
        MasterElement(1, 1, BBElement.monomial(XI, E), *[BBElement.zero()] * 5)
    with pytest.raises(ShapeError):
        MasterElement(1, 1, BBElement.monomial(ETA, BBGenerator.of('prim0', 1)), *[BBElement.zero()] * 5)


def test_encode_rejects_non_skew_bracket():
    c = zeros(2, 2, 2)
    c[0, 1, 0] = 1
    L = StrictLie2Algebra.from_arrays(zeros(2, 1), c, zeros(2, 1, 1))
    with pytest.raises(AxiomError):
        encode(L)


def test_encode_shape_mismatch(abelian_lie2, n3_bialgebra):
    with pytest.raises(ShapeError):
        encode(abelian_lie2, n3_bialgebra.cocycle)


def test_decode_recovers_structure(catalog_bases):
    for name, L, c in catalog_bases:
        t = encode(L, c)
        back = decode_algebra(t)
        assert arrays_equal(back.D, L.D), name
        assert arrays_equal(back.bracket00, L.bracket00), name
        assert arrays_equal(back.bracket01, L.bracket01), name
        assert decode(t) == c, name
        assert t.is_strict()


def test_master_equation_on_catalog(catalog_bases):
    """分类表中的严格双代数满足 ⟨t,t⟩ = 0 的每个双次数"""
    for name, L, c in catalog_bases:
        report = encode_and_check(L, c)
        assert report.passed, (name, report.failed())
        assert set(report.results) == {bidegree_name(k) for k in MASTER_BIDEGREES} | {'l_only', 'c_only'}


def encode_and_check(L, c=None):
    return master_check(encode(L, c))


def test_master_check_agrees_with_strict_axioms(catalog_bases, n3_plane):
    """随机扰动后的代数：⟨l,l⟩ 的三个双次数为零当且仅当严格公理成立"""
    bases = [L for _, L, _ in catalog_bases] + [n3_plane]
    corpus = strict_corpus(bases, seed=3, size=120)
    assert len(corpus) == 120
    verdicts = []
    for L in corpus:
        report = encode_and_check(L)
        by_bracket = all(report[bidegree_name(k)].passed for k in STRICT_BIDEGREES)
        assert by_bracket == check_strict_axioms(L).passed
        assert report['l_only'].passed == by_bracket
        verdicts.append(by_bracket)
    assert any(verdicts) and not all(verdicts)


def test_cocycle_bidegrees_vanish_for_n3(n3_bialgebra):
    report = encode_and_check(n3_bialgebra.base, n3_bialgebra.cocycle)
    for key in COCYCLE_BIDEGREES:
        assert report[bidegree_name(key)].passed
    assert report['c_only'].passed


def test_cocycle_bidegrees_match_cocycle_check(catalog_bases):
    """扰动后的 (δ₀, δ₁)：⟨l,c⟩ 的两个双次数为零当且仅当 D(δ) = 0"""
    corpus = triangle_corpus(catalog_bases, seed=7)
    verdicts = []
    for name, L, c in corpus:
        report = encode_and_check(L, c)
        by_bracket = all(report[bidegree_name(k)].passed for k in COCYCLE_BIDEGREES)
        assert by_bracket == is_2cocycle(L, c), name
        if '~' not in name:
            # 双代数及其加上 D𝔯 的版本
            assert by_bracket, name
        if '~' not in name and '+' not in name:
            assert report['c_only'].passed, name
        verdicts.append(by_bracket)
    assert any(verdicts) and not all(verdicts)


def test_higher_terms_must_be_homogeneous(n3_plane):
    with pytest.raises(DegreeError):
        encode(n3_plane, l3=BBElement.monomial(XI, E))
    t = encode(n3_plane, t22=BBElement.monomial(XI, BBGenerator.of("dual0", 1), H, BBGenerator.of("prim1", 1)))
    assert not t.is_strict()
