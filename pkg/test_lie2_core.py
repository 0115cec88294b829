"""
精确有理线性代数、检查报告与张量块的测试
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lie2_core import (
    CheckReport, DegreeError, GradedSpace2, Lie2Error, LinMap, ShapeError, SingularError, TensorCube,
    TensorElement, arrays_equal, as_rational_array, d_tensor_deg0, d_tensor_deg1, exchange, fmt, fmt_array,
    identity, matrix_inverse, matrix_rank, nullspace, rationalize, to_fraction, zeros,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_to_fraction_accepts_strings_and_ints():
    """字符串、整数与 Unicode 负号"""
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction("−2") == Fraction(-2)
    assert to_fraction(7) == Fraction(7)
    assert to_fraction(np.int64(5)) == Fraction(5)


@pytest.mark.parametrize("bad", [0.5, True, "abc", "1/0", "0.5", "1e3", None])
def test_to_fraction_rejects_floats_and_garbage(bad):
    """浮点数、布尔值、小数写法与无法解析的字符串"""
    with pytest.raises(Lie2Error):
        to_fraction(bad)


def test_fmt_round_trip():
    assert fmt(Fraction(-3, 2)) == "-3/2"
    assert fmt(4) == "4"
    assert fmt_array([[Fraction(1, 2), 0], [1, -1]]) == [["1/2", "0"], ["1", "-1"]]


def test_as_rational_array_shape_check():
    arr = as_rational_array([[1, "1/2"], [0, 3]], (2, 2))
    assert arr[0, 1] == Fraction(1, 2)
    assert all(isinstance(v, Fraction) for v in arr.flat)
    with pytest.raises(ShapeError):
        as_rational_array([[1, 2, 3]], (2, 2))
    assert as_rational_array([], (0, 3)).shape == (0, 3)


def test_matrix_inverse_and_singular():
    """精确求逆；奇异矩阵抛 SingularError"""
    m = as_rational_array([[2, 1], [1, 1]])
    inv = matrix_inverse(m)
    assert arrays_equal(rationalize(m @ inv), identity(2))
    with pytest.raises(SingularError):
        matrix_inverse([[1, 2], [2, 4]])
    with pytest.raises(ShapeError):
        matrix_inverse([[1, 2, 3]])


def test_rank_and_nullspace():
    m = as_rational_array([[1, 2, 3], [2, 4, 6]])
    assert matrix_rank(m) == 1
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert arrays_equal(rationalize(m @ v), zeros(2))
    assert matrix_rank(zeros(0, 3)) == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=4, max_size=4))
def test_inverse_is_two_sided(entries):
    """随机 2×2 有理矩阵：可逆时 A·A⁻¹ = A⁻¹·A = I"""
    m = as_rational_array(np.array(entries, dtype=object).reshape(2, 2))
    if m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] == 0:
        with pytest.raises(SingularError):
            matrix_inverse(m)
        return
    inv = matrix_inverse(m)
    assert arrays_equal(rationalize(m @ inv), identity(2))
    assert arrays_equal(rationalize(inv @ m), identity(2))


def test_check_report_first_witness_and_full():
    """scan 默认只记第一个反例，full=True 收集全部"""
    cases = [((f"e{i}",), [i % 2], [0]) for i in range(4)]
    report = CheckReport('demo')
    result = report.scan('parity', iter(cases))
    assert not result.passed
    assert result.witness == ("e1",)
    assert result.lhs == ["1"]
    assert result.witnesses == []

    full = CheckReport('demo').scan('parity', iter(cases), full=True)
    assert full.witnesses == [("e1",), ("e3",)]


def test_informational_results_do_not_fail_report():
    report = CheckReport('demo')
    report.record('ok', True)
    report.scan('note', iter([(("x",), [1], [0])]), informational=True)
    assert report.passed
    assert report.failed() == []
    entries = {e['name']: e for e in report.to_list()}
    assert entries['note']['informational'] is True
    assert entries['note']['witness']['basis'] == ["x"]


def test_merge_prefixes_names():
    inner = CheckReport('inner')
    inner.record('a', False)
    outer = CheckReport('outer').merge(inner, prefix='sub.')
    assert 'sub.a' in outer
    assert outer.failed() == ['sub.a']


def test_graded_space_labels():
    space = GradedSpace2(2, 1)
    assert space.labels0 == ("x1", "x2")
    assert space.label(2) == "h1"
    with pytest.raises(ShapeError):
        GradedSpace2(2, 1, labels0=("a",))


def test_linmap_compose_and_call():
    f = LinMap([[1, 2], [0, 1]])
    g = LinMap([[0, 1], [1, 0]])
    assert arrays_equal(f.compose(g).matrix, as_rational_array([[2, 1], [1, 0]]))
    assert arrays_equal(f([1, 1]), as_rational_array([3, 1]))
    with pytest.raises(ShapeError):
        f([1, 2, 3])
    assert f.transpose().transpose() == f


def test_tensor_element_arithmetic():
    t = TensorElement.from_blocks(2, 1, b0m=[[1], [0]])
    s = TensorElement.from_blocks(2, 1, bm0=[[0, 2]])
    total = t + s
    assert total.nonzero_blocks() == ['b0m', 'bm0']
    assert (total - s) == t
    assert (2 * t).b0m[0, 0] == 2
    assert (-t).b0m[0, 0] == -1
    assert TensorElement.from_full(2, 1, total.full()) == total
    with pytest.raises(ShapeError):
        TensorElement.from_blocks(2, 1, bogus=[[1]])
    with pytest.raises(ShapeError):
        t + TensorElement.zero(1, 1)


def test_d_tensor_deg1_formula():
    """(d⊗1 - 1⊗d)(x⊗k + h⊗y) = dh⊗y - x⊗dk"""
    D = as_rational_array([[1], [0]])
    # x2⊗h1 + h1⊗x2
    t = TensorElement.from_blocks(2, 1, b0m=[[0], [1]], bm0=[[0, 1]])
    out = d_tensor_deg1(D, t)
    assert out.nonzero_blocks() == ['b00']
    # dh1 = x1：x1⊗x2 - x2⊗x1
    assert arrays_equal(out.b00, as_rational_array([[0, 1], [-1, 0]]))


def test_d_tensor_degree_errors():
    D = as_rational_array([[1], [0]])
    with pytest.raises(DegreeError):
        d_tensor_deg1(D, TensorElement.from_blocks(2, 1, bmm=[[1]]))
    with pytest.raises(DegreeError):
        d_tensor_deg0(D, TensorElement.from_blocks(2, 1, b00=[[1, 0], [0, 0]]))


def test_d_tensor_deg0_then_deg1_vanishes():
    """d⊗ 作用两次为零"""
    D = as_rational_array([[1, 2], [0, -1]])
    t = TensorElement.from_blocks(2, 2, bmm=[[1, 3], [-2, 5]])
    assert d_tensor_deg1(D, d_tensor_deg0(D, t)).is_zero()


def test_exchange_koszul_sign():
    t = TensorElement.from_blocks(2, 1, b00=[[0, 1], [0, 0]], b0m=[[1], [0]])
    plain = exchange(t)
    signed = exchange(t, koszul=True)
    assert plain.b00[1, 0] == 1
    assert signed.b00[1, 0] == -1
    assert plain.bm0[0, 0] == 1
    assert exchange(exchange(t)) == t


def test_tensor_cube_blocks():
    n0, n1 = 1, 1
    full = zeros(2, 2, 2)
    full[0, 1, 1] = Fraction(3)
    cube = TensorCube.from_full(n0, n1, full)
    assert cube.nonzero_patterns() == [(0, -1, -1)]
    assert arrays_equal(cube.full(), full)
    assert not cube.is_zero()


@st.composite
def matrices(draw, rows, cols):
    entries = draw(st.lists(rationals, min_size=rows * cols, max_size=rows * cols))
    return np.array(entries, dtype=object).reshape(rows, cols)


@st.composite
def tensor_pairs(draw):
    """同一 (n0, n1) 上的 d、两个全块张量和一个系数"""
    n0, n1 = draw(st.integers(1, 3)), draw(st.integers(1, 3))
    D = draw(matrices(n0, n1))

    def tensor():
        return TensorElement.from_blocks(
            n0, n1, b00=draw(matrices(n0, n0)), b0m=draw(matrices(n0, n1)),
            bm0=draw(matrices(n1, n0)), bmm=draw(matrices(n1, n1)))

    return D, tensor(), tensor(), draw(rationals)


def only(t, *names):
    return TensorElement.from_blocks(t.n0, t.n1, **{name: getattr(t, name) for name in names})


@settings(max_examples=50, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert to_fraction(fmt(a)) == a
    if a != 0:
        assert a * (1 / a) == 1


@settings(max_examples=30, deadline=None)
@given(tensor_pairs())
def test_d_tensor_is_linear(data):
    """d⊗ 的两个次数都是线性的"""
    D, t1, t2, a = data
    s1, s2 = only(t1, 'b0m', 'bm0'), only(t2, 'b0m', 'bm0')
    assert d_tensor_deg1(D, s1.scale(a) + s2) == d_tensor_deg1(D, s1).scale(a) + d_tensor_deg1(D, s2)
    m1, m2 = only(t1, 'bmm'), only(t2, 'bmm')
    assert d_tensor_deg0(D, m1.scale(a) + m2) == d_tensor_deg0(D, m1).scale(a) + d_tensor_deg0(D, m2)


@settings(max_examples=30, deadline=None)
@given(tensor_pairs(), st.booleans())
def test_exchange_is_linear_involution(data, koszul):
    D, t1, t2, a = data
    assert exchange(t1.scale(a) + t2, koszul) == exchange(t1, koszul).scale(a) + exchange(t2, koszul)
    assert exchange(exchange(t1, koszul), koszul) == t1


@settings(max_examples=30, deadline=None)
@given(tensor_pairs())
def test_d_tensor_squares_to_zero(data):
    """随机 d 与 g₋₁⊗g₋₁ 元素：(d⊗1 - 1⊗d)(d⊗1 + 1⊗d) = 0"""
    D, t1, _, _ = data
    assert d_tensor_deg1(D, d_tensor_deg0(D, only(t1, 'bmm'))).is_zero()
