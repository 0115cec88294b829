"""
二项分次空间上的精确有理线性代数
提供标量、线性映射、张量块以及张量平方上的微分 d⊗

约定：
    g₀ 的基记作 x_i（i = 0..n0-1），g₋₁ 的基记作 h_a（a = 0..n1-1）
    d: g₋₁ → g₀ 的矩阵 D 形状为 (n0, n1)，第 a 列是 d(h_a) 的坐标
    张量 Σ b0m[i,a] x_i⊗h_a 等按块存放；合并成 N×N 矩阵时 g₀ 在前、g₋₁ 在后
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import sympy

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_TEXT = re.compile(r'^[+-]?\d+(/\d+)?$')

DEGREE_PATTERNS = [(a, b, c) for a in (0, -1) for b in (0, -1) for c in (0, -1)]


class Lie2Error(ValueError):
    """所有计算错误的基类"""


class ShapeError(Lie2Error):
    """维数不匹配"""


class DegreeError(Lie2Error):
    """输入的分次不对（错误的张量块、不支持的上链双次数等）"""


class AxiomError(Lie2Error):
    """构造的代数前提不成立（严格公理、左对称性、上闭链条件等）"""


class SingularError(Lie2Error):
    """d 或 ω 退化，无法求逆"""


# ---------------------------------------------------------------------------
# 标量与数组
# ---------------------------------------------------------------------------

def to_fraction(value) -> Fraction:
    """
    把输入转换为精确有理数

    Args:
        value: int、Fraction 或形如 "p/q" 的字符串（允许 Unicode 负号）

    Returns:
        Fraction
    """
    if isinstance(value, bool):
        raise Lie2Error(f"布尔值不是有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip().replace('−', '-')
        if not _RATIONAL_TEXT.match(text):
            raise Lie2Error(f"无法解析有理数（只接受 p/q 形式）: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise Lie2Error(f"无法解析有理数: {value!r}") from e
    # 浮点数不允许进入计算
    raise Lie2Error(f"不支持的标量类型 {type(value).__name__}: {value!r}")


def zeros(*shape: int) -> np.ndarray:
    return np.full(shape, ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def as_rational_array(data, shape: Optional[Tuple[int, ...]] = None) -> np.ndarray:
    """
    把嵌套列表或数组转换为 Fraction 对象数组

    Args:
        data: 嵌套列表、numpy 数组
        shape: 期望形状；给出时会检查（也用来恢复含 0 维的形状）

    Returns:
        dtype=object 的 numpy 数组
    """
    raw = np.array(data, dtype=object)
    flat = [to_fraction(v) for v in raw.flat]
    out = np.empty(len(flat), dtype=object)
    out[:] = flat
    if shape is not None:
        if raw.size != int(np.prod(shape)) or (raw.size and raw.shape != tuple(shape)):
            raise ShapeError(f"形状不匹配: 期望 {tuple(shape)}, 实际 {raw.shape}")
        return out.reshape(shape)
    return out.reshape(raw.shape)


def rationalize(arr: np.ndarray) -> np.ndarray:
    """把 numpy 运算产生的 int 0 统一成 Fraction（空求和时会出现）"""
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = to_fraction(v)
    return out


def is_zero(arr) -> bool:
    return all(v == 0 for v in np.asarray(arr, dtype=object).flat)


def arrays_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def fmt(value) -> str:
    """有理数 → "p/q" 字符串（整数不带分母）"""
    q = to_fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_array(arr) -> list:
    """数组 → 嵌套的有理数字符串列表"""
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return fmt(arr.item())
    return [fmt_array(sub) for sub in arr]


def unit(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = ONE
    return v


def to_sympy(arr) -> sympy.Matrix:
    """二维 Fraction 数组 → sympy 有理矩阵"""
    arr = np.asarray(arr, dtype=object)
    rows, cols = arr.shape
    return sympy.Matrix(rows, cols, lambda i, j: sympy.Rational(arr[i, j].numerator, arr[i, j].denominator))


def from_sympy(matrix: sympy.Matrix) -> np.ndarray:
    out = zeros(matrix.rows, matrix.cols)
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            q = sympy.Rational(matrix[i, j])
            out[i, j] = Fraction(int(q.p), int(q.q))
    return out


def matrix_rank(arr) -> int:
    arr = np.asarray(arr, dtype=object)
    if 0 in arr.shape:
        return 0
    return to_sympy(arr).rank()


def matrix_inverse(arr) -> np.ndarray:
    """
    精确求逆

    Raises:
        SingularError: 矩阵不可逆
    """
    arr = np.asarray(arr, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"只能对方阵求逆, 实际 {arr.shape}")
    if arr.shape[0] == 0:
        return zeros(0, 0)
    m = to_sympy(arr)
    if m.det() == 0:
        raise SingularError("矩阵奇异, 无法求逆")
    return from_sympy(m.inv())


def nullspace(arr) -> List[np.ndarray]:
    """零空间的一组基（每个为一维 Fraction 数组）"""
    arr = np.asarray(arr, dtype=object)
    if arr.shape[1] == 0:
        return []
    if arr.shape[0] == 0:
        return [unit(arr.shape[1], i) for i in range(arr.shape[1])]
    return [from_sympy(v)[:, 0].copy() for v in to_sympy(arr).nullspace()]


def first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[Tuple[int, ...]]:
    """返回第一个不相等位置的下标"""
    for idx, v in np.ndenumerate(lhs):
        if v != rhs[idx]:
            return idx
    return None


# ---------------------------------------------------------------------------
# 检查报告
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    """单项检查结果；witness 为第一个失败的基元组"""
    name: str
    passed: bool
    anchor: str = ''
    witness: Optional[Tuple] = None
    lhs: Optional[list] = None
    rhs: Optional[list] = None
    witnesses: List[Tuple] = field(default_factory=list)
    informational: bool = False

    def to_dict(self, full_witnesses: bool = False) -> Dict:
        out = {
            'name': self.name,
            'anchor': self.anchor,
            'passed': self.passed,
            'witness': None,
        }
        if self.witness is not None:
            out['witness'] = {
                'basis': [str(w) for w in self.witness],
                'lhs': self.lhs,
                'rhs': self.rhs,
            }
        if self.informational:
            out['informational'] = True
        if full_witnesses and self.witnesses:
            out['all_witnesses'] = [[str(w) for w in wit] for wit in self.witnesses]
        return out


class CheckReport:
    """
    一组检查结果（按名称索引）

    informational 的结果只作记录，不参与 passed
    """

    def __init__(self, title: str = ''):
        self.title = title
        self.results: Dict[str, CheckResult] = {}

    def add(self, result: CheckResult) -> CheckResult:
        self.results[result.name] = result
        if not result.passed and not result.informational:
            logger.debug(f"[{self.title or 'Check'}] {result.name} 失败, witness={result.witness}")
        return result

    def record(self, name: str, passed: bool, anchor: str = '', **kwargs) -> CheckResult:
        return self.add(CheckResult(name=name, passed=bool(passed), anchor=anchor, **kwargs))

    def scan(self, name: str, cases: Iterable[Tuple[Tuple, np.ndarray, np.ndarray]],
             anchor: str = '', full: bool = False, informational: bool = False) -> CheckResult:
        """
        逐个比较 (witness, lhs, rhs)，记录第一处（或全部）不等

        Args:
            name: 检查名称
            cases: 迭代器，产生 (基元组, 左边, 右边)
            anchor: 数学来源的描述
            full: 为 True 时收集全部反例
        """
        result = CheckResult(name=name, passed=True, anchor=anchor, informational=informational)
        for witness, lhs, rhs in cases:
            if arrays_equal(lhs, rhs):
                continue
            if result.passed:
                result.passed = False
                result.witness = tuple(witness)
                result.lhs = fmt_array(lhs)
                result.rhs = fmt_array(rhs)
                if not full:
                    break
            result.witnesses.append(tuple(witness))
        return self.add(result)

    def merge(self, other: 'CheckReport', prefix: str = '') -> 'CheckReport':
        for name, result in other.results.items():
            key = f"{prefix}{name}"
            self.results[key] = CheckResult(
                name=key, passed=result.passed, anchor=result.anchor, witness=result.witness,
                lhs=result.lhs, rhs=result.rhs, witnesses=list(result.witnesses),
                informational=result.informational,
            )
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values() if not r.informational)

    def failed(self) -> List[str]:
        return [n for n, r in self.results.items() if not r.passed and not r.informational]

    def __getitem__(self, name: str) -> CheckResult:
        return self.results[name]

    def __contains__(self, name: str) -> bool:
        return name in self.results

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results.values())

    def to_list(self, full_witnesses: bool = False) -> List[Dict]:
        return [self.results[n].to_dict(full_witnesses) for n in sorted(self.results)]

    def __repr__(self) -> str:
        return f"CheckReport({self.title!r}, passed={self.passed}, failed={self.failed()})"


# ---------------------------------------------------------------------------
# 空间与映射
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedSpace2:
    """二项复形的底空间 g₀ ⊕ g₋₁"""
    dim0: int
    dim_m1: int
    labels0: Tuple[str, ...] = ()
    labels_m1: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim0 < 0 or self.dim_m1 < 0:
            raise ShapeError("维数必须非负")
        if not self.labels0:
            object.__setattr__(self, 'labels0', tuple(f"x{i + 1}" for i in range(self.dim0)))
        if not self.labels_m1:
            object.__setattr__(self, 'labels_m1', tuple(f"h{a + 1}" for a in range(self.dim_m1)))
        if len(self.labels0) != self.dim0 or len(self.labels_m1) != self.dim_m1:
            raise ShapeError("基标签数目与维数不一致")

    @property
    def total(self) -> int:
        return self.dim0 + self.dim_m1

    def label(self, index: int) -> str:
        """合并编号（g₀ 在前）对应的基标签"""
        if index < self.dim0:
            return self.labels0[index]
        return self.labels_m1[index - self.dim0]


@dataclass(frozen=True, eq=False)
class LinMap:
    """线性映射，matrix 形状为 (目标维数, 源维数)"""
    matrix: np.ndarray
    source: Tuple[str, int] = ('g', -1)
    target: Tuple[str, int] = ('g', 0)

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, np.ndarray) or m.dtype != object:
            m = as_rational_array(m)
        if m.ndim != 2:
            raise ShapeError(f"线性映射需要二维矩阵, 实际 {m.ndim} 维")
        object.__setattr__(self, 'matrix', m)

    @classmethod
    def zero(cls, target_dim: int, source_dim: int, **kwargs) -> 'LinMap':
        return cls(zeros(target_dim, source_dim), **kwargs)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def __call__(self, vector) -> np.ndarray:
        vector = np.asarray(vector, dtype=object)
        if vector.shape[0] != self.shape[1]:
            raise ShapeError(f"向量长度 {vector.shape[0]} 与源维数 {self.shape[1]} 不符")
        return rationalize(self.matrix @ vector)

    def compose(self, other: 'LinMap') -> 'LinMap':
        """self ∘ other"""
        if self.shape[1] != other.shape[0]:
            raise ShapeError("复合映射维数不匹配")
        return LinMap(rationalize(self.matrix @ other.matrix), source=other.source, target=self.target)

    def transpose(self) -> 'LinMap':
        return LinMap(self.matrix.T.copy(), source=self.target, target=self.source)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinMap) and arrays_equal(self.matrix, other.matrix)

    __hash__ = None


# ---------------------------------------------------------------------------
# 张量块
# ---------------------------------------------------------------------------

_BLOCKS = ('b00', 'b0m', 'bm0', 'bmm')


@dataclass(frozen=True, eq=False)
class TensorElement:
    """
    (g₀⊕g₋₁)⊗(g₀⊕g₋₁) 中的元素，四个系数块：
        b00[i,j] x_i⊗x_j, b0m[i,a] x_i⊗h_a, bm0[a,i] h_a⊗x_i, bmm[a,b] h_a⊗h_b
    """
    n0: int
    n1: int
    b00: np.ndarray
    b0m: np.ndarray
    bm0: np.ndarray
    bmm: np.ndarray

    def __post_init__(self):
        expected = {
            'b00': (self.n0, self.n0), 'b0m': (self.n0, self.n1),
            'bm0': (self.n1, self.n0), 'bmm': (self.n1, self.n1),
        }
        for name, shape in expected.items():
            block = getattr(self, name)
            if not (isinstance(block, np.ndarray) and block.dtype == object and block.shape == shape):
                block = as_rational_array(block, shape)
            object.__setattr__(self, name, block)

    @classmethod
    def zero(cls, n0: int, n1: int) -> 'TensorElement':
        return cls(n0, n1, zeros(n0, n0), zeros(n0, n1), zeros(n1, n0), zeros(n1, n1))

    @classmethod
    def from_blocks(cls, n0: int, n1: int, **blocks) -> 'TensorElement':
        """未给出的块补零"""
        unknown = set(blocks) - set(_BLOCKS)
        if unknown:
            raise ShapeError(f"未知的张量块: {sorted(unknown)}")
        base = cls.zero(n0, n1)
        parts = {name: blocks.get(name, getattr(base, name)) for name in _BLOCKS}
        return cls(n0, n1, **parts)

    @classmethod
    def from_full(cls, n0: int, n1: int, full: np.ndarray) -> 'TensorElement':
        full = np.asarray(full, dtype=object)
        if full.shape != (n0 + n1, n0 + n1):
            raise ShapeError(f"张量矩阵形状应为 {(n0 + n1, n0 + n1)}")
        return cls(n0, n1, full[:n0, :n0].copy(), full[:n0, n0:].copy(),
                   full[n0:, :n0].copy(), full[n0:, n0:].copy())

    def full(self) -> np.ndarray:
        out = zeros(self.n0 + self.n1, self.n0 + self.n1)
        out[:self.n0, :self.n0] = self.b00
        out[:self.n0, self.n0:] = self.b0m
        out[self.n0:, :self.n0] = self.bm0
        out[self.n0:, self.n0:] = self.bmm
        return out

    def blocks(self) -> Dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in _BLOCKS}

    def nonzero_blocks(self) -> List[str]:
        return [name for name in _BLOCKS if not is_zero(getattr(self, name))]

    def is_zero(self) -> bool:
        return not self.nonzero_blocks()

    def _check_compatible(self, other: 'TensorElement'):
        if (self.n0, self.n1) != (other.n0, other.n1):
            raise ShapeError("张量元素维数不一致")

    def __add__(self, other: 'TensorElement') -> 'TensorElement':
        self._check_compatible(other)
        return TensorElement(self.n0, self.n1, *(getattr(self, n) + getattr(other, n) for n in _BLOCKS))

    def __sub__(self, other: 'TensorElement') -> 'TensorElement':
        self._check_compatible(other)
        return TensorElement(self.n0, self.n1, *(getattr(self, n) - getattr(other, n) for n in _BLOCKS))

    def __neg__(self) -> 'TensorElement':
        return self.scale(-ONE)

    def scale(self, c) -> 'TensorElement':
        c = to_fraction(c)
        return TensorElement(self.n0, self.n1, *(getattr(self, n) * c for n in _BLOCKS))

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorElement) and (self.n0, self.n1) == (other.n0, other.n1)
                and all(arrays_equal(getattr(self, n), getattr(other, n)) for n in _BLOCKS))

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"{n}={fmt_array(getattr(self, n))}" for n in self.nonzero_blocks()]
        return f"TensorElement({self.n0}|{self.n1}{', ' if parts else ''}{', '.join(parts)})"


@dataclass(frozen=True, eq=False)
class TensorCube:
    """三重张量，按分次模式 {0,-1}³ 分块"""
    n0: int
    n1: int
    blocks: Dict[Tuple[int, int, int], np.ndarray]

    @classmethod
    def from_full(cls, n0: int, n1: int, full: np.ndarray) -> 'TensorCube':
        n = n0 + n1
        if full.shape != (n, n, n):
            raise ShapeError(f"三重张量形状应为 {(n, n, n)}")
        ranges = {0: slice(0, n0), -1: slice(n0, n)}
        blocks = {p: full[ranges[p[0]], ranges[p[1]], ranges[p[2]]].copy() for p in DEGREE_PATTERNS}
        return cls(n0, n1, blocks)

    def full(self) -> np.ndarray:
        n = self.n0 + self.n1
        ranges = {0: slice(0, self.n0), -1: slice(self.n0, n)}
        out = zeros(n, n, n)
        for p, block in self.blocks.items():
            out[ranges[p[0]], ranges[p[1]], ranges[p[2]]] = block
        return out

    def block(self, pattern: Tuple[int, int, int]) -> np.ndarray:
        return self.blocks[tuple(pattern)]

    def is_zero(self) -> bool:
        return all(is_zero(b) for b in self.blocks.values())

    def nonzero_patterns(self) -> List[Tuple[int, int, int]]:
        return [p for p in DEGREE_PATTERNS if not is_zero(self.blocks[p])]

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorCube) and (self.n0, self.n1) == (other.n0, other.n1)
                and all(arrays_equal(self.blocks[p], other.blocks[p]) for p in DEGREE_PATTERNS))

    __hash__ = None


# ---------------------------------------------------------------------------
# d⊗ 与交换算子
# ---------------------------------------------------------------------------

def differential_matrix(L) -> np.ndarray:
    """从 StrictLie2Algebra / LinMap / 矩阵中取出 D（形状 n0×n1）"""
    if hasattr(L, 'D'):
        return L.D
    if isinstance(L, LinMap):
        return L.matrix
    return np.asarray(L, dtype=object)


def _require_blocks(t: TensorElement, allowed: Sequence[str], op: str):
    extra = [b for b in t.nonzero_blocks() if b not in allowed]
    if extra:
        raise DegreeError(f"{op}: 输入在块 {extra} 上非零, 只允许 {list(allowed)}")


def d_tensor_deg1(L, t: TensorElement) -> TensorElement:
    """
    (d⊗1 - 1⊗d)(x⊗k + h⊗y) = dh⊗y - x⊗dk

    Args:
        L: 严格 Lie 2-代数（或直接给出 d）
        t: 只含 b0m、bm0 块的张量

    Returns:
        只含 b00 块的张量
    """
    _require_blocks(t, ('b0m', 'bm0'), 'd_tensor_deg1')
    D = differential_matrix(L)
    if D.shape != (t.n0, t.n1):
        raise ShapeError(f"d 的形状 {D.shape} 与张量维数 {(t.n0, t.n1)} 不符")
    b00 = rationalize(D @ t.bm0 - t.b0m @ D.T)
    return TensorElement.from_blocks(t.n0, t.n1, b00=b00)


def d_tensor_deg0(L, t: TensorElement) -> TensorElement:
    """(d⊗1 + 1⊗d)(h⊗k) = dh⊗k + h⊗dk，结果在 b0m ⊕ bm0"""
    _require_blocks(t, ('bmm',), 'd_tensor_deg0')
    D = differential_matrix(L)
    if D.shape != (t.n0, t.n1):
        raise ShapeError(f"d 的形状 {D.shape} 与张量维数 {(t.n0, t.n1)} 不符")
    return TensorElement.from_blocks(
        t.n0, t.n1,
        b0m=rationalize(D @ t.bmm),
        bm0=rationalize(t.bmm @ D.T),
    )


def exchange(t: TensorElement, koszul: bool = False) -> TensorElement:
    """
    交换算子 σ(u⊗v) = v⊗u

    koszul=True 时按 𝒢[-1] 的分次（g₀ 为奇）在 g₀⊗g₀ 块上加负号
    """
    b00 = t.b00.T.copy()
    if koszul:
        b00 = -b00
    return TensorElement(t.n0, t.n1, b00, t.bm0.T.copy(), t.b0m.T.copy(), t.bmm.T.copy())
