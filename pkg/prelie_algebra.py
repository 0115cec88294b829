"""
左对称（pre-Lie）代数与由它们构造的严格 Lie 2-双代数
次伴随 Lie 代数、半直积 g(A) ⋉ A*、典范 r、可容许的 d、1 维与 2 维分类表、辛 Lie 代数以及 Â = A ⊕ A* 上的二重构造

约定：
    g₀ = g(A)（基 e_i），g₋₁ = A*（基 e_i*）
    d(e_a*) = Σ_j M[a,j] e_j，即 D = Mᵀ
    [e_i, e_a*] = L*_{e_i} e_a* = -Σ_b p[i,b,a] e_b*
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from lie2_core import (
    AxiomError, CheckReport, ShapeError, SingularError, TensorElement, ZERO,
    arrays_equal, as_rational_array, d_tensor_deg1, identity, matrix_inverse, matrix_rank,
    nullspace, rationalize, to_fraction, unit, zeros,
)
from lie2_cohomology import CocyclePair, coboundary
from lie2_bialgebra import RMatrixData, StrictLie2Bialgebra, cybe_check
from strict_lie2 import LieAlgebra, StrictLie2Algebra, check_strict_axioms, semidirect

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 左对称代数
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LeftSymmetricAlgebra:
    """e_i∘e_j = Σ_k product[i,j,k] e_k"""
    product: np.ndarray
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        p = self.product
        if not (isinstance(p, np.ndarray) and p.dtype == object):
            p = as_rational_array(p)
        if p.ndim != 3 or len(set(p.shape)) != 1:
            raise ShapeError(f"乘法结构常数需要 n×n×n 数组, 实际 {p.shape}")
        object.__setattr__(self, 'product', p)
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(f"e{i + 1}" for i in range(p.shape[0])))
        if len(self.labels) != p.shape[0]:
            raise ShapeError("基标签数目与维数不一致")

    @classmethod
    def create(cls, product, labels: Sequence[str] = ()) -> 'LeftSymmetricAlgebra':
        """构造并要求结合子对称

        Raises:
            AxiomError: 不是左对称代数
        """
        A = cls(as_rational_array(product), tuple(labels))
        report = check_left_symmetric(A)
        if not report.passed:
            raise AxiomError(f"不是左对称代数, witness={report['left_symmetry'].witness}")
        return A

    @classmethod
    def zero(cls, n: int) -> 'LeftSymmetricAlgebra':
        return cls(zeros(n, n, n))

    @property
    def dim(self) -> int:
        return self.product.shape[0]

    def multiply(self, u, v) -> np.ndarray:
        tmp = np.tensordot(np.asarray(u, dtype=object), self.product, axes=(0, 0))
        return rationalize(np.tensordot(np.asarray(v, dtype=object), tmp, axes=(0, 0)))

    def left(self, i: int) -> np.ndarray:
        """L_{e_i} 的矩阵，L[k,j] = p[i,j,k]"""
        return self.product[i].T.copy()

    def associator(self) -> np.ndarray:
        """(e_i∘e_j)∘e_k - e_i∘(e_j∘e_k)"""
        p = self.product
        first = np.tensordot(p, p, axes=(2, 0))
        second = np.tensordot(p, p, axes=(1, 2)).transpose(0, 2, 3, 1)
        return rationalize(first - second)

    def is_commutative(self) -> bool:
        return arrays_equal(self.product, self.product.transpose(1, 0, 2))


def check_left_symmetric(A: LeftSymmetricAlgebra, full: bool = False) -> CheckReport:
    """(x,y,z) = (y,x,z) 对所有基三元组"""
    assoc = A.associator()
    n = A.dim
    report = CheckReport('LeftSymmetric')
    report.scan('left_symmetry', (
        ((A.labels[i], A.labels[j], A.labels[k]), assoc[i, j, k], assoc[j, i, k])
        for i in range(n) for j in range(i + 1, n) for k in range(n)
    ), anchor='left-symmetric algebra: associator symmetric in the first two arguments', full=full)
    if not report.passed:
        logger.debug(f"[PreLie] 结合子不对称, witness={report['left_symmetry'].witness}")
    return report


def _require_left_symmetric(A: LeftSymmetricAlgebra):
    report = check_left_symmetric(A)
    if not report.passed:
        raise AxiomError(f"不是左对称代数, witness={report['left_symmetry'].witness}")


def sub_adjacent(A: LeftSymmetricAlgebra, check: bool = True) -> LieAlgebra:
    """[x,y] = x∘y - y∘x"""
    if check:
        _require_left_symmetric(A)
    return LieAlgebra(rationalize(A.product - A.product.transpose(1, 0, 2)), A.labels)


def left_mult_rep(A: LeftSymmetricAlgebra) -> np.ndarray:
    """L[i] = L_{e_i}"""
    return np.stack([A.left(i) for i in range(A.dim)]) if A.dim else zeros(0, 0, 0)


def dual_left_mult_rep(A: LeftSymmetricAlgebra) -> np.ndarray:
    """L*[i] = -L_{e_i}ᵀ"""
    return rationalize(-left_mult_rep(A).transpose(0, 2, 1))


@dataclass(frozen=True, eq=False)
class DMap:
    """d: A* → A，matrix 的第 a 行是 d(e_a*) 在 A 基下的坐标"""
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if not (isinstance(m, np.ndarray) and m.dtype == object):
            m = as_rational_array(m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ShapeError(f"M(d) 需要方阵, 实际 {m.shape}")
        object.__setattr__(self, 'matrix', m)

    @classmethod
    def zero(cls, n: int) -> 'DMap':
        return cls(zeros(n, n))

    @classmethod
    def of(cls, d, n: int) -> 'DMap':
        if d is None:
            return cls.zero(n)
        return d if isinstance(d, DMap) else cls(as_rational_array(d, (n, n)))

    @property
    def D(self) -> np.ndarray:
        """列约定下的矩阵（第 a 列是 d(e_a*)）"""
        return self.matrix.T.copy()

    def is_skew(self) -> bool:
        return arrays_equal(self.matrix, -self.matrix.T)

    def is_invertible(self) -> bool:
        return matrix_rank(self.matrix) == self.matrix.shape[0]


def prelie_lie2(A: LeftSymmetricAlgebra, d=None, dual_labels: Sequence[str] = ()) -> StrictLie2Algebra:
    """
    (g(A), A*, d, [·,·]_s)，不检查严格公理

    Args:
        A: 左对称代数
        d: DMap、M(d) 矩阵或 None（d = 0）
        dual_labels: g₋₁ 的基标签，缺省为 e_i*
    """
    n = A.dim
    dm = DMap.of(d, n)
    if dm.matrix.shape != (n, n):
        raise ShapeError(f"M(d) 形状应为 {(n, n)}")
    b00 = rationalize(A.product - A.product.transpose(1, 0, 2))
    b01 = rationalize(-A.product.transpose(0, 2, 1))
    labels_m1 = tuple(dual_labels) or tuple(f"{s}*" for s in A.labels)
    return StrictLie2Algebra.from_arrays(dm.D, b00, b01, labels0=A.labels, labels_m1=labels_m1)


def semidirect_prelie(A: LeftSymmetricAlgebra) -> LieAlgebra:
    """g(A) ⋉_{L*} A*：[x+h, y+k] = [x,y] + L*_x k - L*_y h"""
    _require_left_symmetric(A)
    return semidirect(prelie_lie2(A), check=False)


def canonical_r(A: LeftSymmetricAlgebra) -> TensorElement:
    """r = Σ_i (e_i⊗e_i* - e_i*⊗e_i)"""
    n = A.dim
    return TensorElement.from_blocks(n, n, b0m=identity(n), bm0=-identity(n))


def canonical_r_cybe(A: LeftSymmetricAlgebra, d=None, full: bool = False) -> CheckReport:
    """典范 r 在 g(A) ⋉ A* 中的二分次 CYBE"""
    return cybe_check(prelie_lie2(A, d), RMatrixData.of(canonical_r(A)), full=full)


# ---------------------------------------------------------------------------
# 可容许的 d
# ---------------------------------------------------------------------------

COND_I_AXIOMS = ('d_equivariance', 'peiffer')


def admissible_d_check(A: LeftSymmetricAlgebra, d) -> CheckReport:
    """
    cond_i: d[x,h]_s = [x,dh]_s 且 [dh,k]_s = [h,dk]_s
    cond_ii: (d⊗1 - 1⊗d)r = 0，等价于 M(d) 反对称
    """
    dm = DMap.of(d, A.dim)
    L = prelie_lie2(A, dm)
    axioms = check_strict_axioms(L)
    report = CheckReport('Admissible')
    failed = [axioms[name] for name in COND_I_AXIOMS if not axioms[name].passed]
    first = failed[0] if failed else None
    report.record('cond_i', not failed, anchor='admissible d: d[x,h]_s = [x,dh]_s and [dh,k]_s = [h,dk]_s',
                  witness=first.witness if first else None, lhs=first.lhs if first else None,
                  rhs=first.rhs if first else None)
    dr = d_tensor_deg1(L, canonical_r(A))
    report.record('cond_ii', dr.is_zero(), anchor='admissible d: (d⊗1 - 1⊗d)r = 0',
                  witness=('r',) if not dr.is_zero() else None)
    if dr.is_zero() != dm.is_skew():
        logger.warning("[PreLie] cond_ii 与 M(d) 的反对称性不一致")
    return report


def _cond_i_residual(A: LeftSymmetricAlgebra, M: np.ndarray) -> np.ndarray:
    """cond_i 两边之差拼成的向量（对 M 线性）"""
    L = prelie_lie2(A, M)
    n = A.dim
    D, b01 = L.D, L.bracket01
    parts = []
    for i in range(n):
        for a in range(n):
            parts.append(rationalize(D @ b01[i, a]) - L.bracket_00(unit(n, i), D[:, a]))
    for a in range(n):
        for b in range(n):
            parts.append(L.bracket_01(D[:, a], unit(n, b)) + L.bracket_01(D[:, b], unit(n, a)))
    return np.concatenate(parts) if parts else zeros(0)


def admissible_d_family(A: LeftSymmetricAlgebra, skew_only: bool = False) -> List[np.ndarray]:
    """
    cond_i 的解空间（M(d) 的一组基）

    Args:
        skew_only: 为 True 时只在反对称矩阵中求解
    """
    n = A.dim
    columns = []
    for r in range(n):
        for s in range(n):
            E = zeros(n, n)
            E[r, s] = 1
            residual = _cond_i_residual(A, E)
            if skew_only:
                residual = np.concatenate([residual, (E + E.T).flatten()])
            columns.append(residual)
    if not columns:
        return []
    system = np.stack(columns, axis=1)
    return [v.reshape(n, n) for v in nullspace(system)]


def same_span(family: Sequence[np.ndarray], other: Sequence[np.ndarray]) -> bool:
    """两组矩阵张成的子空间相同"""
    def rank(ms):
        ms = list(ms)
        if not ms:
            return 0
        return matrix_rank(np.stack([np.asarray(m, dtype=object).flatten() for m in ms]))

    r1, r2 = rank(family), rank(other)
    return r1 == r2 == rank(list(family) + list(other))


def build_bialgebra_from_prelie(A: LeftSymmetricAlgebra, d=None, dual_labels: Sequence[str] = ()) -> StrictLie2Bialgebra:
    """
    (g(A), A*, d, [·,·]_s) 与 D(r, 0)，r 为典范 r

    Raises:
        AxiomError: A 不是左对称代数，或 d 不可容许
    """
    _require_left_symmetric(A)
    report = admissible_d_check(A, d)
    if not report.passed:
        raise AxiomError(f"d 不满足可容许条件: {report.failed()}")
    L = prelie_lie2(A, d, dual_labels=dual_labels)
    c = coboundary(L, canonical_r(A))
    logger.info(f"[PreLie] 由 {A.dim} 维左对称代数构造严格 Lie 2-双代数")
    return StrictLie2Bialgebra(L, c)


# ---------------------------------------------------------------------------
# 辛 Lie 代数
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SymplecticLieAlgebra:
    """(h, ω)，ω 反对称、非退化且为 2-上闭链"""
    lie: LieAlgebra
    omega: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'omega', as_rational_array(self.omega, (self.lie.dim, self.lie.dim)))

    @classmethod
    def create(cls, lie: LieAlgebra, omega) -> 'SymplecticLieAlgebra':
        out = cls(lie, omega)
        report = symplectic_check(lie, out.omega)
        if not report.passed:
            raise AxiomError(f"不是辛 Lie 代数: {report.failed()}")
        return out


def bilinear_from_d(A: LeftSymmetricAlgebra, d) -> np.ndarray:
    """
    B_d(x,y) = ⟨d⁻¹x, y⟩，矩阵为 M(d)⁻¹

    Raises:
        SingularError: d 不可逆
    """
    dm = DMap.of(d, A.dim)
    return matrix_inverse(dm.matrix)


def invariance_check(A: LeftSymmetricAlgebra, omega) -> CheckReport:
    """ω 反对称且 ω(x∘y, z) = ω([x,z], y)"""
    n = A.dim
    W = as_rational_array(omega, (n, n))
    g = sub_adjacent(A, check=False)
    report = CheckReport('Invariance')
    report.scan('skew', [(('ω',), W, -W.T)], anchor='invariant form: ω skew-symmetric')

    def cases():
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = A.product[i, j] @ W[:, k]
                    rhs = g.structure[i, k] @ W[:, j]
                    yield (A.labels[i], A.labels[j], A.labels[k]), lhs, rhs

    report.scan('invariance', cases(), anchor='invariant form: ω(x∘y, z) = ω([x,z], y)')
    return report


def symplectic_check(g: LieAlgebra, omega) -> CheckReport:
    """ω 反对称、非退化，且 ω([x,y],z) + ω([y,z],x) + ω([z,x],y) = 0"""
    n = g.dim
    W = as_rational_array(omega, (n, n))
    C = g.structure
    report = CheckReport('Symplectic')
    report.scan('skew', [(('ω',), W, -W.T)], anchor='symplectic form: ω skew-symmetric')
    report.record('nondegenerate', matrix_rank(W) == n, anchor='symplectic form: ω nondegenerate')

    def cocycle():
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = C[i, j] @ W[:, k] + C[j, k] @ W[:, i] + C[k, i] @ W[:, j]
                    yield (g.labels[i], g.labels[j], g.labels[k]), total, ZERO

    report.scan('cocycle', cocycle(), anchor='symplectic form: ω([x,y],z) + c.p. = 0')
    return report


def compatible_product(g: LieAlgebra, omega) -> np.ndarray:
    """
    由 ω(x∘y, z) = -ω(y, [x,z]) 解出 x∘y 的结构常数

    Raises:
        SingularError: ω 退化
    """
    n = g.dim
    W = as_rational_array(omega, (n, n))
    Wt_inv = matrix_inverse(W.T)
    C = g.structure
    p = zeros(n, n, n)
    for x in range(n):
        for y in range(n):
            rhs = zeros(n)
            for z in range(n):
                rhs[z] = -sum((C[x, z, l] * W[y, l] for l in range(n)), ZERO)
            p[x, y] = rationalize(Wt_inv @ rhs)
    return p


def symplectic_to_prelie(g: LieAlgebra, omega) -> LeftSymmetricAlgebra:
    """
    辛 Lie 代数上的相容左对称代数

    Raises:
        SingularError: ω 退化
        AxiomError: ω 不是反对称的 2-上闭链
    """
    n = g.dim
    W = as_rational_array(omega, (n, n))
    if matrix_rank(W) != n:
        raise SingularError("ω 退化")
    report = symplectic_check(g, W)
    if not report.passed:
        raise AxiomError(f"(g, ω) 不是辛 Lie 代数: {report.failed()}")
    return LeftSymmetricAlgebra(compatible_product(g, W), g.labels)


def prelie_to_symplectic(A: LeftSymmetricAlgebra, omega) -> SymplecticLieAlgebra:
    """
    带不变非退化反对称型的左对称代数 → (g(A), ω)

    Raises:
        SingularError: ω 退化
        AxiomError: ω 不是不变型
    """
    n = A.dim
    W = as_rational_array(omega, (n, n))
    if matrix_rank(W) != n:
        raise SingularError("ω 退化")
    report = invariance_check(A, W)
    if not report.passed:
        raise AxiomError(f"ω 不是 A 上的不变型: {report.failed()}")
    return SymplecticLieAlgebra.create(sub_adjacent(A), W)


class InvertibleDVerdicts(NamedTuple):
    """d 可逆且 M(d) 反对称时三个等价条件的判定"""
    strict: bool
    invariant: bool
    symplectic: bool
    cocycle_only: bool

    def agree(self) -> bool:
        return self.strict == self.invariant == self.symplectic


def invertible_d_verdicts(A: LeftSymmetricAlgebra, d) -> InvertibleDVerdicts:
    """
    (1) (g(A), A*, d, [·,·]_s) 严格
    (2) B_d 在 A 上不变
    (3) (g(A), B_d) 辛，且其相容左对称积就是 A 的积
    cocycle_only 只记录 (g(A), B_d) 是否为辛 Lie 代数

    Raises:
        AxiomError: M(d) 不反对称
        SingularError: d 不可逆
    """
    dm = DMap.of(d, A.dim)
    if not dm.is_skew():
        raise AxiomError("M(d) 不反对称")
    B = bilinear_from_d(A, dm)
    strict = check_strict_axioms(prelie_lie2(A, dm)).passed
    invariant = invariance_check(A, B).passed
    g = sub_adjacent(A, check=False)
    cocycle_only = symplectic_check(g, B).passed
    symplectic = cocycle_only and arrays_equal(compatible_product(g, B), A.product)
    verdicts = InvertibleDVerdicts(strict, invariant, symplectic, cocycle_only)
    if not verdicts.agree():
        logger.warning(f"[PreLie] 三个判定不一致: {verdicts}")
    return verdicts


# ---------------------------------------------------------------------------
# Â = A ⊕ A*
# ---------------------------------------------------------------------------

def hat_product(A: LeftSymmetricAlgebra) -> np.ndarray:
    """
    Â 上的积：
        x∘̄y = x∘y，x∘̄a* = ad*_x a*，a*∘̄x = ad*_x a* - L*_x a*，a*∘̄b* = 0
    ad* 为 g(A) 在 A* 上的余伴随作用
    """
    n = A.dim
    p = A.product
    c = rationalize(p - p.transpose(1, 0, 2))
    hp = zeros(2 * n, 2 * n, 2 * n)
    hp[:n, :n, :n] = p
    for i in range(n):
        for a in range(n):
            for j in range(n):
                hp[i, n + a, n + j] = -c[i, j, a]
                hp[n + a, i, n + j] = -c[i, j, a] + p[i, j, a]
    return rationalize(hp)


def symplectic_form_p(n: int) -> np.ndarray:
    """ω_p(x+a*, y+b*) = ⟨a*,y⟩ - ⟨x,b*⟩"""
    W = zeros(2 * n, 2 * n)
    for i in range(n):
        W[n + i, i] = 1
        W[i, n + i] = -1
    return rationalize(W)


def double_d_matrix(n: int) -> np.ndarray:
    """M(d) = [[0, I], [-I, 0]]"""
    M = zeros(2 * n, 2 * n)
    for i in range(n):
        M[i, n + i] = 1
        M[n + i, i] = -1
    return rationalize(M)


def hat_algebra(A: LeftSymmetricAlgebra) -> LeftSymmetricAlgebra:
    """Â，并用 ω_p 上解出的相容积交叉检查"""
    _require_left_symmetric(A)
    n = A.dim
    labels = A.labels + tuple(f"{s}*" for s in A.labels)
    hat = LeftSymmetricAlgebra(hat_product(A), labels)
    oracle = compatible_product(semidirect_prelie(A), symplectic_form_p(n))
    if not arrays_equal(oracle, hat.product):
        logger.warning("[PreLie] Â 的积与由 ω_p 解出的相容积不一致")
    return hat


def symplectic_double(A: LeftSymmetricAlgebra) -> StrictLie2Bialgebra:
    """
    (g(Â), Â*, d, [·,·]_s) 与 r = Σ(e_i⊗f_i + e_i*⊗f_i* - f_i⊗e_i - f_i*⊗e_i*)

    Raises:
        AxiomError: A 不是左对称代数
    """
    hat = hat_algebra(A)
    n = A.dim
    dual_labels = tuple(f"f{i + 1}" for i in range(n)) + tuple(f"f{i + 1}*" for i in range(n))
    return build_bialgebra_from_prelie(hat, double_d_matrix(n), dual_labels=dual_labels)


# ---------------------------------------------------------------------------
# 分类表
# ---------------------------------------------------------------------------

def _product(n: int, terms: Sequence[Tuple[int, int, int, object]]) -> np.ndarray:
    p = zeros(n, n, n)
    for i, j, k, coef in terms:
        p[i, j, k] += to_fraction(coef)
    return p


def _matrix(rows) -> np.ndarray:
    return as_rational_array(rows)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """
    分类表中的一项

    builder 由乘法参数构造结构常数；family 为可容许 d 的参数 → 基矩阵；
    listed_family 记录原始列表中与验证结果不同的族
    """
    name: str
    dim: int
    builder: Callable[[Dict[str, Fraction]], np.ndarray]
    family: Dict[str, np.ndarray]
    params: Dict[str, Fraction] = field(default_factory=dict)
    grid: Tuple[Dict[str, Fraction], ...] = ()
    listed_family: Optional[Dict[str, np.ndarray]] = None
    note: str = ''

    def algebra(self, **params) -> LeftSymmetricAlgebra:
        values = dict(self.params)
        values.update({k: to_fraction(v) for k, v in params.items()})
        return LeftSymmetricAlgebra(self.builder(values))

    def d_matrix(self, **values) -> np.ndarray:
        """族中的 M(d)，未给出的参数取 0"""
        M = zeros(self.dim, self.dim)
        for name, basis in self.family.items():
            M = M + basis * to_fraction(values.get(name, 0))
        return rationalize(M)

    def parameter_grid(self) -> Tuple[Dict[str, Fraction], ...]:
        return self.grid or (dict(self.params),)

    @property
    def listed(self) -> Dict[str, np.ndarray]:
        return self.listed_family if self.listed_family is not None else self.family


def _n1(v: Dict[str, Fraction]) -> np.ndarray:
    if v.get('alt'):
        return _product(2, [(1, 0, 0, -1), (1, 1, 0, 1), (1, 1, 1, -1)])
    return _product(2, [(1, 0, 0, -1), (1, 1, 1, v['k'])])


def _n4(v: Dict[str, Fraction]) -> np.ndarray:
    l = v['l']
    return _product(2, [(0, 1, 0, l), (1, 0, 0, l - 1), (1, 1, 0, 1), (1, 1, 1, l)])


CATALOG: Dict[str, CatalogEntry] = {e.name: e for e in (
    CatalogEntry('1d', 1, lambda v: _product(1, [(0, 0, 0, 1)]), {},
                 note='e∘e = e; the only admissible d is 0'),
    CatalogEntry('A1', 2, lambda v: _product(2, [(0, 0, 0, 1), (1, 1, 1, 1)]), {},
                 note='e1∘e1 = e1, e2∘e2 = e2'),
    CatalogEntry('A2', 2, lambda v: _product(2, [(0, 0, 0, 1)]),
                 {'b': _matrix([[0, 0], [0, 1]])},
                 listed_family={'a': _matrix([[0, 1], [0, 0]]), 'b': _matrix([[0, 0], [0, 1]])},
                 note='e1∘e1 = e1; the listed entry M[0][1] = a breaks d-equivariance'),
    CatalogEntry('A3', 2, lambda v: _product(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]), {},
                 note='e1∘e1 = e1, e1∘e2 = e2∘e1 = e2'),
    CatalogEntry('A4', 2, lambda v: _product(2, [(0, 0, 1, 1)]),
                 {'b': _matrix([[0, 0], [0, 1]])},
                 listed_family={'a': _matrix([[0, 0], [1, 0]]), 'b': _matrix([[0, 0], [0, 1]])},
                 note='e1∘e1 = e2; the listed entry M[1][0] = a breaks [dh,k] = [h,dk]'),
    CatalogEntry('N1', 2, _n1, {}, params={'k': Fraction(0), 'alt': Fraction(0)},
                 grid=({'k': Fraction(0), 'alt': Fraction(0)}, {'k': Fraction(2), 'alt': Fraction(0)},
                       {'k': Fraction(-1, 2), 'alt': Fraction(0)}, {'k': Fraction(0), 'alt': Fraction(1)}),
                 note='e2∘e1 = -e1, e2∘e2 = k e2 (k ≠ 1), or e2∘e2 = e1 - e2 when alt = 1'),
    CatalogEntry('N2', 2, lambda v: _product(2, [(1, 0, 0, -1), (1, 1, 1, 1)]),
                 {'a': _matrix([[0, 0], [1, 0]])},
                 note='e2∘e1 = -e1, e2∘e2 = e2'),
    CatalogEntry('N3', 2, lambda v: _product(2, [(0, 0, 0, 1), (1, 0, 1, 1)]),
                 {'a': _matrix([[0, -1], [1, 0]])},
                 note='e1∘e1 = e1, e2∘e1 = e2; the only entry with nonzero skew M(d)'),
    CatalogEntry('N4', 2, _n4, {}, params={'l': Fraction(2)},
                 grid=({'l': Fraction(2)}, {'l': Fraction(-1)}, {'l': Fraction(1, 2)}),
                 note='e1∘e2 = l e1, e2∘e1 = (l-1) e1, e2∘e2 = e1 + l e2 (l ≠ 0, 1)'),
    CatalogEntry('N5', 2, lambda v: _product(2, [(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1)]),
                 {'a': _matrix([[1, -1], [1, 0]])},
                 note='e1∘e2 = e1, e2∘e2 = e1 + e2'),
    CatalogEntry('N6', 2, lambda v: _product(2, [(0, 0, 0, 2), (0, 1, 1, 1), (1, 1, 0, 1)]), {},
                 note='e1∘e1 = 2e1, e1∘e2 = e2, e2∘e2 = e1'),
)}


def catalog_entry(name: str) -> CatalogEntry:
    if name not in CATALOG:
        raise KeyError(f"分类表中没有 {name}，可选: {sorted(CATALOG)}")
    return CATALOG[name]


def catalog_fidelity(entry: CatalogEntry) -> CheckReport:
    """
    存储的 d 族等于 cond_i 的解空间；列出的族若不同，多出的方向必须违反 cond_i
    对参数网格中的每个乘法都检查
    """
    report = CheckReport('Catalog')
    for params in entry.parameter_grid():
        A = entry.algebra(**params)
        tag = ','.join(f"{k}={v}" for k, v in sorted(params.items())) or '-'
        solved = admissible_d_family(A)
        report.record(f"family[{tag}]", same_span(solved, list(entry.family.values())),
                      anchor=f"catalog {entry.name}: admissible d family equals the cond_i solution set",
                      witness=(entry.name, tag))
        if entry.listed_family is not None:
            extra = [m for k, m in entry.listed_family.items() if k not in entry.family]
            bad = all(not admissible_d_check(A, m)['cond_i'].passed for m in extra)
            report.record(f"listed_extra_fails[{tag}]", bad,
                          anchor=f"catalog {entry.name}: extra listed direction violates cond_i",
                          witness=(entry.name, tag))
    if not report.passed:
        logger.warning(f"[Catalog] {entry.name} 与分类表不符: {report.failed()}")
    return report


def catalog_bialgebras() -> List[Tuple[str, StrictLie2Algebra, CocyclePair]]:
    """分类表中每项在 d = 0 下的双代数，加上 N3 的非零 d"""
    out = []
    for entry in CATALOG.values():
        B = build_bialgebra_from_prelie(entry.algebra())
        out.append((entry.name, B.base, B.cocycle))
    n3 = CATALOG['N3']
    for a in (1, 2):
        B = build_bialgebra_from_prelie(n3.algebra(), n3.d_matrix(a=a))
        out.append((f"N3[a={a}]", B.base, B.cocycle))
    return out


# ---------------------------------------------------------------------------
# 随机左对称代数
# ---------------------------------------------------------------------------

def change_basis(A: LeftSymmetricAlgebra, P: np.ndarray) -> LeftSymmetricAlgebra:
    """新基 e'_i = Σ_k P[k,i] e_k 下的结构常数"""
    P = as_rational_array(P, (A.dim, A.dim))
    Pinv = matrix_inverse(P)
    p = np.tensordot(np.tensordot(P, A.product, axes=(0, 0)), P, axes=(1, 0))  # [i, m, j]
    p = p.transpose(0, 2, 1)
    return LeftSymmetricAlgebra(rationalize(np.tensordot(p, Pinv, axes=(2, 1))))


def direct_sum_prelie(A: LeftSymmetricAlgebra, B: LeftSymmetricAlgebra) -> LeftSymmetricAlgebra:
    n, m = A.dim, B.dim
    p = zeros(n + m, n + m, n + m)
    p[:n, :n, :n] = A.product
    p[n:, n:, n:] = B.product
    return LeftSymmetricAlgebra(p)


class CatalogSearch:
    """
    随机左对称代数：在 {-r..r} 中稀疏抽样结构常数并筛选，
    超过尝试次数后对分类表中的代数（必要时加上 1 维代数）做随机基变换
    """

    def __init__(self, seed: int = 0, coefficient_range: int = 2, density: float = 0.25,
                 max_tries: int = 400):
        self.rng = random.Random(seed)
        self.coefficient_range = coefficient_range
        self.density = density
        self.max_tries = max_tries

    def _sample(self, dim: int) -> LeftSymmetricAlgebra:
        r = self.coefficient_range
        p = zeros(dim, dim, dim)
        for idx in np.ndindex(dim, dim, dim):
            if self.rng.random() < self.density:
                p[idx] = Fraction(self.rng.randint(-r, r))
        return LeftSymmetricAlgebra(p)

    def _unimodular(self, dim: int) -> np.ndarray:
        P = identity(dim)
        for _ in range(dim + 1):
            i, j = self.rng.sample(range(dim), 2) if dim > 1 else (0, 0)
            if i == j:
                continue
            E = identity(dim)
            E[i, j] = Fraction(self.rng.choice([-1, 1]))
            P = rationalize(P @ E)
        return P

    def _fallback(self, dim: int) -> LeftSymmetricAlgebra:
        entries = list(CATALOG.values())
        parts, size = [], 0
        while size < dim:
            candidates = [e for e in entries if e.dim <= dim - size]
            entry = self.rng.choice(candidates)
            parts.append(entry.algebra(**self.rng.choice(entry.parameter_grid())))
            size += entry.dim
        A = parts[0]
        for B in parts[1:]:
            A = direct_sum_prelie(A, B)
        return change_basis(A, self._unimodular(dim))

    def random_left_symmetric(self, dim: int) -> LeftSymmetricAlgebra:
        for attempt in range(self.max_tries):
            A = self._sample(dim)
            if not is_zero_product(A) and check_left_symmetric(A).passed:
                logger.debug(f"[PreLie] 第 {attempt + 1} 次抽样得到 {dim} 维左对称代数")
                return A
        return self._fallback(dim)

    def corpus(self, count: int, max_dim: int = 3) -> List[LeftSymmetricAlgebra]:
        return [self.random_left_symmetric(1 + k % max_dim) for k in range(count)]


def is_zero_product(A: LeftSymmetricAlgebra) -> bool:
    return all(v == 0 for v in A.product.flat)


def random_left_symmetric(rng: random.Random, dim: int, coefficient_range: int = 2) -> LeftSymmetricAlgebra:
    """用 rng 派生的种子运行一次 CatalogSearch"""
    search = CatalogSearch(seed=rng.randrange(2 ** 31), coefficient_range=coefficient_range)
    return search.random_left_symmetric(dim)
