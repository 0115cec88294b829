"""
严格 Lie 2-代数
结构常数、七条公理检查、同态、半直积 Lie 代数以及严格表示（伴随、余伴随、对偶、张量）
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lie2_core import (
    AxiomError, CheckReport, GradedSpace2, LinMap, ShapeError,
    arrays_equal, as_rational_array, identity, is_zero, rationalize, unit, zeros,
)

logger = logging.getLogger(__name__)


def bracket_vectors(structure: np.ndarray, u, v) -> np.ndarray:
    """Σ u_i v_j C[i,j,:]"""
    tmp = np.tensordot(np.asarray(u, dtype=object), structure, axes=(0, 0))
    return rationalize(np.tensordot(np.asarray(v, dtype=object), tmp, axes=(0, 0)))


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """有限维 Lie 代数，[e_i, e_j] = Σ_k structure[i,j,k] e_k"""
    structure: np.ndarray
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        s = self.structure
        if not (isinstance(s, np.ndarray) and s.dtype == object):
            s = as_rational_array(s)
        if s.ndim != 3 or len(set(s.shape)) != 1:
            raise ShapeError(f"结构常数需要 n×n×n 数组, 实际 {s.shape}")
        object.__setattr__(self, 'structure', s)
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(f"e{i + 1}" for i in range(s.shape[0])))

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def bracket(self, u, v) -> np.ndarray:
        return bracket_vectors(self.structure, u, v)

    def ad(self, i: int) -> np.ndarray:
        """ad_{e_i} 的矩阵，ad[k,j] = C[i,j,k]"""
        return self.structure[i].T.copy()

    def ad_vector(self, u) -> np.ndarray:
        return rationalize(np.tensordot(np.asarray(u, dtype=object), self.structure, axes=(0, 0)).T)

    def check(self, full: bool = False) -> CheckReport:
        """反对称性与 Jacobi 恒等式"""
        report = CheckReport('LieAlgebra')
        C = self.structure
        n = self.dim
        report.scan('antisymmetry', (
            ((self.labels[i], self.labels[j]), C[i, j], -C[j, i])
            for i in range(n) for j in range(n)
        ), anchor='Lie algebra: [x,y] = -[y,x]', full=full)
        report.scan('jacobi', self._jacobi_cases(), anchor='Lie algebra: Jacobi identity', full=full)
        return report

    def _jacobi_cases(self):
        n = self.dim
        zero = zeros(n)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    e = [unit(n, t) for t in (i, j, k)]
                    total = (self.bracket(self.bracket(e[0], e[1]), e[2])
                             + self.bracket(self.bracket(e[1], e[2]), e[0])
                             + self.bracket(self.bracket(e[2], e[0]), e[1]))
                    yield (self.labels[i], self.labels[j], self.labels[k]), total, zero

    def is_abelian(self) -> bool:
        return is_zero(self.structure)


@dataclass(frozen=True, eq=False)
class StrictLie2Algebra:
    """
    严格 Lie 2-代数 (g₀, g₋₁, d, [·,·])

    bracket00[i,j,k]: [x_i, x_j] = Σ_k bracket00[i,j,k] x_k
    bracket01[i,a,b]: [x_i, h_a] = Σ_b bracket01[i,a,b] h_b
    [h, x] = -[x, h]，[h, k] = 0 不单独存储
    """
    space: GradedSpace2
    d: LinMap
    bracket00: np.ndarray
    bracket01: np.ndarray

    def __post_init__(self):
        n0, n1 = self.space.dim0, self.space.dim_m1
        if self.d.shape != (n0, n1):
            raise ShapeError(f"d 的形状应为 {(n0, n1)}, 实际 {self.d.shape}")
        for name, shape in (('bracket00', (n0, n0, n0)), ('bracket01', (n0, n1, n1))):
            block = getattr(self, name)
            if not (isinstance(block, np.ndarray) and block.dtype == object and block.shape == shape):
                block = as_rational_array(block, shape)
            object.__setattr__(self, name, block)

    @classmethod
    def from_arrays(cls, D, bracket00, bracket01, labels0: Sequence[str] = (),
                    labels_m1: Sequence[str] = ()) -> 'StrictLie2Algebra':
        """
        由矩阵数据构造

        Args:
            D: n0×n1 矩阵，第 a 列是 d(h_a)
            bracket00: n0×n0×n0 数组
            bracket01: n0×n1×n1 数组
        """
        D = np.asarray(D, dtype=object)
        if D.ndim != 2:
            raise ShapeError("D 必须是矩阵")
        n0, n1 = D.shape
        space = GradedSpace2(n0, n1, tuple(labels0), tuple(labels_m1))
        return cls(space, LinMap(as_rational_array(D, (n0, n1))),
                   as_rational_array(bracket00, (n0, n0, n0)),
                   as_rational_array(bracket01, (n0, n1, n1)))

    @classmethod
    def abelian(cls, n0: int, n1: int, D=None) -> 'StrictLie2Algebra':
        D = zeros(n0, n1) if D is None else D
        return cls.from_arrays(D, zeros(n0, n0, n0), zeros(n0, n1, n1))

    @property
    def n0(self) -> int:
        return self.space.dim0

    @property
    def n1(self) -> int:
        return self.space.dim_m1

    @property
    def D(self) -> np.ndarray:
        return self.d.matrix

    def replace(self, D=None, bracket00=None, bracket01=None) -> 'StrictLie2Algebra':
        return StrictLie2Algebra(
            self.space,
            LinMap(as_rational_array(D, (self.n0, self.n1))) if D is not None else self.d,
            self.bracket00 if bracket00 is None else as_rational_array(bracket00, (self.n0,) * 3),
            self.bracket01 if bracket01 is None else as_rational_array(bracket01, (self.n0, self.n1, self.n1)),
        )

    def bracket_00(self, x, y) -> np.ndarray:
        return bracket_vectors(self.bracket00, x, y)

    def bracket_01(self, x, h) -> np.ndarray:
        """[x, h] ∈ g₋₁"""
        return bracket_vectors(self.bracket01, x, h)

    def ad0(self, x) -> np.ndarray:
        """[x, ·] 在 g₀ 上的矩阵"""
        return rationalize(np.tensordot(np.asarray(x, dtype=object), self.bracket00, axes=(0, 0)).T)

    def rho(self, x) -> np.ndarray:
        """[x, ·] 在 g₋₁ 上的矩阵"""
        return rationalize(np.tensordot(np.asarray(x, dtype=object), self.bracket01, axes=(0, 0)).T)

    def ad1(self, h) -> np.ndarray:
        """[h, ·]: g₀ → g₋₁，矩阵 E[b,i] = -bracket01[i,a,b] h_a"""
        return rationalize(-np.tensordot(self.bracket01, np.asarray(h, dtype=object), axes=(1, 0)).T)

    def g0_algebra(self) -> LieAlgebra:
        return LieAlgebra(self.bracket00, self.space.labels0)


# ---------------------------------------------------------------------------
# 公理
# ---------------------------------------------------------------------------

AXIOMS = (
    'antisym00', 'antisym01', 'hk_zero', 'd_equivariance', 'peiffer', 'jacobi00', 'mixed_jacobi',
)


def check_strict_axioms(L: StrictLie2Algebra, full: bool = False) -> CheckReport:
    """
    检查严格 Lie 2-代数的七条恒等式

    Args:
        L: 待检查的代数
        full: 为 True 时收集每条公理的全部反例，否则只记录第一个

    Returns:
        CheckReport，每条公理一项
    """
    report = CheckReport('Axioms')
    n0, n1 = L.n0, L.n1
    c, b01, D = L.bracket00, L.bracket01, L.D
    l0, l1 = L.space.labels0, L.space.labels_m1

    report.scan('antisym00', (
        ((l0[i], l0[j]), c[i, j], -c[j, i]) for i in range(n0) for j in range(i, n0)
    ), anchor='strict Lie 2-algebra: [x,y] = -[y,x]', full=full)
    report.record('antisym01', True, anchor='strict Lie 2-algebra: [h,x] = -[x,h] (stored once)')
    report.record('hk_zero', True, anchor='strict Lie 2-algebra: [h,k] = 0 (not stored)')

    def d_equivariance():
        for i in range(n0):
            for a in range(n1):
                lhs = rationalize(D @ b01[i, a])
                rhs = L.bracket_00(unit(n0, i), D[:, a])
                yield (l0[i], l1[a]), lhs, rhs

    report.scan('d_equivariance', d_equivariance(),
                anchor='strict Lie 2-algebra: d[x,h] = [x,dh]', full=full)

    def peiffer():
        for a in range(n1):
            for b in range(a, n1):
                lhs = L.bracket_01(D[:, a], unit(n1, b))
                rhs = -L.bracket_01(D[:, b], unit(n1, a))
                yield (l1[a], l1[b]), lhs, rhs

    report.scan('peiffer', peiffer(), anchor='strict Lie 2-algebra: [dh,k] = [h,dk]', full=full)

    jac = L.g0_algebra().check(full=full)['jacobi']
    jac.name = 'jacobi00'
    jac.anchor = 'strict Lie 2-algebra: Jacobi identity on g0'
    report.add(jac)

    def mixed_jacobi():
        for i in range(n0):
            for j in range(i + 1, n0):
                Ri, Rj = L.rho(unit(n0, i)), L.rho(unit(n0, j))
                lhs = L.rho(c[i, j])
                rhs = rationalize(Ri @ Rj - Rj @ Ri)
                yield (l0[i], l0[j]), lhs, rhs

    report.scan('mixed_jacobi', mixed_jacobi(),
                anchor='strict Lie 2-algebra: [[x,y],h] + [[y,h],x] + [[h,x],y] = 0', full=full)

    if not report.passed:
        logger.debug(f"[Axioms] 未通过: {report.failed()}")
    return report


def semidirect(L: StrictLie2Algebra, check: bool = True) -> LieAlgebra:
    """
    g₀ ⊕ g₋₁ 上的半直积 Lie 代数 [x+h, y+k] = [x,y] + [x,k] + [h,y]

    Args:
        L: 严格 Lie 2-代数
        check: 为 True 时先检查公理，不通过则抛出 AxiomError
    """
    if check:
        report = check_strict_axioms(L)
        if not report.passed:
            raise AxiomError(f"严格公理不成立: {report.failed()}")
    n0, n1 = L.n0, L.n1
    N = n0 + n1
    C = zeros(N, N, N)
    C[:n0, :n0, :n0] = L.bracket00
    C[:n0, n0:, n0:] = L.bracket01
    C[n0:, :n0, n0:] = -L.bracket01.transpose(1, 0, 2)
    labels = L.space.labels0 + L.space.labels_m1
    return LieAlgebra(C, labels)


def homomorphism_report(f0, f1, L: StrictLie2Algebra, L2: StrictLie2Algebra) -> CheckReport:
    """
    严格同态 (f₀, f₁): L → L2 的逐条检查

    f₀∘d = d'∘f₁，f₀[x,y] = [f₀x, f₀y]'，f₁[x,h] = [f₀x, f₁h]'
    """
    F0 = f0.matrix if isinstance(f0, LinMap) else as_rational_array(f0)
    F1 = f1.matrix if isinstance(f1, LinMap) else as_rational_array(f1)
    if F0.shape != (L2.n0, L.n0) or F1.shape != (L2.n1, L.n1):
        raise ShapeError(f"同态矩阵形状应为 {(L2.n0, L.n0)} 与 {(L2.n1, L.n1)}")
    report = CheckReport('Homomorphism')
    l0, l1 = L.space.labels0, L.space.labels_m1
    report.scan('chain_map', (
        ((l1[a],), rationalize(F0 @ L.D[:, a]), rationalize(L2.D @ F1[:, a])) for a in range(L.n1)
    ), anchor='homomorphism: f0 d = d\' f1')
    report.scan('bracket00', (
        ((l0[i], l0[j]), rationalize(F0 @ L.bracket00[i, j]), L2.bracket_00(F0[:, i], F0[:, j]))
        for i in range(L.n0) for j in range(L.n0)
    ), anchor='homomorphism: f0[x,y] = [f0 x, f0 y]\'')
    report.scan('bracket01', (
        ((l0[i], l1[a]), rationalize(F1 @ L.bracket01[i, a]), L2.bracket_01(F0[:, i], F1[:, a]))
        for i in range(L.n0) for a in range(L.n1)
    ), anchor='homomorphism: f1[x,h] = [f0 x, f1 h]\'')
    return report


def check_homomorphism(f0, f1, L: StrictLie2Algebra, L2: StrictLie2Algebra) -> bool:
    return homomorphism_report(f0, f1, L, L2).passed


def identity_lie2(g: LieAlgebra) -> StrictLie2Algebra:
    """Lie 代数 g 作为严格 Lie 2-代数 g →Id g（[x,h] 取伴随作用）"""
    n = g.dim
    return StrictLie2Algebra.from_arrays(identity(n), g.structure, g.structure,
                                         labels0=g.labels, labels_m1=tuple(f"{s}'" for s in g.labels))


# ---------------------------------------------------------------------------
# 严格表示
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class StrictRep:
    """
    严格 Lie 2-代数 L 在复形 V_0 → V_1 → ... → V_{m-1} 上的严格表示

    partial[j]: V_j → V_{j+1}，形状 (dim_{j+1}, dim_j)
    mu0[j]:     形状 (n0, dim_j, dim_j)，μ₀(x_i) 在 V_j 上的矩阵
    mu1[j]:     形状 (n1, dim_j, dim_{j+1})，μ₁(h_a): V_{j+1} → V_j
    V_{m-1} 是 0 次部分，μ₁ 降低一次
    """
    algebra: StrictLie2Algebra
    dims: Tuple[int, ...]
    partial: Tuple[np.ndarray, ...]
    mu0: Tuple[np.ndarray, ...]
    mu1: Tuple[np.ndarray, ...]

    def __post_init__(self):
        m = len(self.dims)
        n0, n1 = self.algebra.n0, self.algebra.n1
        if len(self.partial) != m - 1 or len(self.mu0) != m or len(self.mu1) != m - 1:
            raise ShapeError("表示数据的块数与复形长度不符")
        for j in range(m - 1):
            if self.partial[j].shape != (self.dims[j + 1], self.dims[j]):
                raise ShapeError(f"∂_{j} 形状错误: {self.partial[j].shape}")
            if self.mu1[j].shape != (n1, self.dims[j], self.dims[j + 1]):
                raise ShapeError(f"μ₁ 第 {j} 块形状错误: {self.mu1[j].shape}")
        for j in range(m):
            if self.mu0[j].shape != (n0, self.dims[j], self.dims[j]):
                raise ShapeError(f"μ₀ 第 {j} 块形状错误: {self.mu0[j].shape}")

    @property
    def length(self) -> int:
        return len(self.dims)

    def mu0_at(self, j: int, x) -> np.ndarray:
        return rationalize(np.tensordot(np.asarray(x, dtype=object), self.mu0[j], axes=(0, 0)))

    def mu1_at(self, j: int, h) -> np.ndarray:
        return rationalize(np.tensordot(np.asarray(h, dtype=object), self.mu1[j], axes=(0, 0)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrictRep) or self.dims != other.dims:
            return False
        pairs = list(zip(self.partial, other.partial)) + list(zip(self.mu0, other.mu0)) \
            + list(zip(self.mu1, other.mu1))
        return all(arrays_equal(a, b) for a, b in pairs)

    __hash__ = None


def rep_check(rho: StrictRep, full: bool = False) -> CheckReport:
    """
    检查 (μ₀, μ₁) 是到 End(𝒱) 的严格同态

    end_square 单独记录 μ₁(h)μ₁(k) + μ₁(k)μ₁(h) = 0（仅三项及以上的复形非平凡）
    """
    L = rho.algebra
    n0, n1 = L.n0, L.n1
    m = rho.length
    l0, l1 = L.space.labels0, L.space.labels_m1
    report = CheckReport('StrictRep')

    report.scan('complex', (
        ((f"V{j}",), rationalize(rho.partial[j + 1] @ rho.partial[j]),
         zeros(rho.dims[j + 2], rho.dims[j])) for j in range(m - 2)
    ), anchor='representation: ∂∂ = 0', full=full)

    report.scan('mu0_chain', (
        ((l0[i], f"V{j}"), rationalize(rho.partial[j] @ rho.mu0[j][i]),
         rationalize(rho.mu0[j + 1][i] @ rho.partial[j]))
        for i in range(n0) for j in range(m - 1)
    ), anchor='representation: μ0(x) commutes with ∂', full=full)

    def mu1_chain():
        for a in range(n1):
            dh = L.D[:, a]
            for j in range(m):
                lhs = rho.mu0_at(j, dh)
                rhs = zeros(rho.dims[j], rho.dims[j])
                if j >= 1:
                    rhs = rhs + rho.partial[j - 1] @ rho.mu1[j - 1][a]
                if j < m - 1:
                    rhs = rhs + rho.mu1[j][a] @ rho.partial[j]
                yield (l1[a], f"V{j}"), lhs, rationalize(rhs)

    report.scan('mu1_chain', mu1_chain(), anchor='representation: μ0(dh) = ∂μ1(h) + μ1(h)∂', full=full)

    def mu0_hom():
        for i in range(n0):
            for k in range(i + 1, n0):
                bracket = L.bracket00[i, k]
                for j in range(m):
                    A, B = rho.mu0[j][i], rho.mu0[j][k]
                    yield (l0[i], l0[k], f"V{j}"), rho.mu0_at(j, bracket), rationalize(A @ B - B @ A)

    report.scan('mu0_hom', mu0_hom(), anchor='representation: μ0[x,y] = [μ0x, μ0y]', full=full)

    def mu1_equivariant():
        for i in range(n0):
            for a in range(n1):
                xh = L.bracket01[i, a]
                for j in range(m - 1):
                    E = rho.mu1[j][a]
                    rhs = rho.mu0[j][i] @ E - E @ rho.mu0[j + 1][i]
                    yield (l0[i], l1[a], f"V{j + 1}"), rho.mu1_at(j, xh), rationalize(rhs)

    report.scan('mu1_equivariant', mu1_equivariant(),
                anchor='representation: μ1[x,h] = [μ0x, μ1h]', full=full)

    def end_square():
        for a in range(n1):
            for b in range(a, n1):
                for j in range(m - 2):
                    Ea, Eb = rho.mu1[j][a], rho.mu1[j][b]
                    Fa, Fb = rho.mu1[j + 1][a], rho.mu1[j + 1][b]
                    yield ((l1[a], l1[b], f"V{j + 2}"), rationalize(Ea @ Fb + Eb @ Fa),
                           zeros(rho.dims[j], rho.dims[j + 2]))

    report.scan('end_square', end_square(), anchor='End(V): [E,E]_C = 0 for degree -1 elements', full=full)
    return report


def adjoint_rep(L: StrictLie2Algebra) -> StrictRep:
    """伴随表示：V_0 = g₋₁，V_1 = g₀，∂ = d"""
    n0, n1 = L.n0, L.n1
    R = np.stack([L.rho(unit(n0, i)) for i in range(n0)]) if n0 else zeros(0, n1, n1)
    A = np.stack([L.ad0(unit(n0, i)) for i in range(n0)]) if n0 else zeros(0, n0, n0)
    E = np.stack([L.ad1(unit(n1, a)) for a in range(n1)]) if n1 else zeros(0, n1, n0)
    return StrictRep(L, (n1, n0), (L.D.copy(),), (R, A), (E,))


def dual_rep(rho: StrictRep) -> StrictRep:
    """
    对偶表示：W_j = V_{m-1-j}*，∂ 取转置
    ⟨μ₀*(x)u*, v⟩ = -⟨u*, μ₀(x)v⟩，μ₁ 同理
    """
    m = rho.length
    dims = tuple(rho.dims[m - 1 - j] for j in range(m))
    partial = tuple(rho.partial[m - 2 - j].T.copy() for j in range(m - 1))
    mu0 = tuple(-rho.mu0[m - 1 - j].transpose(0, 2, 1) for j in range(m))
    mu1 = tuple(-rho.mu1[m - 2 - j].transpose(0, 2, 1) for j in range(m - 1))
    return StrictRep(rho.algebra, dims, partial, mu0, mu1)


def coadjoint_rep(L: StrictLie2Algebra) -> StrictRep:
    """余伴随表示：W_0 = g₀*，W_1 = g₋₁*，∂ = dᵀ"""
    return dual_rep(adjoint_rep(L))


def tensor_level_blocks(dims_v: Sequence[int], dims_w: Sequence[int], level: int) -> List[Tuple[int, int]]:
    """(V⊗W)_level 的直和分量 (a, b)，a 从大到小排列"""
    out = []
    for a in range(len(dims_v) - 1, -1, -1):
        b = level - a
        if 0 <= b < len(dims_w):
            out.append((a, b))
    return out


def tensor_rep(rho_v: StrictRep, rho_w: StrictRep) -> StrictRep:
    """
    张量表示 (V⊗W)_n = ⊕_{a+b=n} V_a⊗W_b（kron 按行优先展开）

    ∂  = ∂V⊗1 + (-1)^a 1⊗∂W
    μ₀ = μ₀V⊗1 + 1⊗μ₀W
    μ₁ = μ₁V⊗1 + (-1)^a 1⊗μ₁W
    """
    if rho_v.algebra is not rho_w.algebra and not (
            arrays_equal(rho_v.algebra.D, rho_w.algebra.D)
            and arrays_equal(rho_v.algebra.bracket00, rho_w.algebra.bracket00)
            and arrays_equal(rho_v.algebra.bracket01, rho_w.algebra.bracket01)):
        raise ShapeError("张量表示要求两个表示属于同一个代数")
    L = rho_v.algebra
    dv, dw = rho_v.dims, rho_w.dims
    m = len(dv) + len(dw) - 1
    levels = [tensor_level_blocks(dv, dw, n) for n in range(m)]
    offsets = []
    dims = []
    for blocks in levels:
        table, pos = {}, 0
        for a, b in blocks:
            table[(a, b)] = pos
            pos += dv[a] * dw[b]
        offsets.append(table)
        dims.append(pos)

    def place(target, n_out, n_in, key_out, key_in, matrix):
        ro, ri = offsets[n_out][key_out], offsets[n_in][key_in]
        target[ro:ro + matrix.shape[0], ri:ri + matrix.shape[1]] += matrix

    partial = []
    for n in range(m - 1):
        P = zeros(dims[n + 1], dims[n])
        for a, b in levels[n]:
            if a + 1 < len(dv):
                place(P, n + 1, n, (a + 1, b), (a, b), np.kron(rho_v.partial[a], identity(dw[b])))
            if b + 1 < len(dw):
                place(P, n + 1, n, (a, b + 1), (a, b),
                      (-1) ** a * np.kron(identity(dv[a]), rho_w.partial[b]))
        partial.append(rationalize(P))

    mu0 = []
    for n in range(m):
        blocks = zeros(L.n0, dims[n], dims[n])
        for i in range(L.n0):
            for a, b in levels[n]:
                M = np.kron(rho_v.mu0[a][i], identity(dw[b])) + np.kron(identity(dv[a]), rho_w.mu0[b][i])
                place(blocks[i], n, n, (a, b), (a, b), M)
        mu0.append(rationalize(blocks))

    mu1 = []
    for n in range(m - 1):
        blocks = zeros(L.n1, dims[n], dims[n + 1])
        for h in range(L.n1):
            for a, b in levels[n + 1]:
                if a >= 1:
                    place(blocks[h], n, n + 1, (a - 1, b), (a, b),
                          np.kron(rho_v.mu1[a - 1][h], identity(dw[b])))
                if b >= 1:
                    place(blocks[h], n, n + 1, (a, b - 1), (a, b),
                          (-1) ** a * np.kron(identity(dv[a]), rho_w.mu1[b - 1][h]))
        mu1.append(rationalize(blocks))

    return StrictRep(L, tuple(dims), tuple(partial), tuple(mu0), tuple(mu1))


def lie_algebra_rep_check(g: LieAlgebra, rep: np.ndarray) -> CheckReport:
    """rep[i] 是 e_i 的作用矩阵，检查 [ρx, ρy] = ρ[x,y]"""
    report = CheckReport('LieRep')
    n = g.dim
    report.scan('homomorphism', (
        ((g.labels[i], g.labels[j]),
         rationalize(rep[i] @ rep[j] - rep[j] @ rep[i]),
         rationalize(np.tensordot(g.structure[i, j], rep, axes=(0, 0))))
        for i in range(n) for j in range(i + 1, n)
    ), anchor='Lie algebra representation: [ρx, ρy] = ρ[x,y]')
    return report


def zero_rep(L: StrictLie2Algebra, dims: Sequence[int], partial: Sequence[np.ndarray]) -> StrictRep:
    """在给定复形上的零表示"""
    dims = tuple(dims)
    mu0 = tuple(zeros(L.n0, d, d) for d in dims)
    mu1 = tuple(zeros(L.n1, dims[j], dims[j + 1]) for j in range(len(dims) - 1))
    return StrictRep(L, dims, tuple(np.asarray(p, dtype=object) for p in partial), mu0, mu1)


def first_failed_axiom(L: StrictLie2Algebra) -> Optional[str]:
    report = check_strict_axioms(L)
    failed = report.failed()
    return failed[0] if failed else None
