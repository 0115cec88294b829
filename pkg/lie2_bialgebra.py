"""
严格 Lie 2-双代数
对偶括号、对偶 Lie 2-代数、匹配对、标准 Manin 三元组、上边界 r-矩阵以及二分次经典 Yang–Baxter 方程

𝒢* 的约定：g₀' = g₋₁*（基 h*_a），g₋₁' = g₀*（基 x*_i），d* = Dᵀ
双 𝒢⊕𝒢* 的基顺序：K₀ = (x, h*)，K₋₁ = (h, x*)
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from lie2_core import (
    AxiomError, CheckReport, ShapeError, TensorElement,
    arrays_equal, as_rational_array, d_tensor_deg0, d_tensor_deg1, exchange, is_zero, matrix_rank, rationalize, to_fraction, unit, zeros,
)
from lie2_cohomology import (
    CocyclePair, cocycle_report, d_ad, d_mu_10, level_to_tensor, phi_cochain, phi_tensors,
    tensor_adjoint_rep, tensor_to_level,
)
from strict_lie2 import (
    LieAlgebra, StrictLie2Algebra, StrictRep, check_strict_axioms, coadjoint_rep,
    homomorphism_report, rep_check, semidirect,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 对偶括号
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DualBrackets:
    """
    (δ₀, δ₁) 转置得到的括号
        mm[a,b,c]: [h*_a, h*_b]* 在 h*_c 上的系数
        m0[a,i,j]: [h*_a, x*_i]* 在 x*_j 上的系数
        zm[i,a,j]: [x*_i, h*_a]* 在 x*_j 上的系数
    """
    mm: np.ndarray
    m0: np.ndarray
    zm: np.ndarray

    def is_zero(self) -> bool:
        return is_zero(self.mm) and is_zero(self.m0) and is_zero(self.zm)


def dual_brackets(L: StrictLie2Algebra, c: CocyclePair) -> DualBrackets:
    """⟨[h*,k*]*, l⟩ = ⟨h*⊗k*, δ₁(l)⟩，⟨[h*,x*]*, y⟩ = ⟨h*⊗x*, δ₀(y)⟩，⟨[x*,h*]*, y⟩ = ⟨x*⊗h*, δ₀(y)⟩"""
    if (c.n0, c.n1) != (L.n0, L.n1):
        raise ShapeError(f"(δ₀, δ₁) 的维数 {(c.n0, c.n1)} 与代数 {(L.n0, L.n1)} 不符")
    n0, n1 = L.n0, L.n1
    mm = zeros(n1, n1, n1)
    for cc, t in enumerate(c.delta1):
        mm[:, :, cc] = t.bmm
    m0 = zeros(n1, n0, n0)
    zm = zeros(n0, n1, n0)
    for j, t in enumerate(c.delta0):
        m0[:, :, j] = t.bm0
        zm[:, :, j] = t.b0m
    return DualBrackets(mm, m0, zm)


def dual_skew_report(L: StrictLie2Algebra, c: CocyclePair) -> CheckReport:
    br = dual_brackets(L, c)
    n0, n1 = L.n0, L.n1
    dual0 = [f"{s}*" for s in L.space.labels_m1]
    dual1 = [f"{s}*" for s in L.space.labels0]
    report = CheckReport('DualSkew')
    report.scan('dual_skew_mm', (
        ((dual0[a], dual0[b]), br.mm[a, b], -br.mm[b, a]) for a in range(n1) for b in range(a, n1)
    ), anchor='dual bracket: [h*,k*]* = -[k*,h*]*')
    report.scan('dual_skew_m0', (
        ((dual0[a], dual1[i]), br.m0[a, i], -br.zm[i, a]) for a in range(n1) for i in range(n0)
    ), anchor='dual bracket: [h*,x*]* = -[x*,h*]*')
    return report


def dual_lie2(L: StrictLie2Algebra, c: CocyclePair, check: bool = True) -> StrictLie2Algebra:
    """
    𝒢* = (g₋₁*, g₀*, d*, [·,·]*)

    Args:
        L: 严格 Lie 2-代数
        c: (δ₀, δ₁)
        check: 为 True 时要求 (δ₀, δ₁) 是 2-上闭链

    Raises:
        AxiomError: 对偶括号不反对称（无法存储），或 check=True 而上闭链条件不成立
    """
    if check:
        report = cocycle_report(L, c)
        if not report.passed:
            raise AxiomError(f"(δ₀, δ₁) 不是 2-上闭链: {report.failed()}")
    skew = dual_skew_report(L, c)
    if not skew.passed:
        raise AxiomError(f"对偶括号不反对称: {skew.failed()}")
    br = dual_brackets(L, c)
    return StrictLie2Algebra.from_arrays(
        L.D.T.copy(), br.mm, br.m0,
        labels0=tuple(f"{s}*" for s in L.space.labels_m1),
        labels_m1=tuple(f"{s}*" for s in L.space.labels0),
    )


# ---------------------------------------------------------------------------
# 双代数
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class StrictLie2Bialgebra:
    """(𝒢; (δ₀, δ₁))；构造时只检查维数，invariants() 给出完整检查"""
    base: StrictLie2Algebra
    cocycle: CocyclePair

    def __post_init__(self):
        if (self.cocycle.n0, self.cocycle.n1) != (self.base.n0, self.base.n1):
            raise ShapeError("上闭链维数与代数不符")

    @classmethod
    def create(cls, base: StrictLie2Algebra, cocycle: CocyclePair) -> 'StrictLie2Bialgebra':
        """构造并要求全部不变量成立"""
        out = cls(base, cocycle)
        report = out.invariants()
        if not report.passed:
            raise AxiomError(f"不是严格 Lie 2-双代数: {report.failed()}")
        return out

    def invariants(self, full: bool = False) -> CheckReport:
        """基代数公理、2-上闭链、对偶括号反对称、对偶 Lie 2-代数公理"""
        report = CheckReport('Bialgebra')
        report.merge(check_strict_axioms(self.base, full=full), prefix='base.')
        report.merge(cocycle_report(self.base, self.cocycle, full=full), prefix='cocycle.')
        skew = dual_skew_report(self.base, self.cocycle)
        report.merge(skew)
        if skew.passed:
            dual = dual_lie2(self.base, self.cocycle, check=False)
            report.merge(check_strict_axioms(dual, full=full), prefix='dual.')
        else:
            report.record('dual.constructible', False, anchor='dual Lie 2-algebra needs skew brackets')
        if not report.passed:
            logger.warning(f"[Bialgebra] 不变量未通过: {report.failed()}")
        return report

    def dual(self) -> StrictLie2Algebra:
        return dual_lie2(self.base, self.cocycle, check=False)

    def brackets(self) -> DualBrackets:
        return dual_brackets(self.base, self.cocycle)


# ---------------------------------------------------------------------------
# 匹配对与直和
# ---------------------------------------------------------------------------

class _RepOn:
    """把 𝒢 在 𝒢' 上的表示写成向量运算（V_0 = g'₋₁, V_1 = g'₀）"""

    def __init__(self, rho: StrictRep):
        self.rho = rho

    def on0(self, x, v):
        """μ₀(x) 作用在 g'₀ 上"""
        return rationalize(self.rho.mu0_at(1, x) @ np.asarray(v, dtype=object))

    def on1(self, x, w):
        """μ₀(x) 作用在 g'₋₁ 上"""
        return rationalize(self.rho.mu0_at(0, x) @ np.asarray(w, dtype=object))

    def mu1(self, h, v):
        """μ₁(h): g'₀ → g'₋₁"""
        return rationalize(self.rho.mu1_at(0, h) @ np.asarray(v, dtype=object))


def _require_rep_between(L: StrictLie2Algebra, L2: StrictLie2Algebra, mu: StrictRep):
    if mu.dims != (L2.n1, L2.n0):
        raise ShapeError(f"表示作用的复形维数 {mu.dims} 与 {(L2.n1, L2.n0)} 不符")
    if (mu.algebra.n0, mu.algebra.n1) != (L.n0, L.n1):
        raise ShapeError("表示所属的代数维数不符")
    if not arrays_equal(mu.partial[0], L2.D):
        raise ShapeError("表示的复形微分与目标代数的 d 不一致")


def direct_sum(L: StrictLie2Algebra, L2: StrictLie2Algebra, mu: StrictRep, mu2: StrictRep) -> StrictLie2Algebra:
    """
    𝒢⊕𝒢' 上的括号
        [x+x', y+y'] = [x,y] + μ₀(x)y' - μ₀'(y')x + μ₀'(x')y - μ₀(y)x' + [x',y']'
        [x+x', h+h'] = [x,h] + μ₀(x)h' - μ₁'(h')x - μ₁(h)x' + μ₀'(x')h + [x',h']'
    d = d ⊕ d'
    """
    _require_rep_between(L, L2, mu)
    _require_rep_between(L2, L, mu2)
    m, m2 = _RepOn(mu), _RepOn(mu2)
    n0, n1, k0, k1 = L.n0, L.n1, L2.n0, L2.n1
    N0, N1 = n0 + k0, n1 + k1

    def split0(v):
        return v[:n0], v[n0:]

    def split1(v):
        return v[:n1], v[n1:]

    def bracket00(u, v):
        x, xp = split0(u)
        y, yp = split0(v)
        g0 = L.bracket_00(x, y) - m2.on0(yp, x) + m2.on0(xp, y)
        g0p = m.on0(x, yp) - m.on0(y, xp) + L2.bracket_00(xp, yp)
        return np.concatenate([g0, g0p])

    def bracket01(u, w):
        x, xp = split0(u)
        h, hp = split1(w)
        g1 = L.bracket_01(x, h) - m2.mu1(hp, x) + m2.on1(xp, h)
        g1p = m.on1(x, hp) - m.mu1(h, xp) + L2.bracket_01(xp, hp)
        return np.concatenate([g1, g1p])

    b00 = zeros(N0, N0, N0)
    for I in range(N0):
        for J in range(N0):
            b00[I, J] = bracket00(unit(N0, I), unit(N0, J))
    b01 = zeros(N0, N1, N1)
    for I in range(N0):
        for A in range(N1):
            b01[I, A] = bracket01(unit(N0, I), unit(N1, A))
    D = zeros(N0, N1)
    D[:n0, :n1] = L.D
    D[n0:, n1:] = L2.D
    return StrictLie2Algebra.from_arrays(
        D, rationalize(b00), rationalize(b01),
        labels0=L.space.labels0 + L2.space.labels0,
        labels_m1=L.space.labels_m1 + L2.space.labels_m1,
    )


# 六个相容方程的名称
MATCHED_PAIR_EQUATIONS = (
    ('mp_x_x_xp', "matched pair: μ0'(x')[x,y]"),
    ('mp_xp_xp_x', "matched pair: μ0(x)[x',y']'"),
    ('mp_x_x_hp', "matched pair: μ1'(h')[x,y]"),
    ('mp_xp_xp_h', "matched pair: μ1(h)[x',y']'"),
    ('mp_x_h_xp', "matched pair: μ0'(x')[x,h]"),
    ('mp_xp_hp_x', "matched pair: μ0(x)[x',h']'"),
)


def matched_pair_check(L: StrictLie2Algebra, L2: StrictLie2Algebra, mu: StrictRep, mu2: StrictRep,
                       full: bool = False) -> CheckReport:
    """
    匹配对的六个相容方程

    Args:
        L, L2: 两个严格 Lie 2-代数
        mu: L 在 L2 上的表示
        mu2: L2 在 L 上的表示

    Raises:
        AxiomError: mu 或 mu2 不是严格表示
    """
    _require_rep_between(L, L2, mu)
    _require_rep_between(L2, L, mu2)
    for name, rho in (('μ', mu), ("μ'", mu2)):
        rr = rep_check(rho)
        if not rr.passed:
            raise AxiomError(f"{name} 不是严格表示: {rr.failed()}")
    m, m2 = _RepOn(mu), _RepOn(mu2)
    n0, n1, k0, k1 = L.n0, L.n1, L2.n0, L2.n1
    l0, l1 = L.space.labels0, L.space.labels_m1
    p0, p1 = L2.space.labels0, L2.space.labels_m1
    X = [unit(n0, i) for i in range(n0)]
    H = [unit(n1, a) for a in range(n1)]
    Xp = [unit(k0, i) for i in range(k0)]
    Hp = [unit(k1, a) for a in range(k1)]

    def eq1():
        for i, x in enumerate(X):
            for j, y in enumerate(X):
                for t, xp in enumerate(Xp):
                    lhs = m2.on0(xp, L.bracket_00(x, y))
                    rhs = (L.bracket_00(x, m2.on0(xp, y)) + L.bracket_00(m2.on0(xp, x), y)
                           + m2.on0(m.on0(y, xp), x) - m2.on0(m.on0(x, xp), y))
                    yield (l0[i], l0[j], p0[t]), lhs, rhs

    def eq2():
        for t, xp in enumerate(Xp):
            for u, yp in enumerate(Xp):
                for i, x in enumerate(X):
                    lhs = m.on0(x, L2.bracket_00(xp, yp))
                    rhs = (L2.bracket_00(xp, m.on0(x, yp)) + L2.bracket_00(m.on0(x, xp), yp)
                           + m.on0(m2.on0(yp, x), xp) - m.on0(m2.on0(xp, x), yp))
                    yield (p0[t], p0[u], l0[i]), lhs, rhs

    def eq3():
        for i, x in enumerate(X):
            for j, y in enumerate(X):
                for t, hp in enumerate(Hp):
                    lhs = m2.mu1(hp, L.bracket_00(x, y))
                    rhs = (L.bracket_01(x, m2.mu1(hp, y)) - L.bracket_01(y, m2.mu1(hp, x))
                           + m2.mu1(m.on1(y, hp), x) - m2.mu1(m.on1(x, hp), y))
                    yield (l0[i], l0[j], p1[t]), lhs, rhs

    def eq4():
        for t, xp in enumerate(Xp):
            for u, yp in enumerate(Xp):
                for a, h in enumerate(H):
                    lhs = m.mu1(h, L2.bracket_00(xp, yp))
                    rhs = (L2.bracket_01(xp, m.mu1(h, yp)) - L2.bracket_01(yp, m.mu1(h, xp))
                           + m.mu1(m2.on1(yp, h), xp) - m.mu1(m2.on1(xp, h), yp))
                    yield (p0[t], p0[u], l1[a]), lhs, rhs

    def eq5():
        for i, x in enumerate(X):
            for a, h in enumerate(H):
                for t, xp in enumerate(Xp):
                    lhs = m2.on1(xp, L.bracket_01(x, h))
                    rhs = (L.bracket_01(x, m2.on1(xp, h)) + L.bracket_01(m2.on0(xp, x), h)
                           + m2.mu1(m.mu1(h, xp), x) - m2.on1(m.on0(x, xp), h))
                    yield (l0[i], l1[a], p0[t]), lhs, rhs

    def eq6():
        for t, xp in enumerate(Xp):
            for b, hp in enumerate(Hp):
                for i, x in enumerate(X):
                    lhs = m.on1(x, L2.bracket_01(xp, hp))
                    rhs = (L2.bracket_01(xp, m.on1(x, hp)) + L2.bracket_01(m.on0(x, xp), hp)
                           + m.mu1(m2.mu1(hp, x), xp) - m.on1(m2.on0(xp, x), hp))
                    yield (p0[t], p1[b], l0[i]), lhs, rhs

    report = CheckReport('MatchedPair')
    for (name, anchor), cases in zip(MATCHED_PAIR_EQUATIONS, (eq1(), eq2(), eq3(), eq4(), eq5(), eq6())):
        report.scan(name, cases, anchor=anchor, full=full)
    return report


def standard_matched_pair(L: StrictLie2Algebra, c: CocyclePair) -> Tuple[StrictLie2Algebra, StrictRep, StrictRep]:
    """(𝒢, 𝒢*; ad*, 𝔞𝔡*)，要求对偶括号反对称"""
    dual = dual_lie2(L, c, check=False)
    return dual, coadjoint_rep(L), coadjoint_rep(dual)


# ---------------------------------------------------------------------------
# Manin 三元组
# ---------------------------------------------------------------------------

def standard_form(n0: int, n1: int) -> np.ndarray:
    """
    𝒢⊕𝒢* 上的标准双线性型 S（按 x, h*, h, x* 排列）
    S(x, y*) = ⟨x, y*⟩，S(h, k*) = ⟨h, k*⟩，对称
    """
    N = 2 * (n0 + n1)
    S = zeros(N, N)
    off_hs, off_h, off_xs = n0, n0 + n1, n0 + 2 * n1
    for i in range(n0):
        S[i, off_xs + i] = S[off_xs + i, i] = 1
    for a in range(n1):
        S[off_hs + a, off_h + a] = S[off_h + a, off_hs + a] = 1
    return rationalize(S)


@dataclass(frozen=True, eq=False)
class ManinTripleData:
    """双 𝒢⊕𝒢* 与标准型 S"""
    algebra: StrictLie2Algebra
    form: np.ndarray
    base: StrictLie2Algebra
    dual: StrictLie2Algebra

    @property
    def n0(self) -> int:
        return self.base.n0

    @property
    def n1(self) -> int:
        return self.base.n1

    def halves(self) -> Tuple[List[int], List[int]]:
        """semidirect 全索引中 𝒢 与 𝒢* 的位置"""
        n0, n1 = self.n0, self.n1
        g = list(range(n0)) + list(range(n0 + n1, n0 + 2 * n1))
        gd = list(range(n0, n0 + n1)) + list(range(n0 + 2 * n1, 2 * (n0 + n1)))
        return g, gd


def build_double(L: StrictLie2Algebra, c: CocyclePair, require_cocycle: bool = True) -> ManinTripleData:
    """
    标准 Manin 三元组 (𝒢⊕𝒢*; 𝒢, 𝒢*)

    Raises:
        AxiomError: require_cocycle 为 True 且 (δ₀, δ₁) 不是 2-上闭链，或对偶括号不反对称
    """
    if require_cocycle:
        report = cocycle_report(L, c)
        if not report.passed:
            raise AxiomError(f"(δ₀, δ₁) 不是 2-上闭链: {report.failed()}")
    dual, ad_star, ad_star_dual = standard_matched_pair(L, c)
    K = direct_sum(L, dual, ad_star, ad_star_dual)
    logger.debug(f"[Manin] 构造双: K₀ 维数 {K.n0}, K₋₁ 维数 {K.n1}")
    return ManinTripleData(K, standard_form(L.n0, L.n1), L, dual)


def manin_from_double(K: StrictLie2Algebra, form, n0: int, n1: int) -> ManinTripleData:
    """
    由已写出的双（K₀ = (x, h*)，K₋₁ = (h, x*)）恢复 ManinTripleData
    两半直接从 K 的结构常数中截取，封闭性由 manin_check 检查
    """
    if (K.n0, K.n1) != (n0 + n1, n1 + n0):
        raise ShapeError(f"双的维数 {(K.n0, K.n1)} 与 (n0, n1) = {(n0, n1)} 不符")
    N = 2 * (n0 + n1)
    S = as_rational_array(form, (N, N))
    base = StrictLie2Algebra.from_arrays(
        K.D[:n0, :n1], K.bracket00[:n0, :n0, :n0], K.bracket01[:n0, :n1, :n1],
        labels0=K.space.labels0[:n0], labels_m1=K.space.labels_m1[:n1],
    )
    dual = StrictLie2Algebra.from_arrays(
        K.D[n0:, n1:], K.bracket00[n0:, n0:, n0:], K.bracket01[n0:, n1:, n1:],
        labels0=K.space.labels0[n0:], labels_m1=K.space.labels_m1[n1:],
    )
    return ManinTripleData(K, S, base, dual)


def manin_check(T: ManinTripleData, full: bool = False) -> CheckReport:
    """双的严格公理、S 的不变性、两半的迷向性与封闭性、S 非退化、对偶括号反对称"""
    report = CheckReport('Manin')
    report.merge(check_strict_axioms(T.algebra, full=full), prefix='double.')
    C = semidirect(T.algebra, check=False).structure
    S = T.form
    N = S.shape[0]
    n0, n1 = T.n0, T.n1
    K = T.algebra
    labels = K.space.labels0 + K.space.labels_m1
    degrees = [0] * K.n0 + [-1] * K.n1

    def invariance(signed: bool):
        for a in range(N):
            ad = C[a].T
            lhs = rationalize(ad.T @ S + S @ ad)
            if signed:
                # S([a,b],c) = -(-1)^{|a||b|} S(b,[a,c])
                signs = np.array([[(-1) ** (degrees[a] * degrees[b]) for _ in range(N)] for b in range(N)],
                                 dtype=object)
                lhs = rationalize(ad.T @ S + signs * (S @ ad))
            yield (labels[a],), lhs, zeros(N, N)

    unsigned = report.scan('s_invariance', invariance(False),
                           anchor='Manin triple: S([a,b],c) + S(b,[a,c]) = 0', full=full)
    signed = CheckReport('Signed').scan('s_invariance_signed', invariance(True))
    if signed.passed != unsigned.passed:
        logger.warning(f"[Manin] 带号与不带号的 S 不变性结论不同: unsigned={unsigned.passed}, signed={signed.passed}")
    report.record('s_invariance_signed', signed.passed, anchor='Manin triple: S invariance with Koszul sign',
                  witness=signed.witness, lhs=signed.lhs, rhs=signed.rhs, informational=True)

    g, gd = T.halves()
    report.scan('isotropy_g', (
        ((labels[a], labels[b]), S[a, b], 0) for a in g for b in g
    ), anchor='Manin triple: S vanishes on G')
    report.scan('isotropy_dual', (
        ((labels[a], labels[b]), S[a, b], 0) for a in gd for b in gd
    ), anchor='Manin triple: S vanishes on G*')
    report.record('nondegenerate', matrix_rank(S) == N, anchor='Manin triple: S nondegenerate')
    report.scan('subalgebra_g', (
        ((labels[a], labels[b]), C[a, b, gd], zeros(len(gd))) for a in g for b in g
    ), anchor='Manin triple: G closed under the double bracket')
    report.scan('subalgebra_dual', (
        ((labels[a], labels[b]), C[a, b, g], zeros(len(g))) for a in gd for b in gd
    ), anchor='Manin triple: G* closed under the double bracket')
    report.scan('dual_differential', (
        (('d*',), K.D[n0:, n1:], T.base.D.T) for _ in range(1)
    ), anchor='Manin triple: d restricted to G* is the transpose of d')
    return report


# ---------------------------------------------------------------------------
# r-矩阵与 CYBE
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RMatrixData:
    """r ∈ g₀⊗g₋₁ ⊕ g₋₁⊗g₀，𝔯 ∈ g₋₁⊗g₋₁，R = r - d⊗𝔯"""
    r: TensorElement
    frak_r: TensorElement

    def __post_init__(self):
        if set(self.r.nonzero_blocks()) - {'b0m', 'bm0'}:
            raise ShapeError("r 只能含 g₀⊗g₋₁ 与 g₋₁⊗g₀ 分量")
        if set(self.frak_r.nonzero_blocks()) - {'bmm'}:
            raise ShapeError("𝔯 只能含 g₋₁⊗g₋₁ 分量")
        if (self.r.n0, self.r.n1) != (self.frak_r.n0, self.frak_r.n1):
            raise ShapeError("r 与 𝔯 的维数不一致")

    @classmethod
    def of(cls, r: TensorElement, frak_r: Optional[TensorElement] = None) -> 'RMatrixData':
        return cls(r, frak_r if frak_r is not None else TensorElement.zero(r.n0, r.n1))

    def R(self, L) -> TensorElement:
        return self.r - d_tensor_deg0(L, self.frak_r)

    def satisfies_restriction(self, L) -> bool:
        return d_tensor_deg1(L, self.r).is_zero()


def _diagonal_action_matrix(ad: np.ndarray, T: np.ndarray) -> np.ndarray:
    """[α⊗1 + 1⊗α, T]"""
    return rationalize(ad @ T + T @ ad.T)


def _diagonal_action_cube(ad: np.ndarray, cube: np.ndarray) -> np.ndarray:
    t1 = np.tensordot(ad, cube, axes=(1, 0))
    t2 = np.tensordot(cube, ad, axes=(1, 1)).transpose(0, 2, 1)
    t3 = np.tensordot(cube, ad, axes=(2, 1))
    return rationalize(t1 + t2 + t3)


def yang_baxter_cube(C: np.ndarray, R: np.ndarray) -> np.ndarray:
    """[R₁₂,R₁₃] + [R₁₂,R₂₃] + [R₁₃,R₂₃]，按分量展开"""
    t12_13 = np.tensordot(np.tensordot(C, R, axes=(0, 0)), R, axes=(0, 0))
    t12_23 = np.tensordot(np.tensordot(R, C, axes=(1, 0)), R, axes=(1, 0))
    t13_23 = np.tensordot(np.tensordot(R, C, axes=(1, 0)), R, axes=(1, 1)).transpose(0, 2, 1)
    return rationalize(t12_13 + t12_23 + t13_23)


def _yang_baxter_conditions(report: CheckReport, C: np.ndarray, R: np.ndarray, labels: Sequence[str],
                            full: bool = False):
    N = C.shape[0]
    Rs = rationalize(R + R.T)
    report.scan('cond_a', (
        ((labels[a],), _diagonal_action_matrix(C[a].T, Rs), zeros(N, N)) for a in range(N)
    ), anchor='CYBE (a): [α⊗1 + 1⊗α, R + σ(R)] = 0', full=full)
    cube = yang_baxter_cube(C, R)
    report.scan('cond_b', (
        ((labels[a],), _diagonal_action_cube(C[a].T, cube), zeros(N, N, N)) for a in range(N)
    ), anchor='CYBE (b): diagonal action on [R12,R13] + [R13,R23] + [R12,R23] vanishes', full=full)
    report.scan('genuine_cybe', [(('R',), cube, zeros(N, N, N))],
                anchor='CYBE: [R12,R13] + [R13,R23] + [R12,R23] = 0', informational=True)
    return cube


def cybe_check(L: StrictLie2Algebra, rm: RMatrixData, full: bool = False) -> CheckReport:
    """
    二分次 CYBE：括号取半直积 Lie 代数 g₀ ⋉ g₋₁

    cond_a: R + σ(R) 不变
    cond_b: Yang–Baxter 立方元在对角作用下不变
    cond_c: (d⊗1 - 1⊗d)r = 0
    """
    if (rm.r.n0, rm.r.n1) != (L.n0, L.n1):
        raise ShapeError("r 的维数与代数不符")
    g = semidirect(L, check=False)
    R = rm.R(L).full()
    report = CheckReport('CYBE')
    _yang_baxter_conditions(report, g.structure, R, g.labels, full=full)
    dr = d_tensor_deg1(L, rm.r)
    report.scan('cond_c', [(('r',), dr.b00, zeros(L.n0, L.n0))], anchor='CYBE (c): d⊗r = 0')
    if not report.passed:
        logger.warning(f"[CYBE] 未通过: {report.failed()}")
    return report


def signed_exchange_changes_verdict(L: StrictLie2Algebra, rm: RMatrixData) -> bool:
    """用带 Koszul 符号的 σ 重算 cond_a，返回结论是否改变"""
    g = semidirect(L, check=False)
    R = rm.R(L)
    N = g.dim
    plain = R.full() + exchange(R).full()
    signed = R.full() + exchange(R, koszul=True).full()
    verdict = [all(is_zero(_diagonal_action_matrix(g.structure[a].T, rationalize(T))) for a in range(N))
               for T in (plain, signed)]
    if verdict[0] != verdict[1]:
        logger.warning("[CYBE] 带号交换算子改变了 cond_a 的结论")
    return verdict[0] != verdict[1]


def classical_cybe_check(g: LieAlgebra, R, full: bool = False) -> CheckReport:
    """经典 Lie 代数上的两个条件（g₋₁ = 0 的情形）"""
    R = as_rational_array(R, (g.dim, g.dim))
    report = CheckReport('ClassicalCYBE')
    _yang_baxter_conditions(report, g.structure, R, g.labels, full=full)
    return report


def classical_dual_lie(g: LieAlgebra, r) -> LieAlgebra:
    """δ(x) = [x⊗1 + 1⊗x, r] 转置得到的 g* 上的括号（未必满足 Jacobi）"""
    r = as_rational_array(r, (g.dim, g.dim))
    n = g.dim
    structure = zeros(n, n, n)
    for k in range(n):
        structure[:, :, k] = _diagonal_action_matrix(g.ad(k), r)
    return LieAlgebra(structure, tuple(f"{s}*" for s in g.labels))


def exact_deltas(L: StrictLie2Algebra, r: TensorElement, frak_r: Optional[TensorElement] = None) -> CocyclePair:
    """δ₀(x) = [x⊗1 + 1⊗x, R]，δ₁(h) = [h⊗1 + 1⊗h, R]，R = r - d⊗𝔯"""
    rm = RMatrixData.of(r, frak_r)
    R = rm.R(L)
    rho = tensor_adjoint_rep(L)
    vec = tensor_to_level(R, 1)
    delta0 = tuple(level_to_tensor(L.n0, L.n1, rho.mu0_at(1, unit(L.n0, i)) @ vec, 1) for i in range(L.n0))
    delta1 = tuple(level_to_tensor(L.n0, L.n1, rho.mu1_at(0, unit(L.n1, a)) @ vec, 0) for a in range(L.n1))
    return CocyclePair(L.n0, L.n1, delta0, delta1)


def coboundary_bialgebra_verdict(L: StrictLie2Algebra, rm: RMatrixData) -> bool:
    """(𝒢; exact_deltas) 是严格 Lie 2-双代数且 r 满足限制条件"""
    if not rm.satisfies_restriction(L):
        return False
    return StrictLie2Bialgebra(L, exact_deltas(L, rm.r, rm.frak_r)).invariants().passed


# ---------------------------------------------------------------------------
# 一般的 (r, φ)
# ---------------------------------------------------------------------------

class _RBrackets:
    """由 r 与 φ 给出的对偶括号公式"""

    def __init__(self, L: StrictLie2Algebra, r: TensorElement, phi):
        self.L = L
        self.r = r
        self.phi = [t.bmm for t in phi]
        self.D = L.D

    def r_of_dual0(self, u):
        """r(h*) ∈ g₀"""
        return rationalize(self.r.bm0.T @ u)

    def r_of_dual1(self, w):
        """r(x*) ∈ g₋₁"""
        return rationalize(self.r.b0m.T @ w)

    def coad0(self, x, u):
        """ad*_x 作用在 g₋₁* 上"""
        return rationalize(-self.L.rho(x).T @ u)

    def coad0_on1(self, x, w):
        """ad*_x 作用在 g₀* 上"""
        return rationalize(-self.L.ad0(x).T @ w)

    def coad1(self, h, u):
        """ad₁*(h): g₋₁* → g₀*"""
        return rationalize(-self.L.ad1(h).T @ u)

    def br_mm(self, u, v):
        return self.coad0(self.r_of_dual0(u), v) - self.coad0(self.r_of_dual0(v), u)

    def br_m0(self, u, w):
        return self.coad0_on1(self.r_of_dual0(u), w) - self.coad1(self.r_of_dual1(w), u)

    def br_0m(self, w, u):
        return -self.br_m0(u, w)

    def phi_star(self, u, v):
        """φ*(h*⊗k*) ∈ g₀*"""
        out = zeros(len(self.phi))
        for i, P in enumerate(self.phi):
            out[i] = u @ P @ v
        return rationalize(out)

    def d_star(self, w):
        return rationalize(self.D.T @ w)


def r_dual_brackets(L: StrictLie2Algebra, r: TensorElement, phi=None) -> DualBrackets:
    """[h*,k*]* = [h*,k*]_r - d*φ*(h*⊗k*)，[h*,x*]* = [h*,x*]_r - φ*(h*⊗d*x*)"""
    rb = _RBrackets(L, r, phi_tensors(L, phi_cochain(L, phi)))
    n0, n1 = L.n0, L.n1
    mm = zeros(n1, n1, n1)
    m0 = zeros(n1, n0, n0)
    for a in range(n1):
        u = unit(n1, a)
        for b in range(n1):
            v = unit(n1, b)
            mm[a, b] = rb.br_mm(u, v) - rb.d_star(rb.phi_star(u, v))
        for i in range(n0):
            w = unit(n0, i)
            m0[a, i] = rb.br_m0(u, w) - rb.phi_star(u, rb.d_star(w))
    zm = -m0.transpose(1, 0, 2)
    return DualBrackets(rationalize(mm), rationalize(m0), rationalize(zm))


def general_r_check(L: StrictLie2Algebra, r: TensorElement, phi=None, full: bool = False) -> CheckReport:
    """
    一般 1-上链 (r, φ) 的对偶括号

    skew: r + σ(r) 不变且 φ 取值反对称
    jacobi_mm: g₋₁* 上的 Jacobi 恒等式
    jacobi_m0: g₋₁*, g₋₁*, g₀* 上的表示恒等式

    Raises:
        AxiomError: (d⊗1 - 1⊗d)r ≠ 0 或 d_ad φ ≠ 0
    """
    if not d_tensor_deg1(L, r).is_zero():
        raise AxiomError("(d⊗1 - 1⊗d)r ≠ 0，r 不满足限制条件")
    phi_c = phi_cochain(L, phi)
    if not d_mu_10(L, tensor_adjoint_rep(L), phi_c).is_zero():
        raise AxiomError("d_ad φ ≠ 0，φ 不满足限制条件")
    tensors = phi_tensors(L, phi_c)
    rb = _RBrackets(L, r, tensors)
    n0, n1 = L.n0, L.n1
    g = semidirect(L, check=False)
    N = g.dim
    rs = rationalize(r.full() + exchange(r).full())
    dual0 = [f"{s}*" for s in L.space.labels_m1]
    dual1 = [f"{s}*" for s in L.space.labels0]
    report = CheckReport('GeneralR')

    def skew_cases():
        for a in range(N):
            yield (g.labels[a],), _diagonal_action_matrix(g.structure[a].T, rs), zeros(N, N)
        for i, t in enumerate(tensors):
            yield (L.space.labels0[i],), t.bmm, -t.bmm.T

    report.scan('skew', skew_cases(), anchor='skew dual brackets: r + σ(r) invariant and φ* skew', full=full)

    def B(u, v):
        return rb.br_mm(u, v)

    def dphi(u, v):
        return rb.d_star(rb.phi_star(u, v))

    def jacobi_mm():
        for a in range(n1):
            for b in range(a + 1, n1):
                for c in range(b + 1, n1):
                    total = zeros(n1)
                    h, k, l = unit(n1, a), unit(n1, b), unit(n1, c)
                    for p, q, s in ((h, k, l), (k, l, h), (l, h, k)):
                        total = (total + B(B(p, q), s) - dphi(B(p, q), s)
                                 - B(dphi(p, q), s) + dphi(dphi(p, q), s))
                    yield (dual0[a], dual0[b], dual0[c]), rationalize(total), zeros(n1)

    report.scan('jacobi_mm', jacobi_mm(), anchor='dual Jacobi identity on g_{-1}*', full=full)

    def m0(u, w):
        return rb.br_m0(u, w)

    def zm(w, u):
        return rb.br_0m(w, u)

    def ps(u, v):
        return rb.phi_star(u, v)

    def ds(w):
        return rb.d_star(w)

    def jacobi_m0():
        for a in range(n1):
            for b in range(a + 1, n1):
                for i in range(n0):
                    h, k, x = unit(n1, a), unit(n1, b), unit(n0, i)
                    total = (m0(B(h, k), x) + zm(m0(k, x), h) + zm(zm(x, h), k)
                             - ps(B(h, k), ds(x)) - ps(ds(m0(k, x)), h) - ps(ds(zm(x, h)), k)
                             - m0(dphi(h, k), x) - zm(ps(k, ds(x)), h) - zm(ps(ds(x), h), k)
                             + ps(dphi(h, k), ds(x)) + ps(ds(ps(k, ds(x))), h) + ps(ds(ps(ds(x), h)), k))
                    yield (dual0[a], dual0[b], dual1[i]), rationalize(total), zeros(n0)

    report.scan('jacobi_m0', jacobi_m0(), anchor='dual representation identity on g_{-1}*, g_{-1}*, g_0*',
                full=full)
    return report


# ---------------------------------------------------------------------------
# 三种等价判定
# ---------------------------------------------------------------------------

def triangle_verdicts(L: StrictLie2Algebra, c: CocyclePair) -> Dict[str, bool]:
    """
    (i) 2-上闭链 且 对偶括号反对称 且 𝒢* 严格
    (ii) 对偶括号反对称 且 𝒢* 严格 且 (𝒢, 𝒢*; ad*, 𝔞𝔡*) 是匹配对
    (iii) 标准双通过 Manin 检查
    """
    skew = dual_skew_report(L, c).passed
    dual_strict = False
    if skew:
        dual = dual_lie2(L, c, check=False)
        dual_strict = check_strict_axioms(dual).passed
    cocycle = cocycle_report(L, c).passed
    verdicts = {'cocycle': cocycle and skew and dual_strict, 'matched_pair': False, 'manin': False}
    if skew and dual_strict:
        try:
            verdicts['matched_pair'] = matched_pair_check(L, dual, coadjoint_rep(L), coadjoint_rep(dual)).passed
        except AxiomError as e:
            logger.debug(f'[Manin] 余伴随表示不是严格表示: {e}')
    if skew:
        verdicts['manin'] = manin_check(build_double(L, c, require_cocycle=False)).passed
    if len(set(verdicts.values())) != 1:
        logger.warning(f"[Manin] 三种判定不一致: {verdicts}")
    return verdicts


MUTATIONS = ('skew_perturb_delta0', 'skew_perturb_delta1', 'sign_flip', 'break_skew')


def mutate_cocycle(c: CocyclePair, rng: random.Random, kind: str) -> Optional[CocyclePair]:
    """
    扰动 (δ₀, δ₁)；无法施加该扰动时返回 None

    skew_perturb_*: 保持对偶括号反对称的扰动
    sign_flip: 把一个非零的 δ 值取反
    break_skew: 破坏反对称
    """
    n0, n1 = c.n0, c.n1
    delta0, delta1 = list(c.delta0), list(c.delta1)
    t = to_fraction(rng.choice([-2, -1, 1, 2]))
    if kind == 'skew_perturb_delta0':
        if not (n0 and n1):
            return None
        i, j, a = rng.randrange(n0), rng.randrange(n0), rng.randrange(n1)
        b0m = delta0[i].b0m.copy()
        bm0 = delta0[i].bm0.copy()
        b0m[j, a] += t
        bm0[a, j] -= t
        delta0[i] = TensorElement.from_blocks(n0, n1, b0m=b0m, bm0=bm0)
    elif kind == 'skew_perturb_delta1':
        if n1 < 2:
            return None
        a = rng.randrange(n1)
        b, cc = rng.sample(range(n1), 2)
        bmm = delta1[a].bmm.copy()
        bmm[b, cc] += t
        bmm[cc, b] -= t
        delta1[a] = TensorElement.from_blocks(n0, n1, bmm=bmm)
    elif kind == 'sign_flip':
        nonzero = [('0', i) for i, v in enumerate(delta0) if not v.is_zero()] + \
                  [('1', a) for a, v in enumerate(delta1) if not v.is_zero()]
        if not nonzero:
            return None
        which, idx = rng.choice(nonzero)
        if which == '0':
            delta0[idx] = -delta0[idx]
        else:
            delta1[idx] = -delta1[idx]
    elif kind == 'break_skew':
        if not (n0 and n1):
            return None
        i, j, a = rng.randrange(n0), rng.randrange(n0), rng.randrange(n1)
        b0m = delta0[i].b0m.copy()
        b0m[j, a] += t
        delta0[i] = TensorElement.from_blocks(n0, n1, b0m=b0m, bm0=delta0[i].bm0)
    else:
        raise ValueError(f"未知的扰动类型: {kind}")
    return CocyclePair(n0, n1, tuple(delta0), tuple(delta1))


def triangle_corpus(bases: Sequence[Tuple[str, StrictLie2Algebra, CocyclePair]], seed: int = 0,
                    mutations_per_base: int = 8) -> List[Tuple[str, StrictLie2Algebra, CocyclePair]]:
    """
    原始实例 + 每个实例若干扰动 + 反对称 𝔯 给出的上边界

    Args:
        bases: (名称, 代数, 上闭链) 列表
        seed: 随机种子
        mutations_per_base: 每个原始实例生成的扰动个数
    """
    rng = random.Random(seed)
    corpus = []
    for name, L, c in bases:
        corpus.append((name, L, c))
        if L.n1 >= 2:
            a, b = rng.sample(range(L.n1), 2)
            bmm = zeros(L.n1, L.n1)
            bmm[a, b], bmm[b, a] = 1, -1
            frak_r = TensorElement.from_blocks(L.n0, L.n1, bmm=bmm)
            shifted = exact_deltas(L, TensorElement.zero(L.n0, L.n1), frak_r)
            corpus.append((f"{name}+dr", L, c + shifted))
        for k in range(mutations_per_base):
            kind = MUTATIONS[k % len(MUTATIONS)]
            mutated = mutate_cocycle(c, rng, kind)
            if mutated is not None:
                corpus.append((f"{name}~{kind}{k}", L, mutated))
    logger.debug(f"[Manin] 生成语料 {len(corpus)} 个实例 (seed={seed})")
    return corpus


R_MUTATIONS = ('b0m', 'bm0')


def mutate_r(r: TensorElement, rng: random.Random) -> TensorElement:
    """在 r 的 g₀⊗g₋₁ 或 g₋₁⊗g₀ 块上改动一个系数（改动量非零）"""
    block = rng.choice(R_MUTATIONS)
    data = getattr(r, block).copy()
    idx = tuple(rng.randrange(s) for s in data.shape)
    data[idx] += to_fraction(rng.choice([-2, -1, 1, 2]))
    blocks = {'b0m': r.b0m, 'bm0': r.bm0}
    blocks[block] = data
    return TensorElement.from_blocks(r.n0, r.n1, **blocks)


def r_mutation_corpus(bases: Sequence[Tuple[str, StrictLie2Algebra, TensorElement]], seed: int = 0,
                      mutations_per_base: int = 8) -> List[Tuple[str, StrictLie2Algebra, RMatrixData]]:
    """
    CYBE 语料：原始 r + 每个 r 的若干单系数扰动，扰动实例的名称带 '~'

    Args:
        bases: (名称, 代数, r) 列表
        seed: 随机种子
        mutations_per_base: 每个 r 的扰动个数
    """
    rng = random.Random(seed)
    corpus = []
    for name, L, r in bases:
        corpus.append((name, L, RMatrixData.of(r)))
        for k in range(mutations_per_base):
            corpus.append((f"{name}~{k}", L, RMatrixData.of(mutate_r(r, rng))))
    logger.debug(f"[CYBE] 生成语料 {len(corpus)} 个实例 (seed={seed})")
    return corpus


# ---------------------------------------------------------------------------
# 同态
# ---------------------------------------------------------------------------

def bialgebra_homomorphism_report(f0, f1, B: StrictLie2Bialgebra, B2: StrictLie2Bialgebra) -> CheckReport:
    """
    (f₁⊗f₀ + f₀⊗f₁)δ₀(x) = ε₀(f₀x)，(f₁⊗f₁)δ₁(h) = ε₁(f₁h)
    """
    F0 = as_rational_array(f0.matrix if hasattr(f0, 'matrix') else f0)
    F1 = as_rational_array(f1.matrix if hasattr(f1, 'matrix') else f1)
    report = CheckReport('BialgebraHom')
    report.merge(homomorphism_report(F0, F1, B.base, B2.base))
    L = B.base
    eps0, eps1 = B2.cocycle.delta0, B2.cocycle.delta1

    def delta0_cases():
        for j, t in enumerate(B.cocycle.delta0):
            lhs_0m = rationalize(F0 @ t.b0m @ F1.T)
            lhs_m0 = rationalize(F1 @ t.bm0 @ F0.T)
            rhs = TensorElement.zero(B2.base.n0, B2.base.n1)
            for i in range(B2.base.n0):
                if F0[i, j] != 0:
                    rhs = rhs + eps0[i].scale(F0[i, j])
            yield ((L.space.labels0[j],), np.concatenate([lhs_0m.flatten(), lhs_m0.flatten()]),
                   np.concatenate([rhs.b0m.flatten(), rhs.bm0.flatten()]))

    def delta1_cases():
        for b, t in enumerate(B.cocycle.delta1):
            lhs = rationalize(F1 @ t.bmm @ F1.T)
            rhs = zeros(B2.base.n1, B2.base.n1)
            for a in range(B2.base.n1):
                if F1[a, b] != 0:
                    rhs = rhs + eps1[a].bmm * F1[a, b]
            yield (L.space.labels_m1[b],), lhs, rationalize(rhs)

    report.scan('cobracket0', delta0_cases(), anchor='bialgebra homomorphism: (f1⊗f0 + f0⊗f1)δ0 = ε0 f0')
    report.scan('cobracket1', delta1_cases(), anchor='bialgebra homomorphism: (f1⊗f1)δ1 = ε1 f1')
    return report


def check_bialgebra_homomorphism(f0, f1, B: StrictLie2Bialgebra, B2: StrictLie2Bialgebra) -> bool:
    return bialgebra_homomorphism_report(f0, f1, B, B2).passed


def manin_homomorphism_report(F0, F1, T: ManinTripleData, T2: ManinTripleData) -> CheckReport:
    """
    双之间的保次映射：严格同态、保持 S、把 𝒢 映到 𝒢'、𝒢* 映到 𝒢'*

    Args:
        F0: K₀ → K₀' 的矩阵
        F1: K₋₁ → K₋₁' 的矩阵
    """
    F0 = as_rational_array(F0, (T2.algebra.n0, T.algebra.n0))
    F1 = as_rational_array(F1, (T2.algebra.n1, T.algebra.n1))
    report = CheckReport('ManinHom')
    report.merge(homomorphism_report(F0, F1, T.algebra, T2.algebra))
    K0, K1 = T.algebra.n0, T.algebra.n1
    F = zeros(T2.form.shape[0], T.form.shape[0])
    F[:T2.algebra.n0, :K0] = F0
    F[T2.algebra.n0:, K0:] = F1
    report.scan('preserves_form', [(('S',), rationalize(F.T @ T2.form @ F), T.form)],
                anchor='Manin triple homomorphism: S\'(Fa, Fb) = S(a, b)')
    g, gd = T.halves()
    g2, gd2 = T2.halves()
    report.scan('preserves_halves', (
        ((T.algebra.space.label(a),), F[np.ix_(target, [a])], zeros(len(target), 1))
        for src, target in ((g, gd2), (gd, g2)) for a in src
    ), anchor='Manin triple homomorphism: halves map to halves')
    return report


def check_manin_homomorphism(F0, F1, T: ManinTripleData, T2: ManinTripleData) -> bool:
    return manin_homomorphism_report(F0, F1, T, T2).passed


def d_ad_phi(L: StrictLie2Algebra, frak_r: TensorElement):
    """φ = d_ad 𝔯（(n0, n1, n1) 数组）"""
    phi = d_ad(L, frak_r)
    return rationalize(phi.data.reshape(L.n0, L.n1, L.n1))
