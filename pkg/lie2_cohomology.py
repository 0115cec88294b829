"""
严格表示的广义 Chevalley–Eilenberg 微分 D = d̂ + d_μ + ∂̂（低次上链）
2-上闭链 (δ₀, δ₁) 的检查与上边界 D(r, φ)

上链 Cochain(p, q, s) 是 (∧ᵖg₀)⊗(Symᑫg₋₁) → V_s 的多线性映射，
数据数组的轴依次为 p 个 g₀ 槽、q 个 g₋₁ 槽、V_s
"""

import itertools
import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from lie2_core import (
    AxiomError, CheckReport, DegreeError, LinMap, ShapeError, TensorElement,
    arrays_equal, as_rational_array, d_tensor_deg1, is_zero, rationalize, unit, zeros,
)
from strict_lie2 import StrictLie2Algebra, StrictRep, adjoint_rep, tensor_rep

logger = logging.getLogger(__name__)

# g₋₁ 槽交换时的符号（+1：无符号对称化）
SYM_SLOT_SIGN = 1

# apply_D 接受的最大 p + q
MAX_ARITY = 3

Key = Tuple[int, int, int]


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class Cochain:
    """
    双次数 (p, q)、取值在 V_s 的上链

    g₀ 槽反对称，g₋₁ 槽在交换下乘 SYM_SLOT_SIGN
    """
    p: int
    q: int
    s: int
    data: np.ndarray

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise DegreeError(f"上链双次数必须非负: {(self.p, self.q)}")
        data = self.data
        if not (isinstance(data, np.ndarray) and data.dtype == object):
            data = as_rational_array(data)
        if data.ndim != self.p + self.q + 1:
            raise ShapeError(f"上链 ({self.p},{self.q}) 需要 {self.p + self.q + 1} 维数组, 实际 {data.ndim}")
        object.__setattr__(self, 'data', data)
        for k in range(self.p - 1):
            if not arrays_equal(data, -np.swapaxes(data, k, k + 1)):
                raise AxiomError(f"上链在 g₀ 槽 {k}, {k + 1} 上不反对称")
        for k in range(self.p, self.p + self.q - 1):
            if not arrays_equal(data, SYM_SLOT_SIGN * np.swapaxes(data, k, k + 1)):
                raise AxiomError(f"上链在 g₋₁ 槽 {k}, {k + 1} 上不满足对称性")

    @classmethod
    def zero(cls, p: int, q: int, s: int, n0: int, n1: int, dim: int) -> 'Cochain':
        return cls(p, q, s, zeros(*((n0,) * p + (n1,) * q + (dim,))))

    @classmethod
    def symmetrize(cls, p: int, q: int, s: int, raw) -> 'Cochain':
        """把任意数组投影为合法上链（g₀ 槽反对称化，g₋₁ 槽对称化）"""
        raw = as_rational_array(raw)
        out = zeros(*raw.shape)
        rest = list(range(p + q, raw.ndim))
        for perm0 in itertools.permutations(range(p)):
            for perm1 in itertools.permutations(range(p, p + q)):
                sign = _permutation_sign(perm0) * (SYM_SLOT_SIGN ** (_permutation_sign(perm1) < 0))
                out = out + sign * np.transpose(raw, list(perm0) + list(perm1) + rest)
        return cls(p, q, s, rationalize(out / (factorial(p) * factorial(q))))

    @property
    def key(self) -> Key:
        return (self.p, self.q, self.s)

    @property
    def arity(self) -> int:
        return self.p + self.q

    def evaluate(self, xs: Sequence, hs: Sequence) -> np.ndarray:
        """f(x_1..x_p, h_1..h_q)，按槽依次缩并"""
        if len(xs) != self.p or len(hs) != self.q:
            raise DegreeError(f"上链 ({self.p},{self.q}) 的参数个数错误")
        out = self.data
        for v in list(xs) + list(hs):
            out = np.tensordot(np.asarray(v, dtype=object), out, axes=(0, 0))
        return rationalize(out)

    def is_zero(self) -> bool:
        return is_zero(self.data)

    def __add__(self, other: 'Cochain') -> 'Cochain':
        if self.key != other.key:
            raise DegreeError(f"不同次数的上链不能相加: {self.key} 与 {other.key}")
        return Cochain(self.p, self.q, self.s, self.data + other.data)

    def __neg__(self) -> 'Cochain':
        return Cochain(self.p, self.q, self.s, -self.data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain) and self.key == other.key and arrays_equal(self.data, other.data)

    __hash__ = None


class CochainSum:
    """不同 (p, q, s) 分量的形式和"""

    def __init__(self, components: Optional[Dict[Key, Cochain]] = None):
        self.components: Dict[Key, Cochain] = {}
        for cochain in (components or {}).values():
            self.add(cochain)

    @classmethod
    def of(cls, *cochains: Cochain) -> 'CochainSum':
        out = cls()
        for c in cochains:
            out.add(c)
        return out

    def add(self, cochain: Optional[Cochain]) -> 'CochainSum':
        if cochain is None:
            return self
        if cochain.key in self.components:
            self.components[cochain.key] = self.components[cochain.key] + cochain
        else:
            self.components[cochain.key] = cochain
        return self

    def __getitem__(self, key: Key) -> Cochain:
        return self.components[tuple(key)]

    def get(self, key: Key) -> Optional[Cochain]:
        return self.components.get(tuple(key))

    def __contains__(self, key) -> bool:
        return tuple(key) in self.components

    def __iter__(self) -> Iterator[Cochain]:
        return iter(self.components[k] for k in sorted(self.components))

    def keys(self) -> List[Key]:
        return sorted(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components.values())

    def __repr__(self) -> str:
        nonzero = [k for k in self.keys() if not self.components[k].is_zero()]
        return f"CochainSum(keys={self.keys()}, nonzero={nonzero})"


# ---------------------------------------------------------------------------
# D 的四个分量
# ---------------------------------------------------------------------------

def _basis_args(L: StrictLie2Algebra, p: int, q: int):
    for xi in itertools.product(range(L.n0), repeat=p):
        for hi in itertools.product(range(L.n1), repeat=q):
            yield xi, hi, [unit(L.n0, i) for i in xi], [unit(L.n1, a) for a in hi]


def _build(L: StrictLie2Algebra, p: int, q: int, s: int, dim: int, value) -> Cochain:
    data = zeros(*((L.n0,) * p + (L.n1,) * q + (dim,)))
    for xi, hi, xs, hs in _basis_args(L, p, q):
        data[xi + hi] = value(xs, hs)
    return Cochain(p, q, s, data)


def hat_d(L: StrictLie2Algebra, rho: StrictRep, f: Cochain) -> Optional[Cochain]:
    """d̂f(x_1..x_{p-1}, h_1..h_{q+1}) = (-1)^p Σ_i f(x.., dh_i, h_1..ĥ_i..)"""
    if f.p == 0:
        return None
    sign = (-1) ** f.p
    dim = rho.dims[f.s]

    def value(xs, hs):
        total = zeros(dim)
        for i in range(len(hs)):
            total = total + f.evaluate(xs + [L.D @ hs[i]], hs[:i] + hs[i + 1:])
        return sign * total

    return _build(L, f.p - 1, f.q + 1, f.s, dim, value)


def hat_partial(rho: StrictRep, f: Cochain) -> Optional[Cochain]:
    """∂̂f = (-1)^p ∂∘f"""
    if f.s + 1 >= rho.length:
        return None
    data = np.tensordot(f.data, rho.partial[f.s].T, axes=(-1, 0))
    return Cochain(f.p, f.q, f.s + 1, rationalize((-1) ** f.p * data))


def d_mu_10(L: StrictLie2Algebra, rho: StrictRep, f: Cochain) -> Cochain:
    """
    d_μ^(1,0)：增加一个 g₀ 槽
    Σ(-1)^{i+1} μ₀(x_i)f(x̂_i) + Σ_{i<j}(-1)^{i+j} f([x_i,x_j], ..) + Σ_{i,j}(-1)^i f(x̂_i, ..[x_i,h_j]..)
    """
    s = f.s
    dim = rho.dims[s]

    def value(xs, hs):
        total = zeros(dim)
        for k, x in enumerate(xs):
            rest = xs[:k] + xs[k + 1:]
            sign = (-1) ** k
            total = total + sign * (rho.mu0_at(s, x) @ f.evaluate(rest, hs))
            for j in range(len(hs)):
                moved = hs[:j] + [L.bracket_01(x, hs[j])] + hs[j + 1:]
                total = total - sign * f.evaluate(rest, moved)
        for k, l in itertools.combinations(range(len(xs)), 2):
            rest = [x for t, x in enumerate(xs) if t not in (k, l)]
            total = total + (-1) ** (k + l) * f.evaluate([L.bracket_00(xs[k], xs[l])] + rest, hs)
        return total

    return _build(L, f.p + 1, f.q, s, dim, value)


def d_mu_01(L: StrictLie2Algebra, rho: StrictRep, f: Cochain) -> Optional[Cochain]:
    """d_μ^(0,1)f(x.., h_1..h_{q+1}) = (-1)^p Σ_i μ₁(h_i) f(x.., ĥ_i)"""
    if f.s == 0:
        return None
    dim = rho.dims[f.s - 1]
    sign = (-1) ** f.p

    def value(xs, hs):
        total = zeros(dim)
        for i, h in enumerate(hs):
            total = total + rho.mu1_at(f.s - 1, h) @ f.evaluate(xs, hs[:i] + hs[i + 1:])
        return sign * total

    return _build(L, f.p, f.q + 1, f.s - 1, dim, value)


def apply_D(L: StrictLie2Algebra, rho: StrictRep, c: Union[Cochain, CochainSum]) -> CochainSum:
    """
    D = d̂ + d_μ + ∂̂，超出复形范围的分量略去

    Args:
        L: 严格 Lie 2-代数
        rho: L 的严格表示
        c: 单个上链或上链的形式和（每个分量 p + q ≤ 3）

    Returns:
        按 (p, q, s) 分组的 CochainSum
    """
    cochains = list(c) if isinstance(c, CochainSum) else [c]
    out = CochainSum()
    for f in cochains:
        if f.arity > MAX_ARITY:
            raise DegreeError(f"不支持的上链双次数 ({f.p},{f.q})，要求 p + q ≤ {MAX_ARITY}")
        if not 0 <= f.s < rho.length:
            raise DegreeError(f"取值次数 s={f.s} 超出表示的范围")
        expected = (L.n0,) * f.p + (L.n1,) * f.q + (rho.dims[f.s],)
        if f.data.shape != expected:
            raise ShapeError(f"上链形状 {f.data.shape} 与 {expected} 不符")
        out.add(hat_d(L, rho, f))
        out.add(hat_partial(rho, f))
        out.add(d_mu_10(L, rho, f))
        out.add(d_mu_01(L, rho, f))
    return out


# ---------------------------------------------------------------------------
# 𝒢[-1]⊗𝒢[-1] 上的张量伴随表示
# ---------------------------------------------------------------------------

def tensor_adjoint_rep(L: StrictLie2Algebra) -> StrictRep:
    """
    ad⊗ad，三个层次：
        V_0 = g₋₁⊗g₋₁（bmm），V_1 = g₀⊗g₋₁ ⊕ g₋₁⊗g₀（b0m 后接 bm0），V_2 = g₀⊗g₀
    其微分恰为 d⊗
    """
    ad = adjoint_rep(L)
    return tensor_rep(ad, ad)


def tensor_to_level(t: TensorElement, level: int) -> np.ndarray:
    if level == 0:
        return t.bmm.flatten()
    if level == 1:
        return np.concatenate([t.b0m.flatten(), t.bm0.flatten()])
    if level == 2:
        return t.b00.flatten()
    raise DegreeError(f"𝒢[-1]⊗𝒢[-1] 没有第 {level} 层")


def level_to_tensor(n0: int, n1: int, vector, level: int) -> TensorElement:
    v = np.asarray(vector, dtype=object)
    if level == 0:
        return TensorElement.from_blocks(n0, n1, bmm=v.reshape(n1, n1))
    if level == 1:
        k = n0 * n1
        return TensorElement.from_blocks(n0, n1, b0m=v[:k].reshape(n0, n1), bm0=v[k:].reshape(n1, n0))
    if level == 2:
        return TensorElement.from_blocks(n0, n1, b00=v.reshape(n0, n0))
    raise DegreeError(f"𝒢[-1]⊗𝒢[-1] 没有第 {level} 层")


# ---------------------------------------------------------------------------
# (δ₀, δ₁)
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CocyclePair:
    """
    δ₀: g₀ → g₀⊗g₋₁ ⊕ g₋₁⊗g₀，δ₁: g₋₁ → g₋₁⊗g₋₁

    delta0[i] 是 δ₀(x_i)（只含 b0m、bm0 块），delta1[a] 是 δ₁(h_a)（只含 bmm 块）
    """
    n0: int
    n1: int
    delta0: Tuple[TensorElement, ...]
    delta1: Tuple[TensorElement, ...]

    def __post_init__(self):
        object.__setattr__(self, 'delta0', tuple(self.delta0))
        object.__setattr__(self, 'delta1', tuple(self.delta1))
        if len(self.delta0) != self.n0 or len(self.delta1) != self.n1:
            raise ShapeError("δ₀、δ₁ 的个数与 g₀、g₋₁ 的维数不符")
        for t in self.delta0 + self.delta1:
            if (t.n0, t.n1) != (self.n0, self.n1):
                raise ShapeError("δ 的取值维数不一致")
        for i, t in enumerate(self.delta0):
            if not is_zero(t.b00) or not is_zero(t.bmm):
                raise DegreeError(f"δ₀(x{i + 1}) 只能含 g₀⊗g₋₁ 与 g₋₁⊗g₀ 分量")
        for a, t in enumerate(self.delta1):
            if t.nonzero_blocks() not in ([], ['bmm']):
                raise DegreeError(f"δ₁(h{a + 1}) 只能含 g₋₁⊗g₋₁ 分量")

    @classmethod
    def zero(cls, n0: int, n1: int) -> 'CocyclePair':
        return cls(n0, n1, tuple(TensorElement.zero(n0, n1) for _ in range(n0)),
                   tuple(TensorElement.zero(n0, n1) for _ in range(n1)))

    @classmethod
    def from_cochains(cls, L: StrictLie2Algebra, delta0: Cochain, delta1: Cochain) -> 'CocyclePair':
        if delta0.key != (1, 0, 1) or delta1.key != (0, 1, 0):
            raise DegreeError(f"δ₀ 应为 (1,0,1) 上链, δ₁ 应为 (0,1,0) 上链, 实际 {delta0.key}, {delta1.key}")
        return cls(L.n0, L.n1,
                   tuple(level_to_tensor(L.n0, L.n1, delta0.data[i], 1) for i in range(L.n0)),
                   tuple(level_to_tensor(L.n0, L.n1, delta1.data[a], 0) for a in range(L.n1)))

    def to_cochains(self) -> Tuple[Cochain, Cochain]:
        d0 = zeros(self.n0, 2 * self.n0 * self.n1)
        for i, t in enumerate(self.delta0):
            d0[i] = tensor_to_level(t, 1)
        d1 = zeros(self.n1, self.n1 * self.n1)
        for a, t in enumerate(self.delta1):
            d1[a] = tensor_to_level(t, 0)
        return Cochain(1, 0, 1, d0), Cochain(0, 1, 0, d1)

    def delta0_map(self) -> LinMap:
        c0, _ = self.to_cochains()
        return LinMap(c0.data.T.copy(), source=('g', 0), target=('GG', 1))

    def delta1_map(self) -> LinMap:
        _, c1 = self.to_cochains()
        return LinMap(c1.data.T.copy(), source=('g', -1), target=('GG', 0))

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.delta0 + self.delta1)

    def __add__(self, other: 'CocyclePair') -> 'CocyclePair':
        return CocyclePair(self.n0, self.n1,
                           tuple(a + b for a, b in zip(self.delta0, other.delta0)),
                           tuple(a + b for a, b in zip(self.delta1, other.delta1)))

    def __sub__(self, other: 'CocyclePair') -> 'CocyclePair':
        return CocyclePair(self.n0, self.n1,
                           tuple(a - b for a, b in zip(self.delta0, other.delta0)),
                           tuple(a - b for a, b in zip(self.delta1, other.delta1)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, CocyclePair) and (self.n0, self.n1) == (other.n0, other.n1)
                and all(a == b for a, b in zip(self.delta0 + self.delta1, other.delta0 + other.delta1)))

    __hash__ = None


def _require_shapes(L: StrictLie2Algebra, c: CocyclePair):
    if (c.n0, c.n1) != (L.n0, L.n1):
        raise ShapeError(f"(δ₀, δ₁) 的维数 {(c.n0, c.n1)} 与代数 {(L.n0, L.n1)} 不符")


# 2-上闭链条件对应 D(δ₀, δ₁) 的四个分量
COCYCLE_COMPONENTS = {
    (1, 0, 2): ('d_tensor_delta0', "cocycle: (d⊗1 - 1⊗d)δ0 = 0"),
    (0, 1, 1): ('delta0_d', "cocycle: δ0∘d = (d⊗1 + 1⊗d)δ1"),
    (2, 0, 1): ('ad_delta0', "cocycle: d_ad δ0(x,y) = 0"),
    (1, 1, 0): ('ad_delta_mixed', "cocycle: d_ad δ0(x,h) + d_ad δ1(x,h) = 0"),
}


def _component_cases(L: StrictLie2Algebra, component: Optional[Cochain]):
    if component is None:
        return
    labels0, labels1 = L.space.labels0, L.space.labels_m1
    p, q = component.p, component.q
    for idx in itertools.product(*(range(n) for n in component.data.shape[:-1])):
        value = component.data[idx]
        names = [labels0[i] for i in idx[:p]] + [labels1[a] for a in idx[p:p + q]]
        yield tuple(names), value, zeros(len(value))


def cocycle_report(L: StrictLie2Algebra, c: CocyclePair, full: bool = False) -> CheckReport:
    """逐条检查 (δ₀, δ₁) 是否为 ad⊗ad 的 2-上闭链"""
    _require_shapes(L, c)
    rho = tensor_adjoint_rep(L)
    result = apply_D(L, rho, CochainSum.of(*c.to_cochains()))
    report = CheckReport('Cocycle')
    for key, (name, anchor) in COCYCLE_COMPONENTS.items():
        report.scan(name, _component_cases(L, result.get(key)), anchor=anchor, full=full)
    leftover = [k for k in result.keys() if k not in COCYCLE_COMPONENTS and not result[k].is_zero()]
    if leftover:
        # 其余分量按次数恒为零
        logger.warning(f"[Cocycle] D(δ) 在意外的分量上非零: {leftover}")
    if not report.passed:
        logger.debug(f"[Cocycle] 未通过: {report.failed()}")
    return report


def is_2cocycle(L: StrictLie2Algebra, c: CocyclePair) -> bool:
    return cocycle_report(L, c).passed


def r_cochain(L: StrictLie2Algebra, r: TensorElement) -> Cochain:
    if r.nonzero_blocks() and set(r.nonzero_blocks()) - {'b0m', 'bm0'}:
        raise DegreeError("r 只能含 g₀⊗g₋₁ 与 g₋₁⊗g₀ 分量")
    return Cochain(0, 0, 1, tensor_to_level(r, 1))


def phi_cochain(L: StrictLie2Algebra, phi) -> Cochain:
    """φ: g₀ → g₋₁⊗g₋₁，接受 LinMap、TensorElement 列表或 (n0, n1, n1) 数组"""
    if phi is None:
        return Cochain.zero(1, 0, 0, L.n0, L.n1, L.n1 * L.n1)
    if isinstance(phi, LinMap):
        data = phi.matrix.T.copy()
    elif isinstance(phi, (list, tuple)) and all(isinstance(t, TensorElement) for t in phi):
        if len(phi) != L.n0:
            raise ShapeError("φ 的个数应等于 g₀ 的维数")
        for t in phi:
            if set(t.nonzero_blocks()) - {'bmm'}:
                raise DegreeError("φ(x) 只能含 g₋₁⊗g₋₁ 分量")
        data = zeros(L.n0, L.n1 * L.n1)
        for i, t in enumerate(phi):
            data[i] = tensor_to_level(t, 0)
    else:
        data = as_rational_array(phi, (L.n0, L.n1, L.n1)).reshape(L.n0, L.n1 * L.n1)
    if data.shape != (L.n0, L.n1 * L.n1):
        raise ShapeError(f"φ 的形状错误: {data.shape}")
    return Cochain(1, 0, 0, data)


def phi_tensors(L: StrictLie2Algebra, phi: Cochain) -> List[TensorElement]:
    return [level_to_tensor(L.n0, L.n1, phi.data[i], 0) for i in range(L.n0)]


def d_ad(L: StrictLie2Algebra, frak_r: TensorElement) -> Cochain:
    """d_ad 𝔯：x ↦ [x⊗1 + 1⊗x, 𝔯]，作为 (1,0,0) 上链"""
    if set(frak_r.nonzero_blocks()) - {'bmm'}:
        raise DegreeError("𝔯 只能含 g₋₁⊗g₋₁ 分量")
    rho = tensor_adjoint_rep(L)
    return d_mu_10(L, rho, Cochain(0, 0, 0, tensor_to_level(frak_r, 0)))


def coboundary(L: StrictLie2Algebra, r: TensorElement, phi=None) -> CocyclePair:
    """
    上边界 D(r, φ)

    δ₀(x) = [x⊗1 + 1⊗x, r] - d⊗φ(x)
    δ₁(h) = [h⊗1 + 1⊗h, r] - φ(dh)

    Args:
        L: 严格 Lie 2-代数
        r: 只含 b0m、bm0 块的张量
        phi: g₀ → g₋₁⊗g₋₁，缺省为 0

    Raises:
        AxiomError: (d⊗1 - 1⊗d)r ≠ 0 或 d_ad φ ≠ 0
    """
    if (r.n0, r.n1) != (L.n0, L.n1):
        raise ShapeError(f"r 的维数 {(r.n0, r.n1)} 与代数不符")
    if not d_tensor_deg1(L, r).is_zero():
        raise AxiomError("(d⊗1 - 1⊗d)r ≠ 0，r 不满足限制条件")
    rho = tensor_adjoint_rep(L)
    phi_c = phi_cochain(L, phi)
    result = apply_D(L, rho, CochainSum.of(r_cochain(L, r), phi_c))
    ad_phi = result.get((2, 0, 0))
    if ad_phi is not None and not ad_phi.is_zero():
        raise AxiomError("d_ad φ ≠ 0，φ 不满足限制条件")
    delta0 = result.get((1, 0, 1)) or Cochain.zero(1, 0, 1, L.n0, L.n1, rho.dims[1])
    delta1 = result.get((0, 1, 0)) or Cochain.zero(0, 1, 0, L.n0, L.n1, rho.dims[0])
    logger.debug(f"[Cocycle] 上边界 D(r, φ) 计算完成 (n0={L.n0}, n1={L.n1})")
    return CocyclePair.from_cochains(L, delta0, delta1)


def random_cochain(rng, L: StrictLie2Algebra, rho: StrictRep, p: int, q: int, s: int,
                   coefficient_range: int = 2) -> Cochain:
    """随机整数系数上链（用于 D² 检查）"""
    shape = (L.n0,) * p + (L.n1,) * q + (rho.dims[s],)
    size = int(np.prod(shape))
    raw = np.array([rng.randint(-coefficient_range, coefficient_range) for _ in range(size)],
                   dtype=object).reshape(shape)
    return Cochain.symmetrize(p, q, s, raw)
