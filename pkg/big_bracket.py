"""
大括号（分次 Poisson 括号）
在 Sym(V₀*[-1] ⊕ V₋₁*[-1] ⊕ V₀[-2] ⊕ V₋₁[-2]) 上精确计算，用来把 l₁、l₂、c₂ 等编码成 4 次元，
并以 ⟨t,t⟩ = 0 作为严格公理与上闭链条件的独立验证

生成元（按排序顺序）：
    dual0  ξ_i = x_i*  次数 1
    dual1  η_a = h_a*  次数 2
    prim0  e_i = x_i   次数 2
    prim1  h_a         次数 1
括号次数为 -3
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from lie2_core import (
    AxiomError, CheckReport, DegreeError, ShapeError, TensorElement, ZERO,
    fmt, to_fraction, zeros,
)
from lie2_cohomology import CocyclePair
from strict_lie2 import StrictLie2Algebra

logger = logging.getLogger(__name__)

KINDS = ('dual0', 'dual1', 'prim0', 'prim1')

# (l, k) → 生成元次数；只用到 (0, 1)
SHIFTS = {
    (0, 1): {'degrees': {'dual0': 1, 'dual1': 2, 'prim0': 2, 'prim1': 1}, 'element_degree': 4, 'bracket_degree': -3},
    (1, 0): {'degrees': {'dual0': 2, 'dual1': 3, 'prim0': 1, 'prim1': 0}, 'element_degree': 4, 'bracket_degree': -3},
    (0, 0): {'degrees': {'dual0': 1, 'dual1': 2, 'prim0': 1, 'prim1': 0}, 'element_degree': 3, 'bracket_degree': -2},
}

_SHIFT = SHIFTS[(0, 1)]
_DEGREE = tuple(_SHIFT['degrees'][k] for k in KINDS)
BRACKET_SHIFT = -_SHIFT['bracket_degree']
ELEMENT_DEGREE = _SHIFT['element_degree']

WORD_LENGTH_CAP = 6

DUAL0, DUAL1, PRIM0, PRIM1 = range(4)


class BBGenerator(NamedTuple):
    """生成元 (种类序号, 基编号)；元组顺序即规范顺序"""
    rank: int
    index: int

    @classmethod
    def of(cls, kind: str, index: int) -> 'BBGenerator':
        if kind not in KINDS:
            raise DegreeError(f"未知的生成元种类: {kind}")
        return cls(KINDS.index(kind), index)

    @property
    def kind(self) -> str:
        return KINDS[self.rank]

    @property
    def degree(self) -> int:
        return _DEGREE[self.rank]

    @property
    def is_dual(self) -> bool:
        return self.rank in (DUAL0, DUAL1)

    def label(self) -> str:
        name = 'x' if self.rank in (DUAL0, PRIM0) else 'h'
        return f"{name}{self.index + 1}{'*' if self.is_dual else ''}"


Word = Tuple[BBGenerator, ...]


def word_degree(word: Sequence[BBGenerator]) -> int:
    return sum(g.degree for g in word)


def _parity_sign(n: int) -> int:
    return -1 if n % 2 else 1


def normalize(word: Sequence[BBGenerator]) -> Tuple[int, Word]:
    """
    按 (种类, 编号) 排序，累计 Koszul 符号

    Returns:
        (符号, 规范单项式)；含重复奇生成元时符号为 0
    """
    w = list(word)
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j > 0 and w[j - 1] > w[j]:
            sign *= _parity_sign(w[j - 1].degree * w[j].degree)
            w[j - 1], w[j] = w[j], w[j - 1]
            j -= 1
    for a, b in zip(w, w[1:]):
        if a == b and a.degree % 2:
            return 0, ()
    return sign, tuple(w)


def monomial_label(word: Sequence[BBGenerator]) -> str:
    return '·'.join(g.label() for g in word) if word else '1'


class BBElement:
    """规范单项式 → 有理系数"""

    def __init__(self, terms: Optional[Dict[Word, Fraction]] = None):
        self.terms: Dict[Word, Fraction] = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Sequence[BBGenerator], object]]) -> 'BBElement':
        """把任意顺序的 (单词, 系数) 规范化后合并"""
        out: Dict[Word, Fraction] = {}
        for word, coef in pairs:
            sign, w = normalize(word)
            if sign == 0:
                continue
            out[w] = out.get(w, ZERO) + sign * to_fraction(coef)
        return cls(out)

    @classmethod
    def monomial(cls, *generators: BBGenerator, coef=1) -> 'BBElement':
        return cls.from_terms([(generators, coef)])

    @classmethod
    def zero(cls) -> 'BBElement':
        return cls()

    def __iter__(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, word: Sequence[BBGenerator]) -> Fraction:
        sign, w = normalize(word)
        return sign * self.terms.get(w, ZERO) if sign else ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'BBElement') -> 'BBElement':
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return BBElement(out)

    def __neg__(self) -> 'BBElement':
        return BBElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: 'BBElement') -> 'BBElement':
        return self + (-other)

    def scale(self, c) -> 'BBElement':
        c = to_fraction(c)
        return BBElement({w: c * v for w, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, BBElement) and self.terms == other.terms

    __hash__ = None

    def degrees(self) -> List[int]:
        return sorted({word_degree(w) for w in self.terms})

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs[0] == degree)

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def by_bidegree(self) -> Dict[Tuple[int, int], 'BBElement']:
        """按 (对偶生成元个数, 原生成元个数) 分组"""
        groups: Dict[Tuple[int, int], Dict[Word, Fraction]] = {}
        for w, c in self.terms.items():
            groups.setdefault(bidegree(w), {})[w] = c
        return {k: BBElement(v) for k, v in groups.items()}

    def __repr__(self) -> str:
        return f"BBElement({len(self.terms)} terms)"


def bidegree(word: Sequence[BBGenerator]) -> Tuple[int, int]:
    p = sum(1 for g in word if g.is_dual)
    return p, len(word) - p


def dump(element: BBElement) -> str:
    """每行 "单项式: 系数"，按规范顺序"""
    return '\n'.join(f"{monomial_label(w)}: {fmt(c)}" for w, c in element)


# ---------------------------------------------------------------------------
# 括号
# ---------------------------------------------------------------------------

def base_pairing(g: BBGenerator, h: BBGenerator) -> int:
    """⟨ξ_i, e_j⟩ = ⟨η_a, h_b⟩ = δ，反向为 -δ，其余为 0"""
    if g.index != h.index:
        return 0
    pair = (g.rank, h.rank)
    if pair in ((DUAL0, PRIM0), (DUAL1, PRIM1)):
        return 1
    if pair in ((PRIM0, DUAL0), (PRIM1, DUAL1)):
        return -1
    return 0


def _gen_word(g: BBGenerator, word: Word) -> List[Tuple[int, Word]]:
    """⟨g, u₁⋯u_n⟩ = Σ_i (-1)^{(|g|-3)|u_{<i}|} ⟨g,u_i⟩ u₁⋯û_i⋯u_n"""
    out = []
    shift = g.degree - BRACKET_SHIFT
    before = 0
    for i, u in enumerate(word):
        p = base_pairing(g, u)
        if p:
            out.append((p * _parity_sign(shift * before), word[:i] + word[i + 1:]))
        before += u.degree
    return out


def _word_gen(word: Word, g: BBGenerator) -> List[Tuple[int, Word]]:
    """⟨u, g⟩ = -(-1)^{(|u|-3)(|g|-3)} ⟨g, u⟩"""
    sign = -_parity_sign((word_degree(word) - BRACKET_SHIFT) * (g.degree - BRACKET_SHIFT))
    return [(sign * c, w) for c, w in _gen_word(g, word)]


def _word_word(u: Word, v: Word) -> List[Tuple[int, Word]]:
    """⟨u, v₁⋯v_m⟩ = Σ_j (-1)^{(|u|-3)|v_{<j}|} v_{<j} ⟨u,v_j⟩ v_{>j}"""
    out = []
    shift = word_degree(u) - BRACKET_SHIFT
    before = 0
    for j, g in enumerate(v):
        sign = _parity_sign(shift * before)
        for c, w in _word_gen(u, g):
            out.append((sign * c, v[:j] + w + v[j + 1:]))
        before += g.degree
    return out


def _check_lengths(u: BBElement, v: BBElement):
    lu, lv = u.max_length(), v.max_length()
    if lu > WORD_LENGTH_CAP or lv > WORD_LENGTH_CAP:
        raise DegreeError(f"单项式长度超过上限 {WORD_LENGTH_CAP}: {lu}, {lv}")
    if lu and lv and lu + lv - 2 > WORD_LENGTH_CAP:
        raise DegreeError(f"括号结果的长度 {lu + lv - 2} 超过上限 {WORD_LENGTH_CAP}")


def bb_bracket(u: BBElement, v: BBElement) -> BBElement:
    """
    大括号 ⟨u, v⟩：生成元上的自然配对按分次 Leibniz 法则延拓

    Raises:
        DegreeError: 单项式长度超过 WORD_LENGTH_CAP
    """
    _check_lengths(u, v)
    pairs = []
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            for c, w in _word_word(wu, wv):
                pairs.append((w, c * cu * cv))
    return BBElement.from_terms(pairs)


def _oracle_sort(word: Sequence[BBGenerator]) -> Tuple[int, Word]:
    """按逆序对计数求排序符号（只有奇-奇逆序贡献负号）"""
    word = list(word)
    odd_inversions = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j] and word[i].degree % 2 and word[j].degree % 2:
                odd_inversions += 1
            if word[i] == word[j] and word[i].degree % 2:
                return 0, ()
    return _parity_sign(odd_inversions), tuple(sorted(word))


def bb_bracket_oracle(u: BBElement, v: BBElement) -> BBElement:
    """
    直接展开：⟨u'a, bv'⟩ = u'⟨a,b⟩v'，a 移到 u 的末尾、b 移到 v 的开头时记录符号
    """
    _check_lengths(u, v)
    out: Dict[Word, Fraction] = {}
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            for i, a in enumerate(wu):
                after = sum(g.degree for g in wu[i + 1:])
                sign_u = _parity_sign(a.degree * after)
                rest_u = wu[:i] + wu[i + 1:]
                for j, b in enumerate(wv):
                    p = base_pairing(a, b)
                    if not p:
                        continue
                    before = sum(g.degree for g in wv[:j])
                    sign_v = _parity_sign(b.degree * before)
                    rest_v = wv[:j] + wv[j + 1:]
                    sign, w = _oracle_sort(rest_u + rest_v)
                    if sign == 0:
                        continue
                    out[w] = out.get(w, ZERO) + sign * sign_u * sign_v * p * cu * cv
    return BBElement(out)


def random_word(rng: random.Random, n0: int, n1: int, length: int) -> Word:
    """长度为 length 的随机生成元序列（未规范化）"""
    choices = [BBGenerator(r, i) for r in (DUAL0, PRIM0) for i in range(n0)] + \
              [BBGenerator(r, a) for r in (DUAL1, PRIM1) for a in range(n1)]
    return tuple(rng.choice(choices) for _ in range(length))


def random_monomial(rng: random.Random, n0: int, n1: int, max_length: int = 3) -> BBElement:
    """随机单项式（带随机非零系数；可能因重复奇生成元而为 0）"""
    length = rng.randint(1, max_length)
    return BBElement.monomial(*random_word(rng, n0, n1, length), coef=rng.choice([-2, -1, 1, 2, 3]))


# ---------------------------------------------------------------------------
# 编码
# ---------------------------------------------------------------------------

def _xi(i):
    return BBGenerator(DUAL0, i)


def _eta(a):
    return BBGenerator(DUAL1, a)


def _e(i):
    return BBGenerator(PRIM0, i)


def _h(a):
    return BBGenerator(PRIM1, a)


# 各分量的 (对偶个数, 原生成元个数)
COMPONENT_BIDEGREES = {
    'l1': (1, 1), 'l2': (2, 1), 'l3': (3, 1),
    'c2': (1, 2), 'c3': (1, 3), 't22': (2, 2),
}


@dataclass(frozen=True, eq=False)
class MasterElement:
    """t = l₁ + l₂ + l₃ + c₂ + c₃ + t₂₂，每个分量都是 4 次齐次元（c₁ = l₁）"""
    n0: int
    n1: int
    l1: BBElement
    l2: BBElement
    l3: BBElement
    c2: BBElement
    c3: BBElement
    t22: BBElement

    def __post_init__(self):
        for name, expected in COMPONENT_BIDEGREES.items():
            part: BBElement = getattr(self, name)
            if not part.is_homogeneous(ELEMENT_DEGREE):
                raise DegreeError(f"{name} 不是 {ELEMENT_DEGREE} 次齐次元: 次数 {part.degrees()}")
            wrong = [monomial_label(w) for w, _ in part if bidegree(w) != expected]
            if wrong:
                raise DegreeError(f"{name} 含有双次数不是 {expected} 的单项式: {wrong[:3]}")
            for w, _ in part:
                for g in w:
                    bound = self.n0 if g.rank in (DUAL0, PRIM0) else self.n1
                    if g.index >= bound:
                        raise ShapeError(f"{name} 的生成元 {g.label()} 超出维数")

    def l_part(self) -> BBElement:
        return self.l1 + self.l2 + self.l3

    def c_part(self) -> BBElement:
        return self.l1 + self.c2 + self.c3

    def total(self) -> BBElement:
        return self.l1 + self.l2 + self.l3 + self.c2 + self.c3 + self.t22

    def is_strict(self) -> bool:
        return self.l3.is_zero() and self.c3.is_zero() and self.t22.is_zero()

    def replace(self, **parts) -> 'MasterElement':
        fields = {name: getattr(self, name) for name in COMPONENT_BIDEGREES}
        fields.update(parts)
        return MasterElement(self.n0, self.n1, **fields)


def encode_algebra(L: StrictLie2Algebra) -> Tuple[BBElement, BBElement]:
    """
    l₁ = Σ D[i,a] η_a e_i
    l₂ = Σ_{i<j} c[i,j,k] ξ_iξ_j e_k + Σ b01[i,a,b] ξ_i η_a h_b

    Raises:
        AxiomError: g₀ 上的括号不反对称（无法用外代数编码）
    """
    n0, n1 = L.n0, L.n1
    c, b01, D = L.bracket00, L.bracket01, L.D
    for i in range(n0):
        for j in range(i, n0):
            for k in range(n0):
                if c[i, j, k] != -c[j, i, k]:
                    raise AxiomError(f"[x{i + 1},x{j + 1}] 不反对称，不能编码为 l₂")
    l1 = BBElement.from_terms(
        ((_eta(a), _e(i)), D[i, a]) for i in range(n0) for a in range(n1) if D[i, a] != 0
    )
    l2 = BBElement.from_terms(
        [((_xi(i), _xi(j), _e(k)), c[i, j, k])
         for i in range(n0) for j in range(i + 1, n0) for k in range(n0) if c[i, j, k] != 0]
        + [((_xi(i), _eta(a), _h(b)), b01[i, a, b])
           for i in range(n0) for a in range(n1) for b in range(n1) if b01[i, a, b] != 0]
    )
    return l1, l2


def encode_cocycle(c: CocyclePair) -> BBElement:
    """
    c₂ = Σ A_y[x,n] ξ_y e_x h_n + Σ_{a<b} K_m[a,b] η_m h_a h_b
    A_y = (b0m - bm0ᵀ)/2 取自 δ₀(x_y)，K_m = (bmm - bmmᵀ)/2 取自 δ₁(h_m)
    """
    n0, n1 = c.n0, c.n1
    half = Fraction(1, 2)
    pairs = []
    for y, t in enumerate(c.delta0):
        A = (t.b0m - t.bm0.T) * half
        for x in range(n0):
            for n in range(n1):
                if A[x, n] != 0:
                    pairs.append(((_xi(y), _e(x), _h(n)), A[x, n]))
    for m, t in enumerate(c.delta1):
        K = (t.bmm - t.bmm.T) * half
        for a in range(n1):
            for b in range(a + 1, n1):
                if K[a, b] != 0:
                    pairs.append(((_eta(m), _h(a), _h(b)), K[a, b]))
    return BBElement.from_terms(pairs)


def encode(L: StrictLie2Algebra, c: Optional[CocyclePair] = None, l3: Optional[BBElement] = None,
           c3: Optional[BBElement] = None, t22: Optional[BBElement] = None) -> MasterElement:
    """
    把 (𝒢; δ₀, δ₁) 与可选的高阶项编码为 MasterElement

    Args:
        L: 严格 Lie 2-代数
        c: (δ₀, δ₁)，缺省为 0
        l3, c3, t22: 4 次齐次的高阶项

    Raises:
        ShapeError: c 的维数与 L 不符
        DegreeError: 高阶项不齐次
    """
    if c is not None and (c.n0, c.n1) != (L.n0, L.n1):
        raise ShapeError(f"(δ₀, δ₁) 的维数 {(c.n0, c.n1)} 与代数 {(L.n0, L.n1)} 不符")
    l1, l2 = encode_algebra(L)
    c2 = encode_cocycle(c) if c is not None else BBElement.zero()
    return MasterElement(L.n0, L.n1, l1, l2, l3 or BBElement.zero(), c2, c3 or BBElement.zero(),
                         t22 or BBElement.zero())


def decode(t: MasterElement) -> CocyclePair:
    """c₂ → (δ₀, δ₁)，结果满足 bm0 = -b0mᵀ 与 bmm 反对称"""
    n0, n1 = t.n0, t.n1
    b0m = [zeros(n0, n1) for _ in range(n0)]
    bmm = [zeros(n1, n1) for _ in range(n1)]
    for w, coef in t.c2:
        g, a, b = w
        if g.rank == DUAL0:
            # ξ_y e_x h_n
            b0m[g.index][a.index, b.index] += coef
        else:
            # η_m h_a h_b，a < b
            bmm[g.index][a.index, b.index] += coef
            bmm[g.index][b.index, a.index] -= coef
    delta0 = tuple(TensorElement.from_blocks(n0, n1, b0m=m, bm0=-m.T) for m in b0m)
    delta1 = tuple(TensorElement.from_blocks(n0, n1, bmm=m) for m in bmm)
    return CocyclePair(n0, n1, delta0, delta1)


def decode_algebra(t: MasterElement) -> StrictLie2Algebra:
    """l₁, l₂ → (D, [·,·])"""
    n0, n1 = t.n0, t.n1
    D = zeros(n0, n1)
    for (eta, e), coef in t.l1:
        D[e.index, eta.index] += coef
    c = zeros(n0, n0, n0)
    b01 = zeros(n0, n1, n1)
    for w, coef in t.l2:
        if w[1].rank == DUAL0:
            i, j, k = w[0].index, w[1].index, w[2].index
            c[i, j, k] += coef
            c[j, i, k] -= coef
        else:
            b01[w[0].index, w[1].index, w[2].index] += coef
    return StrictLie2Algebra.from_arrays(D, c, b01)


# ---------------------------------------------------------------------------
# ⟨t, t⟩ = 0
# ---------------------------------------------------------------------------

MASTER_BIDEGREES = {
    (1, 1): '⟨l1,l1⟩ = 0',
    (2, 1): '⟨l1,l2⟩ = 0',
    (3, 1): '⟨l2,l2⟩ + 2⟨l1,l3⟩ = 0',
    (4, 1): '⟨l2,l3⟩ = 0',
    (5, 1): '⟨l3,l3⟩ = 0',
    (1, 2): '⟨c1,c2⟩ = 0',
    (1, 3): '⟨c2,c2⟩ + 2⟨c1,c3⟩ = 0',
    (1, 4): '⟨c2,c3⟩ = 0',
    (1, 5): '⟨c3,c3⟩ = 0',
    (2, 2): '⟨l2,c2⟩ + ⟨l1,t22⟩ = 0',
    (2, 3): '⟨l2,c3⟩ + ⟨t22,c2⟩ = 0',
    (3, 2): '⟨l3,c2⟩ + ⟨t22,l2⟩ = 0',
    (3, 3): '⟨l3,c3⟩ + ⟨t22,t22⟩ = 0',
    (2, 4): '⟨t22,c3⟩ = 0',
    (4, 2): '⟨t22,l3⟩ = 0',
}


def bidegree_name(key: Tuple[int, int]) -> str:
    return f"bidegree_{key[0]}_{key[1]}"


def _zero_cases(element: BBElement):
    for w, c in element:
        yield (monomial_label(w),), c, ZERO


def master_check(t: MasterElement, full: bool = False) -> CheckReport:
    """
    逐个双次数检查 ⟨t,t⟩ = 0，另记 l 部分与 c 部分各自的 ⟨·,·⟩ = 0

    Returns:
        CheckReport，bidegree_p_q 各一项，加上 l_only、c_only
    """
    square = bb_bracket(t.total(), t.total())
    groups = square.by_bidegree()
    unexpected = [k for k in groups if k not in MASTER_BIDEGREES]
    if unexpected:
        logger.warning(f"[BigBracket] ⟨t,t⟩ 出现意外的双次数: {unexpected}")
    report = CheckReport('Master')
    for key, anchor in MASTER_BIDEGREES.items():
        report.scan(bidegree_name(key), _zero_cases(groups.get(key, BBElement.zero())),
                    anchor=f"master equation: {anchor}", full=full)
    report.scan('l_only', _zero_cases(bb_bracket(t.l_part(), t.l_part())),
                anchor='master equation: ⟨l,l⟩ = 0 (L∞ structure on V)', full=full)
    report.scan('c_only', _zero_cases(bb_bracket(t.c_part(), t.c_part())),
                anchor='master equation: ⟨c,c⟩ = 0 (L∞ structure on the shifted dual)', full=full)
    if not report.passed:
        logger.debug(f"[BigBracket] ⟨t,t⟩ ≠ 0: {report.failed()}")
    return report


# 严格公理、上闭链条件分别对应的双次数
STRICT_BIDEGREES = ((1, 1), (2, 1), (3, 1))
COCYCLE_BIDEGREES = ((1, 2), (2, 2))


def mutate_algebra(L: StrictLie2Algebra, rng: random.Random) -> StrictLie2Algebra:
    """改动一个结构常数（g₀ 括号保持反对称）或 d 的一个元素"""
    n0, n1 = L.n0, L.n1
    t = to_fraction(rng.choice([-2, -1, 1, 2]))
    choices = ['D'] if n0 and n1 else []
    if n0 >= 2:
        choices.append('bracket00')
    if n0 and n1:
        choices.append('bracket01')
    if not choices:
        return L
    kind = rng.choice(choices)
    if kind == 'D':
        D = L.D.copy()
        D[rng.randrange(n0), rng.randrange(n1)] += t
        return L.replace(D=D)
    if kind == 'bracket00':
        c = L.bracket00.copy()
        i, j = rng.sample(range(n0), 2)
        k = rng.randrange(n0)
        c[i, j, k] += t
        c[j, i, k] -= t
        return L.replace(bracket00=c)
    b01 = L.bracket01.copy()
    b01[rng.randrange(n0), rng.randrange(n1), rng.randrange(n1)] += t
    return L.replace(bracket01=b01)


def strict_corpus(bases: Sequence[StrictLie2Algebra], seed: int = 0, size: int = 100) -> List[StrictLie2Algebra]:
    """原始代数加上随机扰动，共 size 个（循环使用 bases）"""
    rng = random.Random(seed)
    corpus = list(bases)
    k = 0
    while len(corpus) < size and bases:
        base = bases[k % len(bases)]
        mutated = base
        for _ in range(rng.randint(1, 2)):
            mutated = mutate_algebra(mutated, rng)
        corpus.append(mutated)
        k += 1
    logger.debug(f"[BigBracket] 生成代数语料 {len(corpus)} 个 (seed={seed})")
    return corpus
