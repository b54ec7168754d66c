"""Γ、权、导子与配对 ⟨∂,β⟩

Γ 取有限生成自由阿贝尔子群, 由 l2+l3 个有理线性无关的生成元给出,
群元素存为生成元上的整数坐标。环境向量长度为 l, 前 l1 个分量恒为 0。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exception import (
    AlgebraException,
    DegenerateGroupException,
    DimensionException,
    IndexRangeException,
)
from .linalg import nullspace, rank, solve
from .constants import MEMO_SIZE
from .utils import LimitedSizeDict, fmt_vector


@dataclass(frozen=True, slots=True)
class Signature:
    """(l1, l2, l3)"""

    l1: int
    l2: int
    l3: int

    def __post_init__(self):
        for name in ("l1", "l2", "l3"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise AlgebraException(f"{name} 必须是非负整数: {value!r}")
        if self.l < 1:
            raise AlgebraException(f"l=l1+l2+l3 必须为正, 实际 {self}")

    @property
    def l(self) -> int:
        return self.l1 + self.l2 + self.l3

    @property
    def n_t(self) -> int:
        """多重指标的长度 l1+l2"""
        return self.l1 + self.l2

    @property
    def n_gamma(self) -> int:
        """Γ 所在空间的维数 l2+l3"""
        return self.l2 + self.l3

    @property
    def wide_enough(self) -> bool:
        """l1+l2 >= 3 且 l2+l3 >= 3, 生成元与分类结果都要求这一条件"""
        return self.l1 + self.l2 >= 3 and self.l2 + self.l3 >= 3

    @property
    def d1(self) -> range:
        return range(1, self.l1 + 1)

    @property
    def d2(self) -> range:
        return range(self.l1 + 1, self.l1 + self.l2 + 1)

    @property
    def d3(self) -> range:
        return range(self.l1 + self.l2 + 1, self.l + 1)

    @property
    def t_range(self) -> range:
        """带 t 变量的方向 1..l1+l2"""
        return range(1, self.n_t + 1)

    @property
    def gamma_range(self) -> range:
        """α 可能非零的方向 l1+1..l"""
        return range(self.l1 + 1, self.l + 1)

    @property
    def directions(self) -> range:
        return range(1, self.l + 1)

    def check_direction(self, p: int) -> None:
        if not 1 <= p <= self.l:
            raise IndexRangeException(p, 1, self.l, "方向")

    def __str__(self) -> str:
        return f"({self.l1},{self.l2},{self.l3})"


@dataclass(frozen=True, slots=True, order=True)
class GroupElement:
    """Γ 中元素, 生成元上的整数坐标"""

    coords: tuple[int, ...]

    @classmethod
    def zero(cls, m: int) -> "GroupElement":
        return cls((0,) * m)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return group_add(self, other)

    def __neg__(self) -> "GroupElement":
        return group_neg(self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return group_add(self, group_neg(other))

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.coords) + "}"


@dataclass(frozen=True, slots=True)
class Weight:
    """F^{l2+l3} 中向量按长度 l 书写, 前 l1 个分量为 0; β、μ、η 都用它"""

    entries: tuple[Fraction, ...]

    @classmethod
    def of(cls, entries) -> "Weight":
        return cls(tuple(Fraction(e) for e in entries))

    @classmethod
    def zero(cls, l: int) -> "Weight":
        return cls((Fraction(0),) * l)

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, p: int) -> Fraction:
        """1 起始的分量"""
        return self.entries[p - 1]

    def __add__(self, other: "Weight") -> "Weight":
        if len(self) != len(other):
            raise DimensionException(len(self), len(other), "权")
        return Weight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.entries))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __str__(self) -> str:
        return fmt_vector(self.entries)


@dataclass(frozen=True, slots=True)
class Derivation:
    """Σ a_p ∂_p ∈ D"""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs) -> "Derivation":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def coordinate(cls, p: int, l: int) -> "Derivation":
        if not 1 <= p <= l:
            raise IndexRangeException(p, 1, l, "方向")
        return cls(tuple(Fraction(int(k == p)) for k in range(1, l + 1)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def at(self, p: int) -> Fraction:
        return self.coeffs[p - 1]

    def __add__(self, other: "Derivation") -> "Derivation":
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionException(len(self.coeffs), len(other.coeffs), "导子")
        return Derivation(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Fraction | int) -> "Derivation":
        return Derivation(tuple(c * a for a in self.coeffs))

    def __str__(self) -> str:
        return fmt_vector(self.coeffs)


@dataclass(frozen=True)
class GroupDescriptor:
    """Γ 的描述: 签名 + m 个生成元 (长度 l2+l3 的有理向量)"""

    signature: Signature
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        sig = self.signature
        gens = tuple(tuple(Fraction(x) for x in gen) for gen in self.generators)
        object.__setattr__(self, "generators", gens)
        for gen in gens:
            if len(gen) != sig.n_gamma:
                raise DimensionException(sig.n_gamma, len(gen), "生成元")
        r = rank(gens, sig.n_gamma)
        if r != len(gens):
            raise DegenerateGroupException(f"生成元线性相关: 秩 {r} < 个数 {len(gens)}")
        if r != sig.n_gamma:
            raise DegenerateGroupException(
                f"Γ 退化: 生成元的秩 {r} 不等于 l2+l3={sig.n_gamma}"
            )

    @classmethod
    def standard(cls, signature: Signature) -> "GroupDescriptor":
        """Γ = Z^{l2+l3}, 标准基作生成元"""
        n = signature.n_gamma
        return cls(signature, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def l(self) -> int:
        return self.signature.l

    @cached_property
    def _ambient_cache(self) -> dict[GroupElement, Weight]:
        return {}

    @cached_property
    def _memos(self) -> dict[str, LimitedSizeDict]:
        return {}

    def __getstate__(self) -> dict:
        """缓存不随 pickle 传给子进程"""
        return {"signature": self.signature, "generators": self.generators}

    def memo(self, name: str) -> LimitedSizeDict:
        """挂在描述符上的定长缓存, 供单项式级别的运算复用"""
        if (cache := self._memos.get(name)) is None:
            cache = self._memos[name] = LimitedSizeDict(max_size=MEMO_SIZE)
        return cache

    def zero(self) -> GroupElement:
        return GroupElement.zero(self.m)

    def element(self, coords) -> GroupElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.m:
            raise DimensionException(self.m, len(coords), "Γ 坐标")
        return GroupElement(coords)

    def ambient(self, g: GroupElement) -> Weight:
        """带缓存的 ambient_vector"""
        cache = self._ambient_cache
        if (w := cache.get(g)) is None:
            w = ambient_vector(g, self)
            cache[g] = w
        return w

    def check_weight(self, w: Weight, what: str = "权") -> None:
        """长度为 l 且前 l1 个分量为 0"""
        sig = self.signature
        if len(w) != sig.l:
            raise DimensionException(sig.l, len(w), what)
        if any(w.entries[: sig.l1]):
            raise AlgebraException(f"{what} {w} 的前 l1={sig.l1} 个分量必须为 0")


def ambient_vector(g: GroupElement, G: GroupDescriptor) -> Weight:
    """Σ coords_k·generator_k, 嵌入到长度 l (前 l1 个分量为 0)"""
    if len(g.coords) != G.m:
        raise DimensionException(G.m, len(g.coords), "Γ 坐标")
    sig = G.signature
    tail = [Fraction(0)] * sig.n_gamma
    for c, gen in zip(g.coords, G.generators):
        if c:
            for k, x in enumerate(gen):
                tail[k] += c * x
    return Weight((Fraction(0),) * sig.l1 + tuple(tail))


def pairing(d: Derivation, b: Weight, sig: Signature) -> Fraction:
    """⟨∂,β⟩ = Σ_{p=l1+1}^{l} a_p β_p"""
    if len(d.coeffs) != sig.l:
        raise DimensionException(sig.l, len(d.coeffs), "导子")
    if len(b) != sig.l:
        raise DimensionException(sig.l, len(b), "权")
    return sum(
        (d.coeffs[p] * b.entries[p] for p in range(sig.l1, sig.l)),
        Fraction(0),
    )


def kernel_basis(b: Weight, sig: Signature) -> list[Derivation]:
    """ker β = {∂ ∈ D : ⟨∂,β⟩ = 0} 的一组精确基"""
    if len(b) != sig.l:
        raise DimensionException(sig.l, len(b), "权")
    row = [Fraction(0)] * sig.l1 + list(b.entries[sig.l1 :])
    rows = [row] if any(row) else []
    return [Derivation(tuple(vec)) for vec in nullspace(rows, sig.l)]


def membership(mu: Weight, G: GroupDescriptor) -> GroupElement | None:
    """μ ∈ Γ 时返回整数坐标, 否则返回 None"""
    sig = G.signature
    if len(mu) != sig.l:
        raise DimensionException(sig.l, len(mu), "权")
    if any(mu.entries[: sig.l1]):
        return None
    sol = solve(G.generators, mu.entries[sig.l1 :])
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return GroupElement(tuple(int(x) for x in sol))


def group_add(a: GroupElement, b: GroupElement) -> GroupElement:
    if len(a.coords) != len(b.coords):
        raise DimensionException(len(a.coords), len(b.coords), "Γ 坐标")
    return GroupElement(tuple(x + y for x, y in zip(a.coords, b.coords)))


def group_neg(a: GroupElement) -> GroupElement:
    return GroupElement(tuple(-x for x in a.coords))
