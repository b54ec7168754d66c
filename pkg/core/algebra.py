"""交换结合代数 A(l1,l2,l3;Γ) = F[Γ × N^{l1+l2}]

基元 x^α t^i, 乘法 x^α t^i · x^β t^j = x^{α+β} t^{i+j},
导子 ∂_p(x^α t^i) = α_p x^α t^i + i_p x^α t^{i-1_[p]}。
"""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .exception import (
    AlgebraException,
    DescriptorMismatchException,
    DimensionException,
    IndexRangeException,
)
from .lattice import GroupDescriptor, GroupElement

Scalar = Fraction | int


@dataclass(frozen=True, slots=True, order=True)
class MultiIndex:
    """i ∈ N^{l1+l2}"""

    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise AlgebraException(f"多重指标分量必须非负: {self.entries}")

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls((0,) * n)

    @classmethod
    def unit(cls, p: int, n: int, times: int = 1) -> "MultiIndex":
        """times·1_[p]"""
        if not 1 <= p <= n:
            raise IndexRangeException(p, 1, n, "t 方向")
        return cls(tuple(times if k == p else 0 for k in range(1, n + 1)))

    @property
    def degree(self) -> int:
        """|i|"""
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, p: int) -> int:
        """1 起始; p > l1+l2 时按约定为 0"""
        return self.entries[p - 1] if p <= len(self.entries) else 0

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if len(self) != len(other):
            raise DimensionException(len(self), len(other), "多重指标")
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def lower(self, p: int) -> "MultiIndex | None":
        """i - 1_[p], 越出 N^{l1+l2} 时返回 None"""
        if self.at(p) <= 0:
            return None
        entries = list(self.entries)
        entries[p - 1] -= 1
        return MultiIndex(tuple(entries))

    def raised(self, p: int) -> "MultiIndex":
        """i + 1_[p]"""
        if not 1 <= p <= len(self.entries):
            raise IndexRangeException(p, 1, len(self.entries), "t 方向")
        entries = list(self.entries)
        entries[p - 1] += 1
        return MultiIndex(tuple(entries))

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    """x^α t^i, 内部排序键为 (Γ 坐标, 多重指标)"""

    alpha: GroupElement
    idx: MultiIndex

    @classmethod
    def one(cls, G: GroupDescriptor) -> "Monomial":
        return cls(G.zero(), MultiIndex.zero(G.signature.n_t))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            GroupElement(tuple(a + b for a, b in zip(self.alpha.coords, other.alpha.coords))),
            MultiIndex(tuple(a + b for a, b in zip(self.idx.entries, other.idx.entries))),
        )

    def check(self, G: GroupDescriptor) -> None:
        if len(self.alpha.coords) != G.m:
            raise DimensionException(G.m, len(self.alpha.coords), "Γ 坐标")
        if len(self.idx) != G.signature.n_t:
            raise DimensionException(G.signature.n_t, len(self.idx), "多重指标")


def same_group(a: GroupDescriptor, b: GroupDescriptor) -> GroupDescriptor:
    if a is not b and a != b:
        raise DescriptorMismatchException()
    return a


def accumulate(out: dict, key, c: Fraction) -> None:
    """out[key] += c, 结果为 0 时删除该键"""
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


class AlgebraElement:
    """Monomial → 有理系数的稀疏映射, 不存零系数"""

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupDescriptor, terms: Mapping[Monomial, Scalar] | None = None):
        self.group = group
        self.terms: dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, G: GroupDescriptor) -> "AlgebraElement":
        return cls(G)

    @classmethod
    def one(cls, G: GroupDescriptor) -> "AlgebraElement":
        return cls(G, {Monomial.one(G): 1})

    @classmethod
    def monomial(cls, G: GroupDescriptor, m: Monomial, c: Scalar = 1) -> "AlgebraElement":
        m.check(G)
        return cls(G, {m: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        """按内部单项式键排序"""
        return iter(sorted(self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, negate(other))

    def __neg__(self) -> "AlgebraElement":
        return negate(self)

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return scale(other, self)

    def __rmul__(self, c: Scalar) -> "AlgebraElement":
        return scale(c, self)

    def __str__(self) -> str:
        from .render import render_algebra

        return render_algebra(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    G = same_group(a.group, b.group)
    out = dict(a.terms)
    for m, c in b.terms.items():
        accumulate(out, m, c)
    return AlgebraElement(G, out)


def negate(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.group, {m: -c for m, c in a.terms.items()})


def scale(c: Scalar, a: AlgebraElement) -> AlgebraElement:
    if not c:
        return AlgebraElement(a.group)
    return AlgebraElement(a.group, {m: c * v for m, v in a.terms.items()})


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """x^α t^i · x^β t^j = x^{α+β} t^{i+j} 的双线性扩张"""
    G = same_group(a.group, b.group)
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            accumulate(out, m1 * m2, c1 * c2)
    return AlgebraElement(G, out)


def partial_monomial(G: GroupDescriptor, p: int, m: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """∂_p(x^α t^i) 的项, 以描述符上的缓存复用"""
    cache = G.memo("partial")
    key = (p, m)
    if (hit := cache.get(key)) is not None:
        return hit
    out: list[tuple[Monomial, Fraction]] = []
    a_p = G.ambient(m.alpha).at(p)
    if a_p:
        out.append((m, a_p))
    # i - 1_[p] 越界时该项视为 0
    if (lowered := m.idx.lower(p)) is not None:
        out.append((Monomial(m.alpha, lowered), Fraction(m.idx.at(p))))
    result = tuple(out)
    cache[key] = result
    return result


def partial(p: int, a: AlgebraElement) -> AlgebraElement:
    """∂_p 的线性扩张"""
    G = a.group
    G.signature.check_direction(p)
    out: dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        for mm, cc in partial_monomial(G, p, m):
            accumulate(out, mm, c * cc)
    return AlgebraElement(G, out)


def max_index(a: AlgebraElement, p: int) -> int:
    """支撑上 i_p 的最大值"""
    return max((m.idx.at(p) for m in a.terms), default=0)
