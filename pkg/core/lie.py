"""Witt 代数 W = A·D、散度与 S(l1,l2,l3;ρ,Γ) 的张成族

[u, v] = Σ_{p,q} (u_p ∂_p(v_q) - v_p ∂_p(u_q)) ∂_q
div(u) = Σ_p ∂_p(u_p)
D_{p,q}(u) = x^ρ(∂_p(x^{-ρ}u)∂_q - ∂_q(x^{-ρ}u)∂_p)
"""

from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    Monomial,
    MultiIndex,
    Scalar,
    accumulate,
    partial,
    partial_monomial,
    same_group,
)
from .data import Window
from .lattice import GroupDescriptor, GroupElement
from .log import logger

Term = tuple[Monomial, int]


class WittElement:
    """(Monomial, 方向 p) → 有理系数, 表示 Σ u_p ∂_p"""

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupDescriptor, terms: Mapping[Term, Scalar] | None = None):
        self.group = group
        self.terms: dict[Term, Fraction] = {
            key: c if isinstance(c, Fraction) else Fraction(c) for key, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, G: GroupDescriptor) -> "WittElement":
        return cls(G)

    @classmethod
    def operator(cls, G: GroupDescriptor, m: Monomial, p: int, c: Scalar = 1) -> "WittElement":
        """c · x^α t^i ∂_p"""
        m.check(G)
        G.signature.check_direction(p)
        return cls(G, {(m, p): c})

    @classmethod
    def coordinate(cls, G: GroupDescriptor, p: int) -> "WittElement":
        """∂_p"""
        return cls.operator(G, Monomial.one(G), p)

    @classmethod
    def from_parts(cls, G: GroupDescriptor, parts: Mapping[int, AlgebraElement]) -> "WittElement":
        """Σ_p parts[p] ∂_p"""
        out: dict[Term, Fraction] = {}
        for p, a in parts.items():
            G.signature.check_direction(p)
            same_group(G, a.group)
            for m, c in a.terms.items():
                accumulate(out, (m, p), c)
        return cls(G, out)

    def component(self, p: int) -> AlgebraElement:
        """u_p"""
        return AlgebraElement(self.group, {m: c for (m, q), c in self.terms.items() if q == p})

    def monomials(self) -> set[Monomial]:
        return {m for m, _ in self.terms}

    def by_alpha(self) -> dict[GroupElement, dict[tuple[MultiIndex, int], Fraction]]:
        """按 Γ 次数分组"""
        out: dict[GroupElement, dict[tuple[MultiIndex, int], Fraction]] = defaultdict(dict)
        for (m, p), c in self.terms.items():
            out[m.alpha][(m.idx, p)] = c
        return dict(out)

    def within(self, window: Window) -> bool:
        return all(window.contains(m) for m, _ in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Term, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WittElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "WittElement") -> "WittElement":
        G = same_group(self.group, other.group)
        out = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(out, key, c)
        return WittElement(G, out)

    def __neg__(self) -> "WittElement":
        return WittElement(self.group, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "WittElement") -> "WittElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "WittElement":
        if not c:
            return WittElement(self.group)
        return WittElement(self.group, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, c: Scalar) -> "WittElement":
        return self.scale(c)

    __rmul__ = __mul__

    def times(self, a: AlgebraElement) -> "WittElement":
        """a · w, A 在 W 上的左乘"""
        G = same_group(self.group, a.group)
        out: dict[Term, Fraction] = {}
        for (m, p), c in self.terms.items():
            for m2, c2 in a.terms.items():
                accumulate(out, (m * m2, p), c * c2)
        return WittElement(G, out)

    def __str__(self) -> str:
        from .render import render_witt

        return render_witt(self)

    def __repr__(self) -> str:
        return f"WittElement({self})"


def combine(G: GroupDescriptor, pairs: Iterable[tuple[Scalar, WittElement]]) -> WittElement:
    """Σ c_k w_k"""
    out: dict[Term, Fraction] = {}
    for c, w in pairs:
        same_group(G, w.group)
        for key, v in w.terms.items():
            accumulate(out, key, c * v)
    return WittElement(G, out)


def apply(w: WittElement, a: AlgebraElement) -> AlgebraElement:
    """Σ_p u_p ∂_p(a)"""
    G = same_group(w.group, a.group)
    out: dict[Monomial, Fraction] = {}
    for (m1, p), c1 in w.terms.items():
        for m2, c2 in a.terms.items():
            for mm, cc in partial_monomial(G, p, m2):
                accumulate(out, m1 * mm, c1 * c2 * cc)
    return AlgebraElement(G, out)


def bracket(u: WittElement, v: WittElement) -> WittElement:
    """[m1 ∂_p, m2 ∂_q] = m1 ∂_p(m2) ∂_q - m2 ∂_q(m1) ∂_p 的双线性扩张"""
    G = same_group(u.group, v.group)
    out: dict[Term, Fraction] = {}
    for (m1, p), c1 in u.terms.items():
        for (m2, q), c2 in v.terms.items():
            c = c1 * c2
            for mm, cc in partial_monomial(G, p, m2):
                accumulate(out, (m1 * mm, q), c * cc)
            for mm, cc in partial_monomial(G, q, m1):
                accumulate(out, (m2 * mm, p), -c * cc)
    return WittElement(G, out)


def divergence(w: WittElement) -> AlgebraElement:
    """Σ_p ∂_p(u_p)"""
    G = w.group
    out: dict[Monomial, Fraction] = {}
    for (m, p), c in w.terms.items():
        for mm, cc in partial_monomial(G, p, m):
            accumulate(out, mm, c * cc)
    return AlgebraElement(G, out)


def x_power(G: GroupDescriptor, g: GroupElement) -> AlgebraElement:
    """x^g"""
    return AlgebraElement.monomial(G, Monomial(g, MultiIndex.zero(G.signature.n_t)))


def d_op(p: int, q: int, u: AlgebraElement, rho: GroupElement | None = None) -> WittElement:
    """D_{p,q}(u) = x^ρ(∂_p(x^{-ρ}u)∂_q - ∂_q(x^{-ρ}u)∂_p), p = q 时为 0"""
    G = u.group
    sig = G.signature
    sig.check_direction(p)
    sig.check_direction(q)
    if p == q:
        return WittElement(G)
    rho = rho if rho is not None else G.zero()
    if rho.is_zero:
        return WittElement.from_parts(G, {q: partial(p, u), p: -partial(q, u)})
    shifted = x_power(G, -rho) * u
    lift = x_power(G, rho)
    return WittElement.from_parts(
        G, {q: lift * partial(p, shifted), p: -(lift * partial(q, shifted))}
    )


def d_op_closed(G: GroupDescriptor, p: int, q: int, m: Monomial) -> WittElement:
    """ρ = 0 时的展开式

    x^α t^i(α_p ∂_q - α_q ∂_p) + i_p x^α t^{i-1_[p]} ∂_q - i_q x^α t^{i-1_[q]} ∂_p
    """
    sig = G.signature
    sig.check_direction(p)
    sig.check_direction(q)
    if p == q:
        return WittElement(G)
    amb = G.ambient(m.alpha)
    out: dict[Term, Fraction] = {}
    accumulate(out, (m, q), amb.at(p))
    accumulate(out, (m, p), -amb.at(q))
    if (lp := m.idx.lower(p)) is not None:
        accumulate(out, (Monomial(m.alpha, lp), q), Fraction(m.idx.at(p)))
    if (lq := m.idx.lower(q)) is not None:
        accumulate(out, (Monomial(m.alpha, lq), p), -Fraction(m.idx.at(q)))
    return WittElement(G, out)


def d_monomial(G: GroupDescriptor, p: int, q: int, m: Monomial, rho: GroupElement | None = None) -> WittElement:
    """D_{p,q}(x^α t^i)"""
    return d_op(p, q, AlgebraElement.monomial(G, m), rho)


@dataclass(frozen=True, slots=True)
class FamilyMember:
    p: int
    q: int
    monomial: Monomial
    operator: WittElement

    def label(self) -> str:
        from .render import render_monomial

        return f"D({self.p},{self.q}; {render_monomial(self.monomial)})"


@dataclass(slots=True)
class SpanningFamily:
    """窗口内全部非零的 D_{p,q}(x^α t^i), p < q"""

    group: GroupDescriptor
    window: Window
    rho: GroupElement
    members: list[FamilyMember]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FamilyMember]:
        return iter(self.members)

    def __getitem__(self, k: int) -> FamilyMember:
        return self.members[k]

    def operators(self) -> list[WittElement]:
        return [mem.operator for mem in self.members]

    def by_alpha(self) -> dict[GroupElement, list[FamilyMember]]:
        """成员按 Γ 次数齐次"""
        out: dict[GroupElement, list[FamilyMember]] = defaultdict(list)
        for mem in self.members:
            out[mem.monomial.alpha].append(mem)
        return dict(out)


def spanning_family(G: GroupDescriptor, window: Window, rho: GroupElement | None = None) -> SpanningFamily:
    rho = rho if rho is not None else G.zero()
    directions = G.signature.directions
    members: list[FamilyMember] = []
    for m in window.monomials(G):
        u = AlgebraElement(G, {m: 1})
        for p in directions:
            for q in directions:
                if p >= q:
                    continue
                if op := d_op(p, q, u, rho):
                    members.append(FamilyMember(p, q, m, op))
    logger.debug(f"张成族: 窗口 {window}, 共 {len(members)} 个算子")
    return SpanningFamily(G, window, rho, members)


@lru_cache(maxsize=32)
def window_family(G: GroupDescriptor, window: Window) -> SpanningFamily:
    """ρ = 0 的张成族, 按 (Γ, 窗口) 缓存供各检查共享"""
    return spanning_family(G, window)
