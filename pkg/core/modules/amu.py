"""A_μ 与商模 A_μ′

(x^α t^i ∂_p).v_{β,j} = (β_p+μ_p) v_{β+α,i+j} + j_p v_{β+α,i+j-1_[p]}
限制到 D_{p,q}(x^α t^i) 即为四项作用公式。μ ∈ Γ 时 F v_{-μ,0} 是平凡子模。
"""

from fractions import Fraction
from functools import lru_cache

from ..algebra import MultiIndex
from ..exception import AlgebraException, ModuleKindException
from ..lattice import GroupDescriptor, GroupElement, Weight, membership
from .base import BasisKey, BaseModule, ModuleDescriptor, ModuleElement, ModuleKind


class AMuModule(BaseModule):
    """基 {v_{β,j} | β ∈ Γ, j ∈ N^{l1+l2}}"""

    kind = ModuleKind.A_MU

    def weight(self, beta: GroupElement) -> Weight:
        if (w := self._weights.get(beta)) is None:
            w = self._weights[beta] = self.group.ambient(beta) + self.parameter
        return w

    def act_term(
        self, alpha: GroupElement, i: MultiIndex, p: int, key: BasisKey
    ) -> tuple[tuple[BasisKey, Fraction], ...]:
        beta, j = key
        target = beta + alpha
        k = i + j
        out: list[tuple[BasisKey, Fraction]] = []
        if c := self.weight(beta).at(p):
            out.append(((target, k), c))
        if (j_p := j.at(p)) and (lowered := k.lower(p)) is not None:
            out.append(((target, lowered), Fraction(j_p)))
        return tuple(out)


class AMuQuotientModule(AMuModule):
    """A_μ / F v_{-μ,0}, 要求 μ ∈ Γ"""

    kind = ModuleKind.A_MU_QUOTIENT

    def __init__(self, descriptor: ModuleDescriptor):
        super().__init__(descriptor)
        coords = membership(descriptor.parameter, descriptor.group)
        assert coords is not None
        self.null_key: BasisKey = (-coords, MultiIndex.zero(self.group.signature.n_t))

    @classmethod
    def validate(cls, descriptor: ModuleDescriptor) -> None:
        super().validate(descriptor)
        if membership(descriptor.parameter, descriptor.group) is None:
            raise ModuleKindException(
                f"商模 A_μ′ 要求 μ ∈ Γ, 而 μ={descriptor.parameter} 不在 Γ 中"
            )

    def admits(self, key: BasisKey) -> bool:
        return key != self.null_key


def act_monomial_op(
    G: GroupDescriptor,
    alpha: GroupElement,
    i: MultiIndex,
    p: int,
    beta: GroupElement,
    j: MultiIndex,
    mu: Weight,
) -> ModuleElement:
    """(x^α t^i ∂_p).v_{β,j}, 在 A_μ 中计算"""
    G.signature.check_direction(p)
    desc = ModuleDescriptor(ModuleKind.A_MU, mu, G)
    desc.module.check_key((beta, j))
    return ModuleElement(desc, dict(desc.module.act_term(alpha, i, p, (beta, j))))


def four_term_formula(
    desc: ModuleDescriptor,
    p: int,
    q: int,
    alpha: GroupElement,
    i: MultiIndex,
    beta: GroupElement,
    j: MultiIndex,
) -> ModuleElement:
    """直接按四项闭式计算 D_{p,q}(x^α t^i).v_{β,j}, 不经过 act"""
    if desc.kind not in (ModuleKind.A_MU, ModuleKind.A_MU_QUOTIENT):
        raise ModuleKindException(f"四项公式只适用于 A_μ 与 A_μ′, 实际 {desc.kind.value}")
    sig = desc.signature
    sig.check_direction(p)
    sig.check_direction(q)
    if p == q:
        raise AlgebraException(f"四项公式要求 p ≠ q, 实际 p=q={p}")
    G = desc.group
    a = G.ambient(alpha)
    b = desc.module.weight(beta)
    target = beta + alpha
    k = i + j
    out: dict[BasisKey, Fraction] = {}

    def put(idx: MultiIndex | None, c: Fraction) -> None:
        if c and idx is not None:
            out[(target, idx)] = out.get((target, idx), 0) + c

    put(k, a.at(p) * b.at(q) - a.at(q) * b.at(p))
    put(k.lower(q), j.at(q) * a.at(p) - i.at(q) * b.at(p))
    put(k.lower(p), i.at(p) * b.at(q) - j.at(p) * a.at(q))
    lowered = k.lower(p)
    put(lowered.lower(q) if lowered is not None else None, Fraction(i.at(p) * j.at(q) - i.at(q) * j.at(p)))
    return ModuleElement(desc, out)


@lru_cache(maxsize=64)
def shift_descriptor(desc: ModuleDescriptor, gamma: GroupElement) -> ModuleDescriptor:
    """A_μ → A_{μ+γ}, 同一 (μ, γ) 只构造一次"""
    if desc.kind is not ModuleKind.A_MU:
        raise ModuleKindException(f"平移同构只适用于 A_μ, 实际 {desc.kind.value}")
    return ModuleDescriptor(ModuleKind.A_MU, desc.parameter + desc.group.ambient(gamma), desc.group)


def shift_map(v: ModuleElement, gamma: GroupElement) -> ModuleElement:
    """v_{β,j} ↦ v_{β-γ,j}"""
    target = shift_descriptor(v.descriptor, gamma)
    return ModuleElement(target, {(beta - gamma, j): c for (beta, j), c in v.terms.items()})
