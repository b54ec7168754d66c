"""S(0,0,l,0;Γ) 上重数为一的分次模 M_μ、A_η、B_η

作用只对 x^α ∂ (∂ ∈ ker α) 定义; α = 0 的项按分次规则作用。
"""

from abc import ABC
from collections import defaultdict
from fractions import Fraction

from ..algebra import MultiIndex
from ..exception import ModuleActionException, ModuleKindException
from ..lattice import Derivation, GroupElement, Weight, pairing
from ..lie import WittElement
from .base import BasisKey, BaseModule, ModuleDescriptor, ModuleElement, ModuleKind


class GradedModule(BaseModule, ABC):
    """基 {v_β | β ∈ Γ}, 多重指标恒为空"""

    @classmethod
    def validate(cls, descriptor: ModuleDescriptor) -> None:
        super().validate(descriptor)
        sig = descriptor.signature
        if sig.n_t != 0:
            raise ModuleKindException(
                f"{cls.kind.value} 只定义在 l1=l2=0 的 S(0,0,l,0;Γ) 上, 实际签名 {sig}"
            )

    def weight(self, beta: GroupElement) -> Weight:
        return self.group.ambient(beta)

    def rule(self, alpha: GroupElement, d: Derivation, beta: GroupElement) -> tuple[GroupElement, Fraction]:
        """x^α ∂ . v_β = c · v_{β'}, 返回 (β', c)"""
        raise NotImplementedError

    def pair(self, d: Derivation, w: Weight) -> Fraction:
        return pairing(d, w, self.group.signature)

    def act(self, w: WittElement, v: ModuleElement) -> ModuleElement:
        """同一 Γ 次数的项合并成 x^α ∂ 后按 rule 作用"""
        G = self.group
        l = G.l
        parts: dict[GroupElement, list[Fraction]] = defaultdict(lambda: [Fraction(0)] * l)
        for (m, p), c in w.terms.items():
            parts[m.alpha][p - 1] += c
        out: dict[BasisKey, Fraction] = {}
        for alpha, coeffs in parts.items():
            d = Derivation(tuple(coeffs))
            if d.is_zero:
                continue
            if not alpha.is_zero and self.pair(d, G.ambient(alpha)):
                raise ModuleActionException(
                    f"{self.kind.value} 上的作用要求 ∂ ∈ ker α, 项 x{alpha}·{d} 不满足",
                    term=f"x{alpha}*{d}",
                )
            for (beta, j), c in v.terms.items():
                target, cc = self.rule(alpha, d, beta)
                if cc:
                    key = (target, j)
                    out[key] = out.get(key, 0) + c * cc
        return ModuleElement(self.descriptor, out)


class GradedMModule(GradedModule):
    """x^α ∂ . v_β = ∂(β+μ) v_{α+β}"""

    kind = ModuleKind.GRADED_M

    def weight(self, beta: GroupElement) -> Weight:
        if (w := self._weights.get(beta)) is None:
            w = self._weights[beta] = self.group.ambient(beta) + self.parameter
        return w

    def rule(self, alpha: GroupElement, d: Derivation, beta: GroupElement) -> tuple[GroupElement, Fraction]:
        return alpha + beta, self.pair(d, self.weight(beta))


class _EtaModule(GradedModule, ABC):
    @classmethod
    def validate(cls, descriptor: ModuleDescriptor) -> None:
        super().validate(descriptor)
        if descriptor.parameter.is_zero:
            raise ModuleKindException(f"{cls.kind.value} 要求 η ≠ 0")


class GradedAModule(_EtaModule):
    """x^α ∂ . v_β = ∂(β) v_{α+β} (β ≠ 0); x^α ∂ . v_0 = ∂(η) v_α (α ≠ 0)"""

    kind = ModuleKind.GRADED_A

    def rule(self, alpha: GroupElement, d: Derivation, beta: GroupElement) -> tuple[GroupElement, Fraction]:
        if beta.is_zero and not alpha.is_zero:
            return alpha, self.pair(d, self.parameter)
        return alpha + beta, self.pair(d, self.group.ambient(beta))


class GradedBModule(_EtaModule):
    """x^α ∂ . v_β = ∂(β) v_{α+β} (β ≠ -α); x^α ∂ . v_{-α} = ∂(η) v_0 (α ≠ 0)"""

    kind = ModuleKind.GRADED_B

    def rule(self, alpha: GroupElement, d: Derivation, beta: GroupElement) -> tuple[GroupElement, Fraction]:
        target = alpha + beta
        if target.is_zero and not alpha.is_zero:
            return target, self.pair(d, self.parameter)
        return target, self.pair(d, self.group.ambient(beta))


class TrivialModule(BaseModule):
    """一维平凡模 F v_0"""

    kind = ModuleKind.TRIVIAL

    @classmethod
    def validate(cls, descriptor: ModuleDescriptor) -> None:
        super().validate(descriptor)
        if not descriptor.parameter.is_zero:
            raise ModuleKindException("平凡模不带参数, 参数必须为零向量")

    def weight(self, beta: GroupElement) -> Weight:
        return Weight.zero(self.group.l)

    def check_key(self, key: BasisKey) -> None:
        super().check_key(key)
        beta, j = key
        if not beta.is_zero or j.degree:
            raise ModuleKindException(f"平凡模只有基向量 v_0, 不含 v{beta}{j}")

    def act_term(
        self, alpha: GroupElement, i: MultiIndex, p: int, key: BasisKey
    ) -> tuple[tuple[BasisKey, Fraction], ...]:
        return ()

    def basis(self, window) -> list[BasisKey]:
        return [(self.group.zero(), MultiIndex.zero(self.group.signature.n_t))]
