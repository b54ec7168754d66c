from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Any

from msgspec import Struct, field

from .algebra import Monomial, MultiIndex
from .exception import WindowException
from .lattice import GroupDescriptor, GroupElement, Signature
from .utils import box, compositions


@dataclass(frozen=True, slots=True)
class Window:
    """有限截断: Γ 坐标的盒子 × |i| 的上界"""

    gamma_radius: int
    """每个 Γ 坐标的绝对值上界"""
    idx_degree: int
    """多重指标总次数 |i| 的上界"""
    sample_count: int = 100
    """随机抽样次数"""
    seed: int = 0
    """随机种子"""

    def __post_init__(self):
        if self.gamma_radius < 0 or self.idx_degree < 0:
            raise WindowException(
                f"窗口参数必须非负: radius={self.gamma_radius}, degree={self.idx_degree}"
            )
        if self.sample_count < 1:
            raise WindowException(f"sample_count 必须为正: {self.sample_count}")

    def doubled(self) -> "Window":
        """Minkowski 和 W + W"""
        return Window(
            2 * self.gamma_radius, 2 * self.idx_degree, self.sample_count, self.seed
        )

    def group_elements(self, G: GroupDescriptor) -> Iterator[GroupElement]:
        for coords in box(G.m, self.gamma_radius):
            yield GroupElement(coords)

    def multi_indices(self, sig: Signature) -> Iterator[MultiIndex]:
        for entries in compositions(sig.n_t, self.idx_degree):
            yield MultiIndex(entries)

    def monomials(self, G: GroupDescriptor) -> Iterator[Monomial]:
        indices = list(self.multi_indices(G.signature))
        for alpha in self.group_elements(G):
            for idx in indices:
                yield Monomial(alpha, idx)

    def contains_group(self, g: GroupElement) -> bool:
        return all(abs(c) <= self.gamma_radius for c in g.coords)

    def contains(self, m: Monomial) -> bool:
        return m.idx.degree <= self.idx_degree and self.contains_group(m.alpha)

    def __str__(self) -> str:
        return f"radius={self.gamma_radius}, degree={self.idx_degree}"


class Ordering(str, Enum):
    """order_compare 的结果"""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class Counterexample(Struct, omit_defaults=True):
    """可在 CLI 中重放的反例, 全部以规范表达式文本保存"""

    inputs: dict[str, str]
    lhs: str
    rhs: str


class Report(Struct, kw_only=True, omit_defaults=True):
    """单项检查的结果"""

    check: str
    status: Status
    tested: int
    counterexample: Counterexample | None = None
    millis: int
    note: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


class VerifyOutput(Struct):
    """verify 命令的 JSON 外层"""

    status: Status
    reports: list[Report]
