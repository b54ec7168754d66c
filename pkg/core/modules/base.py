"""权模的基类、描述符与模元素"""

from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import ClassVar

from ..algebra import MultiIndex, Scalar, accumulate, same_group
from ..constants import MEMO_SIZE
from ..data import Window
from ..exception import DescriptorMismatchException, ModuleKindException
from ..lattice import GroupDescriptor, GroupElement, Signature, Weight
from ..lie import WittElement
from ..utils import LimitedSizeDict

BasisKey = tuple[GroupElement, MultiIndex]
"""基向量 v_{β,j} 的键"""


class ModuleKind(str, Enum):
    A_MU = "A_mu"
    A_MU_QUOTIENT = "A_mu_quotient"
    GRADED_M = "graded_M"
    GRADED_A = "graded_A"
    GRADED_B = "graded_B"
    TRIVIAL = "trivial"

    @property
    def graded(self) -> bool:
        """只定义在 S(0,0,l,0;Γ) 上的分次模"""
        return self in (ModuleKind.GRADED_M, ModuleKind.GRADED_A, ModuleKind.GRADED_B)


@dataclass(frozen=True)
class ModuleDescriptor:
    """模的类型 + 参数 (μ 或 η) + Γ"""

    kind: ModuleKind
    parameter: Weight
    group: GroupDescriptor

    def __post_init__(self):
        try:
            kind = ModuleKind(self.kind)
        except ValueError:
            raise ModuleKindException(f"未知的模类型: {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        BaseModule.class_for(kind).validate(self)

    @property
    def signature(self) -> Signature:
        return self.group.signature

    @cached_property
    def module(self) -> "BaseModule":
        return BaseModule.instance(self)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.parameter}"


class BaseModule:
    """所有权模实现的基类

    子类必须给出:
    - kind: 对应的 ModuleKind
    - act_term: 单个 x^α t^i ∂_p 对单个基向量的作用 (分次模改为整体覆盖 act)
    - weight: 基向量 v_{β,j} 的广义权
    """

    _registry: ClassVar[dict[ModuleKind, type["BaseModule"]]] = {}
    """ 模类型 → 实现类 """

    _instances: ClassVar[LimitedSizeDict] = LimitedSizeDict(max_size=64)
    """ 描述符 → 实例, 相等的描述符共用作用缓存 """

    kind: ClassVar[ModuleKind]

    def __init__(self, descriptor: ModuleDescriptor):
        self.descriptor = descriptor
        self.group = descriptor.group
        self.parameter = descriptor.parameter
        self._cache: LimitedSizeDict = LimitedSizeDict(max_size=MEMO_SIZE)
        self._weights: dict[GroupElement, Weight] = {}

    def __init_subclass__(cls, **kwargs):
        """自动注册子类到 _registry"""
        super().__init_subclass__(**kwargs)
        if ABC not in cls.__bases__:  # 跳过抽象类
            BaseModule._registry[cls.kind] = cls

    @classmethod
    def class_for(cls, kind: ModuleKind) -> type["BaseModule"]:
        if (impl := cls._registry.get(kind)) is None:
            raise ModuleKindException(f"模类型 {kind.value} 没有实现")
        return impl

    @classmethod
    def instance(cls, descriptor: ModuleDescriptor) -> "BaseModule":
        if (module := BaseModule._instances.get(descriptor)) is None:
            module = BaseModule._instances[descriptor] = cls.class_for(descriptor.kind)(descriptor)
        return module

    @classmethod
    def validate(cls, descriptor: ModuleDescriptor) -> None:
        descriptor.group.check_weight(descriptor.parameter, "模参数")

    def admits(self, key: BasisKey) -> bool:
        """key 是否为非零基向量"""
        return True

    def check_key(self, key: BasisKey) -> None:
        beta, j = key
        if len(beta.coords) != self.group.m or len(j) != self.group.signature.n_t:
            raise ModuleKindException(f"{self.kind.value} 中不存在基向量 v{beta}{j}")

    @abstractmethod
    def act_term(
        self, alpha: GroupElement, i: MultiIndex, p: int, key: BasisKey
    ) -> tuple[tuple[BasisKey, Fraction], ...]:
        raise NotImplementedError

    @abstractmethod
    def weight(self, beta: GroupElement) -> Weight:
        raise NotImplementedError

    def cached_term(
        self, alpha: GroupElement, i: MultiIndex, p: int, key: BasisKey
    ) -> tuple[tuple[BasisKey, Fraction], ...]:
        ck = (alpha, i, p, key)
        if (hit := self._cache.get(ck)) is None:
            hit = self._cache[ck] = self.act_term(alpha, i, p, key)
        return hit

    def act(self, w: WittElement, v: "ModuleElement") -> "ModuleElement":
        """按项双线性展开"""
        out: dict[BasisKey, Fraction] = {}
        for (m, p), c in w.terms.items():
            for key, d in v.terms.items():
                for nk, cc in self.cached_term(m.alpha, m.idx, p, key):
                    accumulate(out, nk, c * d * cc)
        return ModuleElement(self.descriptor, out)

    def basis(self, window: Window) -> list[BasisKey]:
        """窗口内的全部非零基向量"""
        indices = list(window.multi_indices(self.group.signature))
        return [
            (beta, j)
            for beta in window.group_elements(self.group)
            for j in indices
            if self.admits((beta, j))
        ]


class ModuleElement:
    """模元素: 基向量 v_{β,j} 的稀疏有理组合"""

    __slots__ = ("descriptor", "terms")

    def __init__(self, descriptor: ModuleDescriptor, terms: Mapping[BasisKey, Scalar] | None = None):
        self.descriptor = descriptor
        module = descriptor.module
        self.terms: dict[BasisKey, Fraction] = {}
        for key, c in (terms or {}).items():
            if c and module.admits(key):
                self.terms[key] = c if isinstance(c, Fraction) else Fraction(c)

    @classmethod
    def basis_vector(
        cls, descriptor: ModuleDescriptor, beta: GroupElement, j: MultiIndex | None = None, c: Scalar = 1
    ) -> "ModuleElement":
        j = j if j is not None else MultiIndex.zero(descriptor.signature.n_t)
        descriptor.module.check_key((beta, j))
        return cls(descriptor, {(beta, j): c})

    @property
    def group(self) -> GroupDescriptor:
        return self.descriptor.group

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[BasisKey, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        same = self.descriptor is other.descriptor or self.descriptor == other.descriptor
        return same and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def _same(self, other: "ModuleElement") -> ModuleDescriptor:
        if self.descriptor is not other.descriptor and self.descriptor != other.descriptor:
            raise DescriptorMismatchException(
                f"模元素属于不同的模: {self.descriptor} / {other.descriptor}"
            )
        return self.descriptor

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        desc = self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(out, key, c)
        return ModuleElement(desc, out)

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.descriptor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "ModuleElement":
        return ModuleElement(self.descriptor, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, c: Scalar) -> "ModuleElement":
        return self.scale(c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from ..render import render_module

        return render_module(self)

    def __repr__(self) -> str:
        return f"ModuleElement({self.descriptor}: {self})"


def act(w: WittElement, v: ModuleElement) -> ModuleElement:
    """w.v"""
    same_group(w.group, v.group)
    return v.descriptor.module.act(w, v)
