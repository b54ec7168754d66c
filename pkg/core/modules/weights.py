"""广义权分解、滤过次数与多重指标上的全序"""

from collections import defaultdict
from fractions import Fraction

from ..algebra import MultiIndex
from ..data import Ordering
from ..exception import DimensionException
from ..lattice import Weight
from ..lie import WittElement
from .base import BasisKey, ModuleElement, act


def weight_decompose(v: ModuleElement) -> dict[Weight, ModuleElement]:
    """按广义权分组, 各分量之和等于 v"""
    module = v.descriptor.module
    groups: dict[Weight, dict[BasisKey, Fraction]] = defaultdict(dict)
    for (beta, j), c in v.terms.items():
        groups[module.weight(beta)][(beta, j)] = c
    return {w: ModuleElement(v.descriptor, terms) for w, terms in groups.items()}


def shifted_coordinate(v: ModuleElement, r: int, w: Weight) -> ModuleElement:
    """(∂_r - w_r) v"""
    op = WittElement.coordinate(v.group, r)
    return act(op, v) - v.scale(w.at(r))


def filtration_degree(v: ModuleElement, w: Weight) -> int | None:
    """最小的 n 使得对每个坐标导子 (∂_r - w_r)^{n+1} v = 0

    迭代次数上限为 1 + 支撑上 |j| 的最大值, 超出即返回 None。
    """
    sig = v.descriptor.signature
    if len(w) != sig.l:
        raise DimensionException(sig.l, len(w), "权")
    cap = 1 + max((j.degree for _, j in v.terms), default=0)
    n = 0
    for r in sig.directions:
        x, k = v, 0
        while x:
            if k > cap:
                return None
            x = shifted_coordinate(x, r, w)
            k += 1
        n = max(n, k - 1)
    return n


def order_key(i: MultiIndex) -> tuple[int, tuple[int, ...]]:
    """先比 |i|, 再从最后一个分量往前比"""
    return i.degree, tuple(reversed(i.entries))


def order_compare(i: MultiIndex, j: MultiIndex) -> Ordering:
    if len(i) != len(j):
        raise DimensionException(len(i), len(j), "多重指标")
    a, b = order_key(i), order_key(j)
    if a == b:
        return Ordering.EQUAL
    return Ordering.GREATER if a > b else Ordering.LESS
