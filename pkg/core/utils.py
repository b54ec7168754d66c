from collections import OrderedDict
from collections.abc import Iterable, Iterator
from fractions import Fraction
from itertools import product
from typing import TypeVar

from .exception import ConfigException

K = TypeVar("K")
V = TypeVar("V")


class LimitedSizeDict(OrderedDict[K, V]):
    """
    定长字典
    """

    def __init__(self, *args, max_size=20, **kwargs):
        self.max_size = max_size
        super().__init__(*args, **kwargs)

    def __setitem__(self, key: K, value: V):
        super().__setitem__(key, value)
        if len(self) > self.max_size:
            self.popitem(last=False)  # 移除最早添加的项


def to_fraction(value: object) -> Fraction:
    """把 int / Fraction / "p/q" 字符串转为精确有理数, 拒绝浮点

    Args:
        value: 输入值

    Returns:
        Fraction: 有理数
    """
    match value:
        case bool():
            raise ConfigException(f"不接受布尔值作为有理数: {value!r}")
        case int() | Fraction():
            return Fraction(value)
        case str():
            text = value.strip()
            if not text or any(ch in text for ch in ".eE"):
                raise ConfigException(f"有理数必须写成 \"p/q\": {value!r}")
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise ConfigException(f"无法解析的有理数: {value!r}")
        case _:
            raise ConfigException(f"不接受 {type(value).__name__} 作为有理数: {value!r}")


def fmt_fraction(q: Fraction) -> str:
    """最简分数, 整数不带分母"""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_vector(entries: Iterable[Fraction | int]) -> str:
    return "(" + ",".join(fmt_fraction(Fraction(e)) for e in entries) + ")"


def bit_size(q: Fraction) -> int:
    """消元选主元用的系数位长"""
    return abs(q.numerator).bit_length() + q.denominator.bit_length()


def box(dim: int, radius: int) -> Iterator[tuple[int, ...]]:
    """[-radius, radius]^dim 内的全部整数点"""
    yield from product(range(-radius, radius + 1), repeat=dim)


def compositions(dim: int, degree: int) -> Iterator[tuple[int, ...]]:
    """所有 |i| <= degree 的 i ∈ N^dim, 按总次数递增"""
    for total in range(degree + 1):
        yield from _exact_compositions(dim, total)


def _exact_compositions(dim: int, total: int) -> Iterator[tuple[int, ...]]:
    if dim == 0:
        if total == 0:
            yield ()
        return
    if dim == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _exact_compositions(dim - 1, total - head):
            yield (head, *tail)
