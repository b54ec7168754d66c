"""多重指标全序的穷举检查"""

from functools import cmp_to_key

from ..algebra import MultiIndex
from ..config import Context
from ..data import Ordering, Report
from ..modules import order_compare
from ..utils import compositions
from .base import Case, Recorder, suite

ORDER_DEGREE = 4


def greater_by_definition(i: MultiIndex, j: MultiIndex) -> bool:
    """i > j: |i| > |j|, 或 |i| = |j| 且存在 s 使 i_s > j_s 并且 s 之后的分量都相等"""
    if i.degree != j.degree:
        return i.degree > j.degree
    n = len(i)
    return any(
        i.at(s) > j.at(s) and all(i.at(p) == j.at(p) for p in range(s + 1, n + 1))
        for s in range(1, n + 1)
    )


def _cmp(i: MultiIndex, j: MultiIndex) -> int:
    return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[order_compare(i, j)]


def check_total_order(ctx: Context, degree: int = ORDER_DEGREE) -> Report:
    """与定义逐对一致, 并且排序后任意两项严格递增 (蕴含反对称、传递、完全)"""
    rec = Recorder("order")
    n = ctx.group.signature.n_t
    indices = [MultiIndex(e) for e in compositions(n, degree)]
    for i in indices:
        for j in indices:
            got = order_compare(i, j)
            if i == j:
                expected = Ordering.EQUAL
            elif greater_by_definition(i, j):
                expected = Ordering.GREATER
            else:
                expected = Ordering.LESS
            if not rec.compare(got.value, expected.value, i=i, j=j):
                return rec.report()
    chain = sorted(indices, key=cmp_to_key(_cmp))
    for k, i in enumerate(chain):
        for j in chain[k + 1 :]:
            if not rec.compare(order_compare(i, j).value, Ordering.LESS.value, i=i, j=j):
                return rec.report()
    rec.details["indices"] = len(indices)
    return rec.report()


@suite("order")
def order_suite(ctx: Context) -> list[Case]:
    return [Case("order", check_total_order)]
