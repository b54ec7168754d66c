"""按特征值拆分向量

v 是若干特征向量之和时, 用 v 的 Krylov 序列求出 T 在 span{v, Tv, ...} 上的最小多项式,
再用 Lagrange 投影 Π_{μ≠λ} (T-μ)/(λ-μ) 取出各特征分量。
"""

from collections.abc import Callable, Hashable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Generic, TypeVar

from .exception import SpectrumException
from .linalg import EchelonBasis, rational_roots, solve
from .log import logger

K = TypeVar("K", bound=Hashable)
Vector = dict[K, Fraction]
Operator = Callable[[Mapping[K, Fraction]], Mapping[K, Fraction]]

KRYLOV_LIMIT = 64


def _combine(a: Mapping[K, Fraction], b: Mapping[K, Fraction], c: Fraction) -> dict[K, Fraction]:
    """a + c·b"""
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + c * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def krylov_polynomial(op: Operator, v: Mapping[K, Fraction], limit: int = KRYLOV_LIMIT) -> list[Fraction]:
    """T 在 v 生成的循环子空间上的最小多项式, 返回 x^k + c_{k-1}x^{k-1} + ... + c_0 的 [c_0..c_{k-1}]"""
    seq: list[dict[K, Fraction]] = [dict(v)]
    span: EchelonBasis = EchelonBasis([v])
    while len(seq) <= limit:
        nxt = dict(op(seq[-1]))
        if not span.add(nxt):
            keys = sorted({k for vec in seq + [nxt] for k in vec}, key=repr)
            columns = [[vec.get(k, Fraction(0)) for k in keys] for vec in seq]
            coeffs = solve(columns, [nxt.get(k, Fraction(0)) for k in keys])
            if coeffs is None:
                raise SpectrumException("Krylov 序列线性相关但无法求出系数")
            return [-c for c in coeffs]
        seq.append(nxt)
    raise SpectrumException(f"Krylov 子空间维数超过 {limit}")


@dataclass(slots=True)
class EigenSplit(Generic[K]):
    components: dict[Fraction, Vector] = field(default_factory=dict)
    """特征值 → 对应分量"""
    outside: list[Fraction] = field(default_factory=list)
    """分量不在子空间里的特征值"""

    @property
    def eigenvalues(self) -> list[Fraction]:
        return sorted(self.components)

    @property
    def ok(self) -> bool:
        return not self.outside


def eigen_split(
    op: Operator,
    v: Mapping[K, Fraction],
    subspace: Callable[[Mapping[K, Fraction]], bool] | EchelonBasis | None = None,
) -> EigenSplit:
    """把 v 拆成 T 的特征分量, 并逐个判断是否落在给定子空间

    最小多项式有非有理根或重根时抛出 SpectrumException (v 不是特征向量之和)。
    """
    result: EigenSplit = EigenSplit()
    if not v:
        return result
    roots = rational_roots(krylov_polynomial(op, v))
    if repeated := [r for r, k in roots.items() if k > 1]:
        raise SpectrumException(f"最小多项式有重根 {', '.join(map(str, repeated))}, 向量不是特征向量之和")
    contains = subspace.contains if isinstance(subspace, EchelonBasis) else subspace
    for lam in roots:
        comp: dict[K, Fraction] = dict(v)
        for mu in roots:
            if mu != lam:
                comp = _combine(dict(op(comp)), comp, -mu)
                comp = {k: c / (lam - mu) for k, c in comp.items()}
        result.components[lam] = comp
        if contains is not None and not contains(comp):
            result.outside.append(lam)
    logger.debug(f"特征拆分: {len(roots)} 个特征值 {sorted(roots)}")
    return result
