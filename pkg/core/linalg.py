"""有理数域上的精确线性代数

稀疏部分 (张成判定、闭包迭代) 用增量的约化行阶梯形;
小规模稠密问题 (零空间、求解、秩) 交给 sympy.
"""

from collections.abc import Hashable, Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Generic, TypeVar

import sympy

from .exception import SpectrumException
from .utils import bit_size

K = TypeVar("K", bound=Hashable)


class EchelonBasis(Generic[K]):
    """稀疏向量的约化行阶梯形, 支持增量插入

    每一行的主元系数为 1, 且其余行在该主元位置为 0,
    因此约化只需对主元各扫一遍。主元取位长最小的系数以控制系数膨胀。
    """

    __slots__ = ("_rows",)

    def __init__(self, vectors: Iterable[Mapping[K, Fraction]] = ()):
        self._rows: dict[K, dict[K, Fraction]] = {}
        for vec in vectors:
            self.add(vec)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[K, Fraction]) -> dict[K, Fraction]:
        """返回 vec 模去当前张成空间后的余项"""
        out = dict(vec)
        for key in [k for k in out if k in self._rows]:
            c = out.get(key)
            if not c:
                continue
            for k2, v2 in self._rows[key].items():
                nv = out.get(k2, 0) - c * v2
                if nv:
                    out[k2] = nv
                else:
                    out.pop(k2, None)
        return out

    def contains(self, vec: Mapping[K, Fraction]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[K, Fraction]) -> bool:
        """插入向量, 线性无关时返回 True"""
        rem = self.reduce(vec)
        if not rem:
            return False
        pivot = min(rem, key=lambda k: (bit_size(rem[k]), k))
        inv = 1 / rem[pivot]
        row = {k: v * inv for k, v in rem.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if not c:
                continue
            for k2, v2 in row.items():
                nv = other.get(k2, 0) - c * v2
                if nv:
                    other[k2] = nv
                else:
                    other.pop(k2, None)
        self._rows[pivot] = row
        return True


def _to_sympy(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols)
    return sympy.Matrix(
        [[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    )


def _from_sympy(x) -> Fraction:
    r = sympy.Rational(x)
    return Fraction(int(r.p), int(r.q))


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """精确零空间基 {v : rows·v = 0}"""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    mat = _to_sympy(rows, ncols)
    return [[_from_sympy(x) for x in vec] for vec in mat.nullspace()]


def rank(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> int:
    if not rows:
        return 0
    return int(_to_sympy(rows, ncols).rank())


def solve(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """求解 Σ c_k·columns[k] = rhs, 列向量线性无关时解唯一; 无解返回 None"""
    n = len(rhs)
    if not columns:
        return [] if all(x == 0 for x in rhs) else None
    mat = _to_sympy([[col[r] for col in columns] for r in range(n)], len(columns))
    b = _to_sympy([[x] for x in rhs], 1)
    try:
        sol, params = mat.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [_from_sympy(x) for x in sol]


def rational_roots(coeffs: Sequence[Fraction]) -> dict[Fraction, int]:
    """首一多项式 x^k + coeffs[k-1]·x^{k-1} + ... + coeffs[0] 的根与重数

    存在非有理根时抛出 SpectrumException。
    """
    x = sympy.Symbol("x")
    poly = sympy.Poly(
        [1, *(sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs))], x
    )
    found = sympy.roots(poly, multiple=False)
    if sum(found.values()) != poly.degree() or not all(r.is_rational for r in found):
        raise SpectrumException(f"最小多项式 {poly.as_expr()} 有非有理根")
    return {_from_sympy(r): int(k) for r, k in found.items()}
