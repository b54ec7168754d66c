"""规范文本输出

项按内部键排序; 系数为 1 时省略, 负号写在项首; 因子顺序 x{..}*t[..]*dP; 零写作 0。
输出可被 expr.parse 原样读回。
"""

from collections.abc import Iterable
from fractions import Fraction
from typing import TYPE_CHECKING

from .utils import fmt_fraction

if TYPE_CHECKING:
    from .algebra import AlgebraElement, Monomial, MultiIndex
    from .data import Report
    from .lattice import GroupElement
    from .lie import WittElement
    from .modules import ModuleElement


def render_index(i: "MultiIndex") -> str:
    return "[" + ",".join(str(e) for e in i.entries) + "]"


def render_group(g: "GroupElement") -> str:
    return "{" + ",".join(str(c) for c in g.coords) + "}"


def monomial_factors(m: "Monomial") -> list[str]:
    factors = []
    if not m.alpha.is_zero:
        factors.append("x" + render_group(m.alpha))
    if m.idx.degree:
        factors.append("t" + render_index(m.idx))
    return factors


def render_monomial(m: "Monomial") -> str:
    return "*".join(monomial_factors(m)) or "1"


def render_term(c: Fraction, factors: list[str]) -> tuple[bool, str]:
    """返回 (是否为负, 去掉符号后的项)"""
    mag = abs(c)
    if not factors:
        return c < 0, fmt_fraction(mag)
    body = "*".join(factors)
    if mag != 1:
        body = f"{fmt_fraction(mag)}*{body}"
    return c < 0, body


def join_terms(terms: Iterable[tuple[bool, str]]) -> str:
    out = ""
    for k, (neg, body) in enumerate(terms):
        if k == 0:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out or "0"


def render_algebra(a: "AlgebraElement") -> str:
    return join_terms(render_term(c, monomial_factors(m)) for m, c in a)


def render_witt(w: "WittElement") -> str:
    return join_terms(render_term(c, [*monomial_factors(m), f"d{p}"]) for (m, p), c in w)


def render_basis(beta: "GroupElement", j: "MultiIndex") -> str:
    if len(j):
        return f"v{render_group(beta)}{render_index(j)}"
    return f"v{render_group(beta)}"


def render_module(v: "ModuleElement") -> str:
    return join_terms(render_term(c, [render_basis(beta, j)]) for (beta, j), c in v)


def render(value) -> str:
    """任意代数对象的规范文本"""
    from .algebra import AlgebraElement, MultiIndex
    from .lie import WittElement
    from .modules import ModuleElement

    match value:
        case AlgebraElement():
            return render_algebra(value)
        case WittElement():
            return render_witt(value)
        case ModuleElement():
            return render_module(value)
        case MultiIndex():
            return render_index(value)
        case _:
            return str(value)


def render_report(report: "Report") -> str:
    """verify / gens 的文本输出, 失败时附带可重放的反例"""
    line = f"{report.status.value:<4}  {report.check}  tested={report.tested}  {report.millis}ms"
    if report.note:
        line += f"  ({report.note})"
    lines = [line]
    if (ce := report.counterexample) is not None:
        lines += [f"    {k} = {v}" for k, v in ce.inputs.items()]
        lines += [f"    lhs = {ce.lhs}", f"    rhs = {ce.rhs}"]
    return "\n".join(lines)
