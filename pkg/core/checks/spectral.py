"""分次算子的特征拆分: S 中特征向量之和的各分量仍在 S 中"""

from collections.abc import Mapping
from fractions import Fraction

from ..algebra import Monomial, MultiIndex
from ..config import Context
from ..data import Report
from ..exception import SpectrumException
from ..lattice import GroupDescriptor
from ..lie import Term, WittElement, bracket, combine, divergence, window_family
from ..spectral import eigen_split
from .base import Case, Recorder, Sampler, suite


def grading_operator(G: GroupDescriptor, p: int, q: int) -> WittElement:
    """t^{1_p} ∂_p - t^{1_q} ∂_q"""
    n_t = G.signature.n_t

    def unit(r: int) -> Monomial:
        return Monomial(G.zero(), MultiIndex.unit(r, n_t))

    return WittElement.operator(G, unit(p), p) - WittElement.operator(G, unit(q), q)


def check_eigen_split(ctx: Context) -> Report:
    """ad(t^{1_p}∂_p - t^{1_q}∂_q) 拆分 D_{p,q}(t^i) 的随机组合, 每个分量都无散度且是特征向量

    ad 在 x^α (α ≠ 0) 的部分上会升高 t 的次数, 不可对角化, 所以只取 α = 0 的成员。
    """
    G, window = ctx.group, ctx.window
    rec = Recorder("eigen_split")
    sig = G.signature
    if sig.n_t < 2:
        return rec.report(note="needs l1+l2 >= 2")
    ops = [mem.operator for mem in window_family(G, window) if mem.monomial.alpha.is_zero]
    if not ops:
        return rec.report(note="no t-only family members")
    sampler = Sampler(ctx.seed, rec.check)
    eigenvalues: set[Fraction] = set()
    pairs = [(p, q) for p in sig.t_range for q in sig.t_range if p < q]

    for _ in range(window.sample_count):
        p, q = sampler.choice(pairs)
        grading = grading_operator(G, p, q)

        def ad(terms: Mapping[Term, Fraction]) -> dict[Term, Fraction]:
            return bracket(grading, WittElement(G, terms)).terms

        def divergence_free(terms: Mapping[Term, Fraction]) -> bool:
            return not divergence(WittElement(G, terms))

        v = combine(G, sampler.combination(ops, 4))
        try:
            split = eigen_split(ad, v.terms, divergence_free)
        except SpectrumException as e:
            rec.tested += 1
            rec.fail(f"error: {e.message}", "ok", v=v, grading=grading)
            break
        total = WittElement(G)
        for lam, comp in split.components.items():
            part = WittElement(G, comp)
            eigenvalues.add(lam)
            if not rec.compare(bracket(grading, part), part.scale(lam), v=part, grading=grading):
                break
            total = total + part
        if rec.failed or not rec.compare(total, v, v=v, grading=grading):
            break
        rec.tested += 1
        if not split.ok:
            lam = split.outside[0]
            part = WittElement(G, split.components[lam])
            rec.fail(str(divergence(part)), "0", v=part, grading=grading)
            break
    rec.details["eigenvalues"] = [str(x) for x in sorted(eigenvalues)]
    return rec.report()


@suite("eigen_split")
def eigen_split_suite(ctx: Context) -> list[Case]:
    return [Case("eigen_split", check_eigen_split)]
