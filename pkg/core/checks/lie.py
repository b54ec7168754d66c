"""W 与 S 上的结构检查"""

from fractions import Fraction
from itertools import permutations

from ..algebra import AlgebraElement, Monomial, MultiIndex, max_index, partial
from ..config import Context
from ..constants import WINDOW_NOTE
from ..data import Report, Window
from ..lattice import GroupDescriptor, GroupElement
from ..lie import (
    WittElement,
    apply,
    bracket,
    combine,
    d_monomial,
    d_op_closed,
    divergence,
    window_family,
)
from ..linalg import EchelonBasis
from ..utils import compositions
from .base import Case, Recorder, Sampler, progress, suite

NO_D1_NOTE = "vacuous: l1 = 0, no locally nilpotent partial derivative"


def random_witt(sampler: Sampler, G: GroupDescriptor, monomials: list[Monomial], terms: int = 3) -> WittElement:
    """窗口单项式算子的随机有理组合"""
    dirs = list(G.signature.directions)
    return combine(
        G,
        [
            (sampler.coefficient(), WittElement.operator(G, sampler.choice(monomials), sampler.choice(dirs)))
            for _ in range(terms)
        ],
    )


def random_algebra(sampler: Sampler, G: GroupDescriptor, monomials: list[Monomial], terms: int = 3) -> AlgebraElement:
    out = AlgebraElement(G)
    for _ in range(terms):
        out = out + AlgebraElement.monomial(G, sampler.choice(monomials), sampler.coefficient())
    return out


def check_lie_axioms(ctx: Context) -> Report:
    """反对称性与 Jacobi 恒等式"""
    G, window = ctx.group, ctx.window
    rec = Recorder("lie_axioms")
    sampler = Sampler(ctx.seed, rec.check)
    monomials = list(window.monomials(G))
    zero = WittElement(G)
    for _ in progress(range(window.sample_count), ctx, rec.check):
        a, b, c = (random_witt(sampler, G, monomials) for _ in range(3))
        ab = bracket(a, b)
        if not rec.compare(ab, -bracket(b, a), a=a, b=b):
            break
        jacobi = bracket(ab, c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
        if not rec.compare(jacobi, zero, a=a, b=b, c=c):
            break
    return rec.report()


def check_lie_action(ctx: Context) -> Report:
    """apply([u,v], f) = u(v(f)) - v(u(f))"""
    G, window = ctx.group, ctx.window
    rec = Recorder("lie_action")
    sampler = Sampler(ctx.seed, rec.check)
    monomials = list(window.monomials(G))
    for _ in progress(range(window.sample_count), ctx, rec.check):
        u, v = random_witt(sampler, G, monomials), random_witt(sampler, G, monomials)
        f = random_algebra(sampler, G, monomials)
        lhs = apply(bracket(u, v), f)
        rhs = apply(u, apply(v, f)) - apply(v, apply(u, f))
        if not rec.compare(lhs, rhs, u=u, v=v, f=f):
            break
    return rec.report()


def check_divergence_free(ctx: Context) -> Report:
    """张成族成员及其随机组合的散度为 0 (ρ = 0)"""
    G, window = ctx.group, ctx.window
    rec = Recorder("divergence_free")
    family = window_family(G, window)
    zero = AlgebraElement(G)
    for mem in progress(family, ctx, rec.check, total=len(family)):
        if not rec.compare(divergence(mem.operator), zero, w=mem.operator):
            return rec.report()
    if family.members:
        sampler = Sampler(ctx.seed, rec.check)
        ops = family.operators()
        for _ in range(window.sample_count):
            w = combine(G, sampler.combination(ops, 4))
            if not rec.compare(divergence(w), zero, w=w):
                break
    rec.details["family_size"] = len(family)
    return rec.report()


class HomogeneousSpans:
    """按 Γ 次数分块的窗口张成空间, 惰性构造"""

    def __init__(self, G: GroupDescriptor, window: Window):
        self.group = G
        self.window = window
        self.indices = [MultiIndex(e) for e in compositions(G.signature.n_t, window.idx_degree)]
        self._spans: dict[GroupElement, EchelonBasis] = {}

    def span(self, gamma: GroupElement) -> EchelonBasis:
        if (basis := self._spans.get(gamma)) is None:
            G = self.group
            directions = G.signature.directions
            basis = EchelonBasis()
            for idx in self.indices:
                m = Monomial(gamma, idx)
                for p in directions:
                    for q in directions:
                        if p < q:
                            basis.add(d_monomial(G, p, q, m).terms)
            self._spans[gamma] = basis
        return basis

    def residual(self, w: WittElement) -> WittElement:
        """各 Γ 齐次分量模去对应分块后的余项, 窗口外的分量整体保留"""
        out: dict[tuple[Monomial, int], Fraction] = {}
        for gamma, part in w.by_alpha().items():
            vec = {(Monomial(gamma, idx), p): c for (idx, p), c in part.items()}
            if self.window.contains_group(gamma):
                vec = self.span(gamma).reduce(vec)
            out.update(vec)
        return WittElement(self.group, out)


def check_subalgebra_closure(ctx: Context) -> Report:
    """张成族成员的括号落在加倍窗口的张成空间里"""
    G, window = ctx.group, ctx.window
    rec = Recorder("subalgebra")
    family = window_family(G, window)
    if not family.members:
        return rec.report(note="empty family")
    spans = HomogeneousSpans(G, window.doubled())
    sampler = Sampler(ctx.seed, rec.check)
    zero = WittElement(G)
    for _ in progress(range(window.sample_count), ctx, rec.check):
        a, b = sampler.choice(family.members), sampler.choice(family.members)
        residue = spans.residual(bracket(a.operator, b.operator))
        if not rec.compare(residue, zero, a=a.operator, b=b.operator):
            break
    return rec.report(note=WINDOW_NOTE)


def check_closed_form(ctx: Context) -> Report:
    """ρ = 0 时 D_{p,q}(x^α t^i) 与展开式一致"""
    G, window = ctx.group, ctx.window
    rec = Recorder("closed_form")
    pairs = list(permutations(G.signature.directions, 2))
    for m in progress(list(window.monomials(G)), ctx, rec.check):
        for p, q in pairs:
            if not rec.compare(d_monomial(G, p, q, m), d_op_closed(G, p, q, m), p=p, q=q, u=AlgebraElement(G, {m: 1})):
                return rec.report()
    return rec.report()


def unit(G: GroupDescriptor, p: int, times: int = 1) -> MultiIndex:
    return MultiIndex.unit(p, G.signature.n_t, times)


def t_only(G: GroupDescriptor, idx: MultiIndex) -> Monomial:
    return Monomial(G.zero(), idx)


def check_recurrence(ctx: Context) -> Report:
    """[D_{p,q}(x^α t^i), D_{r,s}(t^{2_[r]})] 的递推式"""
    G, window = ctx.group, ctx.window
    sig = G.signature
    rec = Recorder("identity_recurrence")
    if not sig.n_t:
        return rec.report(note="vacuous: l1+l2 = 0, no t directions")
    sampler = Sampler(ctx.seed, rec.check)
    monomials = list(window.monomials(G))
    dirs = list(sig.directions)
    t_dirs = list(sig.t_range)
    for _ in progress(range(window.sample_count), ctx, rec.check):
        m = sampler.choice(monomials)
        p, q, s = sampler.choice(dirs), sampler.choice(dirs), sampler.choice(dirs)
        r = sampler.choice(t_dirs)
        if r == s:
            continue
        alpha, i = m.alpha, m.idx
        amb = G.ambient(alpha)
        u = AlgebraElement(G, {m: 1})
        lhs = bracket(d_monomial(G, p, q, m), d_monomial(G, r, s, t_only(G, unit(G, r, 2))))
        raised = i + unit(G, r)
        parts: list[tuple[Fraction, WittElement]] = []
        if p == r:
            parts.append((Fraction(2), d_monomial(G, s, q, m)))
        if q == r:
            parts.append((Fraction(-2), d_monomial(G, s, p, m)))
        if (shifted := raised.lower(s)) is not None and i.at(s):
            parts.append((Fraction(-2 * i.at(s)), d_monomial(G, p, q, Monomial(alpha, shifted))))
        if amb.at(s):
            parts.append((-2 * amb.at(s), d_monomial(G, p, q, Monomial(alpha, raised))))
        rhs = combine(G, parts)
        if not rec.compare(lhs, rhs, a=d_monomial(G, p, q, m), b=d_monomial(G, r, s, t_only(G, unit(G, r, 2))), u=u):
            break
    return rec.report()


def check_grading_identities(ctx: Context) -> Report:
    """D_{p,q}(t^{1_[p]+1_[q]}) 在 D_{p,q}(t^i)、D_{q,r}(t^i)、D_{r,p}(t^i) 上的特征值"""
    G, window = ctx.group, ctx.window
    sig = G.signature
    rec = Recorder("identity_grading")
    t_dirs = list(sig.t_range)
    if len(t_dirs) < 2:
        return rec.report(note="vacuous: needs l1+l2 >= 2")
    indices = list(window.multi_indices(sig))
    for p, q in progress(list(permutations(t_dirs, 2)), ctx, rec.check):
        grading = d_monomial(G, p, q, t_only(G, unit(G, p) + unit(G, q)))
        for i in indices:
            base = i.at(q) - i.at(p)
            targets = [(p, q, base)]
            targets += [(q, r, base - 1) for r in t_dirs if r not in (p, q)]
            targets += [(r, p, base + 1) for r in t_dirs if r not in (p, q)]
            for a, b, eigen in targets:
                op = d_monomial(G, a, b, t_only(G, i))
                if not rec.compare(bracket(grading, op), op.scale(eigen), a=grading, b=op):
                    return rec.report()
    return rec.report()


def check_inverse_pair_identities(ctx: Context) -> Report:
    """[D_{r,q}(x^α t^{k·1_[p]}), D_{r,p}(x^{-α})] = k α_r t^{(k-1)·1_[p]}(α_r ∂_q - α_q ∂_r), k = 1, 2"""
    G, window = ctx.group, ctx.window
    sig = G.signature
    rec = Recorder("identity_inverse_pair")
    if not sig.n_t or sig.l < 3:
        return rec.report(note="vacuous: needs l1+l2 > 0 and l >= 3")
    n_t = sig.n_t
    dirs = list(sig.directions)
    for alpha in progress(list(window.group_elements(G)), ctx, rec.check):
        if alpha.is_zero:
            continue
        amb = G.ambient(alpha)
        zero_idx = MultiIndex.zero(n_t)
        for p in sig.t_range:
            for r, q in permutations(dirs, 2):
                if p in (r, q):
                    continue
                right = d_monomial(G, r, p, Monomial(-alpha, zero_idx))
                for k in (1, 2):
                    if k > window.idx_degree:
                        continue
                    left = d_monomial(G, r, q, Monomial(alpha, unit(G, p, k)))
                    lowered = Monomial(G.zero(), unit(G, p, k - 1) if k > 1 else zero_idx)
                    rhs = WittElement(
                        G,
                        {
                            (lowered, q): k * amb.at(r) * amb.at(r),
                            (lowered, r): -k * amb.at(r) * amb.at(q),
                        },
                    )
                    if not rec.compare(bracket(left, right), rhs, a=left, b=right):
                        return rec.report()
    return rec.report()


def check_transfer_identity(ctx: Context) -> Report:
    """[D_{p,s}(t^i), ½ D_{s,q}(t^{2_[s]})] = D_{p,q}(t^i), p,s ≤ l1+l2 < q"""
    G, window = ctx.group, ctx.window
    sig = G.signature
    rec = Recorder("identity_transfer")
    x_dirs = list(sig.d3)
    if not x_dirs or sig.n_t < 2:
        return rec.report(note="vacuous: needs l3 > 0 and l1+l2 >= 2")
    for i in progress(list(window.multi_indices(sig)), ctx, rec.check):
        for p, s in permutations(sig.t_range, 2):
            for q in x_dirs:
                half = d_monomial(G, s, q, t_only(G, unit(G, s, 2))).scale(Fraction(1, 2))
                left = d_monomial(G, p, s, t_only(G, i))
                if not rec.compare(bracket(left, half), d_monomial(G, p, q, t_only(G, i)), a=left, b=half):
                    return rec.report()
    return rec.report()


def check_partial_nilpotency(ctx: Context) -> Report:
    """p ≤ l1 时 ∂_p^K(a) = 0, K = 1 + 支撑上 i_p 的最大值"""
    G, window = ctx.group, ctx.window
    rec = Recorder("nilpotency_partial")
    if not G.signature.d1:
        return rec.report(note=NO_D1_NOTE)
    sampler = Sampler(ctx.seed, rec.check)
    monomials = list(window.monomials(G))
    zero = AlgebraElement(G)
    for p in G.signature.d1:
        for _ in range(window.sample_count):
            a = random_algebra(sampler, G, monomials)
            x = a
            for _ in range(1 + max_index(a, p)):
                x = partial(p, x)
            if not rec.compare(x, zero, p=p, a=a):
                return rec.report()
    return rec.report()


def check_ad_nilpotency(ctx: Context) -> Report:
    """p ≤ l1 时 ad ∂_p 在窗口算子上局部幂零"""
    G, window = ctx.group, ctx.window
    rec = Recorder("nilpotency_ad")
    if not G.signature.d1:
        return rec.report(note=NO_D1_NOTE)
    family = window_family(G, window)
    zero = WittElement(G)
    for p in G.signature.d1:
        d = WittElement.coordinate(G, p)
        for mem in family:
            x = mem.operator
            for _ in range(1 + mem.monomial.idx.at(p)):
                x = bracket(d, x)
            if not rec.compare(x, zero, p=p, w=mem.operator):
                return rec.report()
    return rec.report()


def check_local_finiteness(ctx: Context) -> Report:
    """ad ∂_r 保持每个 Γ 分块的窗口张成空间"""
    G, window = ctx.group, ctx.window
    rec = Recorder("local_finiteness")
    family = window_family(G, window)
    spans = HomogeneousSpans(G, window)
    zero = WittElement(G)
    for r in G.signature.directions:
        d = WittElement.coordinate(G, r)
        for mem in family:
            if not rec.compare(spans.residual(bracket(d, mem.operator)), zero, r=r, w=mem.operator):
                return rec.report()
    return rec.report()


@suite("lie_axioms")
def lie_axioms_suite(ctx: Context) -> list[Case]:
    return [Case("lie_axioms", check_lie_axioms), Case("lie_action", check_lie_action)]


@suite("divergence_free")
def divergence_suite(ctx: Context) -> list[Case]:
    return [Case("divergence_free", check_divergence_free)]


@suite("subalgebra")
def subalgebra_suite(ctx: Context) -> list[Case]:
    return [Case("subalgebra", check_subalgebra_closure)]


@suite("closed_form")
def closed_form_suite(ctx: Context) -> list[Case]:
    return [Case("closed_form", check_closed_form)]


@suite("identities")
def identities_suite(ctx: Context) -> list[Case]:
    return [
        Case("identity_recurrence", check_recurrence),
        Case("identity_grading", check_grading_identities),
        Case("identity_inverse_pair", check_inverse_pair_identities),
        Case("identity_transfer", check_transfer_identity),
    ]


@suite("nilpotency")
def nilpotency_suite(ctx: Context) -> list[Case]:
    return [
        Case("nilpotency_partial", check_partial_nilpotency),
        Case("nilpotency_ad", check_ad_nilpotency),
        Case("local_finiteness", check_local_finiteness),
    ]
