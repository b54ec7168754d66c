"""权模上的检查: 模公理、作用公式、平凡子模、循环性、权重数与平移同构"""

from collections import defaultdict, deque
from collections.abc import Callable, Iterable
from fractions import Fraction

from ..algebra import Monomial, MultiIndex, accumulate
from ..config import Context
from ..constants import WINDOW_NOTE
from ..data import Report, Window
from ..lattice import GroupDescriptor, GroupElement, Weight, membership
from ..lie import WittElement, bracket, d_monomial, window_family
from ..linalg import EchelonBasis, rank
from ..log import logger
from ..modules import (
    BasisKey,
    ModuleDescriptor,
    ModuleElement,
    ModuleKind,
    act,
    four_term_formula,
    shift_map,
    shifted_coordinate,
    weight_decompose,
)
from .base import Case, Recorder, Sampler, progress, suite

A_KINDS = (ModuleKind.A_MU, ModuleKind.A_MU_QUOTIENT)

ModuleSpec = tuple[ModuleKind, Weight]
"""(模类型, 参数), 描述符到检查内部才构造"""

HUB_NOTE = (
    "evidence: hub cyclicity holds under the doubled-window discard only, "
    "reachability is not transitive there; " + WINDOW_NOTE
)


def first_generator(G: GroupDescriptor) -> GroupElement:
    return GroupElement(tuple(int(k == 0) for k in range(G.m)))


def outside_mu(ctx: Context) -> Weight | None:
    """不在 Γ 中的 μ: 配置的 mu, 若它落在 Γ 中则取第一个生成元的一半"""
    G = ctx.group
    if membership(ctx.mu, G) is None:
        return ctx.mu
    if not G.m:
        return None
    half = Weight(tuple(c / 2 for c in G.ambient(first_generator(G)).entries))
    return half if membership(half, G) is None else None


def a_mu_values(ctx: Context) -> list[Weight]:
    """0、Γ 外的 μ 与 Γ 中的 μ, 去重后保持顺序"""
    values = [Weight.zero(ctx.group.l), outside_mu(ctx), ctx.mu_in_gamma]
    out: list[Weight] = []
    for mu in values:
        if mu is not None and mu not in out:
            out.append(mu)
    return out


def module_cases(ctx: Context) -> list[ModuleSpec]:
    """模公理检查覆盖的全部模"""
    l = ctx.group.l
    specs: list[ModuleSpec] = [(ModuleKind.A_MU, mu) for mu in a_mu_values(ctx)]
    for mu in (ctx.mu_in_gamma, Weight.zero(l)):
        specs.append((ModuleKind.A_MU_QUOTIENT, mu))
    if ctx.graded_group.l >= 3:
        specs.append((ModuleKind.GRADED_M, ctx.graded_mu))
        specs.append((ModuleKind.GRADED_A, ctx.graded_eta))
        specs.append((ModuleKind.GRADED_B, ctx.graded_eta))
    else:
        logger.warning(f"graded_l={ctx.graded_group.l} < 3, 跳过分次模")
    specs.append((ModuleKind.TRIVIAL, Weight.zero(l)))
    return list(dict.fromkeys(specs))


def vector(desc: ModuleDescriptor, pairs: Iterable[tuple[BasisKey | None, Fraction | int]]) -> ModuleElement:
    """由 (键, 系数) 拼出模元素, 键为 None 的项 (越界的下降) 丢弃"""
    out: dict[BasisKey, Fraction] = {}
    for key, c in pairs:
        if key is not None and c:
            accumulate(out, key, Fraction(c))
    return ModuleElement(desc, out)


def basis_element(desc: ModuleDescriptor, key: BasisKey) -> ModuleElement:
    return ModuleElement(desc, {key: 1})


def _at(beta: GroupElement, idx: MultiIndex | None) -> BasisKey | None:
    return None if idx is None else (beta, idx)


def _unit(G: GroupDescriptor, p: int) -> Monomial:
    return Monomial(G.zero(), MultiIndex.unit(p, G.signature.n_t))


def run_module_axiom(ctx: Context, desc: ModuleDescriptor, rec: Recorder, window: Window) -> None:
    """[a,b].v = a.(b.v) - b.(a.v), a、b 取自张成族, v 取窗口基向量"""
    ops = window_family(desc.group, window).operators()
    basis = desc.module.basis(window)
    if not ops or not basis:
        rec.details["empty"] = True
        return
    sampler = Sampler(ctx.seed, rec.check)
    for _ in progress(range(ctx.config.module_tuples), ctx, rec.check):
        a, b = sampler.choice(ops), sampler.choice(ops)
        v = basis_element(desc, sampler.choice(basis))
        lhs = act(bracket(a, b), v)
        rhs = act(a, act(b, v)) - act(b, act(a, v))
        if not rec.compare(lhs, rhs, a=a, b=b, v=v):
            return


def run_action_identities(desc: ModuleDescriptor, rec: Recorder, window: Window) -> None:
    """A_μ 上由作用规则推出的四组显式公式, 对窗口内全部组合逐一比较"""
    G = desc.group
    sig = G.signature
    module = desc.module
    basis = module.basis(window)
    for beta, i in basis:
        v = basis_element(desc, (beta, i))
        b = module.weight(beta)

        # t^{1_p} ∂_q 升高 t 的次数
        for p in sig.t_range:
            k = i.raised(p)
            for q in sig.directions:
                lhs = act(WittElement.operator(G, _unit(G, p), q), v)
                rhs = vector(desc, [((beta, k), b.at(q)), (_at(beta, k.lower(q)), i.at(q))])
                if not rec.compare(lhs, rhs, p=p, q=q, v=v):
                    return

        # t^{1_p} ∂_p - t^{1_q} ∂_q
        for p in sig.t_range:
            for q in sig.t_range:
                if p >= q:
                    continue
                op = WittElement.operator(G, _unit(G, p), p) - WittElement.operator(G, _unit(G, q), q)
                rhs = vector(
                    desc,
                    [
                        ((beta, i.raised(p)), b.at(p)),
                        ((beta, i.raised(q)), -b.at(q)),
                        ((beta, i), i.at(p) - i.at(q)),
                    ],
                )
                if not rec.compare(act(op, v), rhs, w=op, v=v):
                    return

        for r in sig.directions:
            lhs = act(WittElement.coordinate(G, r), v)
            rhs = vector(desc, [((beta, i), b.at(r)), (_at(beta, i.lower(r)), i.at(r))])
            if not rec.compare(lhs, rhs, r=r, v=v):
                return

        # D_{p,q}(x^α)
        zero_idx = MultiIndex.zero(sig.n_t)
        for alpha in window.group_elements(G):
            a = G.ambient(alpha)
            target = beta + alpha
            for p in sig.directions:
                for q in range(p + 1, sig.l + 1):
                    op = d_monomial(G, p, q, Monomial(alpha, zero_idx))
                    rhs = vector(
                        desc,
                        [
                            ((target, i), a.at(p) * b.at(q) - a.at(q) * b.at(p)),
                            (_at(target, i.lower(q)), a.at(p) * i.at(q)),
                            (_at(target, i.lower(p)), -a.at(q) * i.at(p)),
                        ],
                    )
                    if not rec.compare(act(op, v), rhs, w=op, v=v):
                        return


def graded_table(desc: ModuleDescriptor, p: int, q: int, alpha: GroupElement, beta: GroupElement) -> ModuleElement:
    """D_{p,q}(x^α).v_β 按分次模的作用表直接计算, α ≠ 0"""
    G = desc.group
    a = G.ambient(alpha)
    zero_idx = MultiIndex.zero(0)

    def skew(w: Weight) -> Fraction:
        return a.at(p) * w.at(q) - a.at(q) * w.at(p)

    target = alpha + beta
    match desc.kind:
        case ModuleKind.GRADED_M:
            c = skew(G.ambient(beta) + desc.parameter)
        case ModuleKind.GRADED_A if beta.is_zero:
            c = skew(desc.parameter)
        case ModuleKind.GRADED_B if target.is_zero:
            c = skew(desc.parameter)
        case _:
            c = skew(G.ambient(beta))
    return vector(desc, [((target, zero_idx), c)])


def run_graded_table(desc: ModuleDescriptor, rec: Recorder, window: Window) -> None:
    G = desc.group
    zero_idx = MultiIndex.zero(0)
    basis = desc.module.basis(window)
    for alpha in window.group_elements(G):
        if alpha.is_zero:
            continue
        for p in G.signature.directions:
            for q in range(p + 1, G.l + 1):
                op = d_monomial(G, p, q, Monomial(alpha, zero_idx))
                for key in basis:
                    v = basis_element(desc, key)
                    if not rec.compare(act(op, v), graded_table(desc, p, q, alpha, key[0]), w=op, v=v):
                        return


def run_weight_stability(ctx: Context, desc: ModuleDescriptor, rec: Recorder, window: Window) -> None:
    """(∂_r - w_r) 作用在权 w 的分量上不产生其他权的分量"""
    basis = desc.module.basis(window)
    if not basis:
        return
    sampler = Sampler(ctx.seed, rec.check + "/weights")
    zero = ModuleElement(desc)
    for _ in range(ctx.window.sample_count):
        v = vector(desc, [(key, c) for c, key in sampler.combination(basis, 4)])
        for w, part in weight_decompose(v).items():
            for r in desc.signature.directions:
                x = shifted_coordinate(part, r, w)
                stray = x - weight_decompose(x).get(w, zero)
                if not rec.compare(stray, zero, v=part, r=r):
                    return


def check_module(ctx: Context, desc: ModuleDescriptor, window: Window | None = None) -> Report:
    """模公理 + 该类模的显式作用公式"""
    window = window or ctx.window
    rec = Recorder(f"module_axiom[{desc}]")
    run_module_axiom(ctx, desc, rec, window)
    if not rec.failed and desc.kind in A_KINDS:
        run_action_identities(desc, rec, window)
    if not rec.failed and desc.kind.graded:
        run_graded_table(desc, rec, window)
    if not rec.failed and desc.kind is not ModuleKind.TRIVIAL:
        run_weight_stability(ctx, desc, rec, window)
    return rec.report()


def check_four_term(
    ctx: Context,
    mu: Weight,
    window: Window | None = None,
    pair: tuple[int, int] | None = None,
) -> Report:
    """act(D_{p,q}(x^α t^i), v_{β,j}) 与四项闭式逐一比较, 给定 pair 时只看这一对 (p, q)"""
    window = window or ctx.window
    G = ctx.group
    desc = ModuleDescriptor(ModuleKind.A_MU, mu, G)
    rec = Recorder(f"four_term[{desc}, D({pair[0]},{pair[1]})]" if pair else f"four_term[{desc}]")
    family = [mem for mem in window_family(G, window) if pair is None or (mem.p, mem.q) == pair]
    basis = desc.module.basis(window)
    for mem in progress(family, ctx, rec.check, total=len(family)):
        m = mem.monomial
        for beta, j in basis:
            v = basis_element(desc, (beta, j))
            lhs = act(mem.operator, v)
            rhs = four_term_formula(desc, mem.p, mem.q, m.alpha, m.idx, beta, j)
            if not rec.compare(lhs, rhs, w=mem.operator, v=v):
                return rec.report()
    return rec.report()


def check_trivial_submodule(ctx: Context, mu: Weight, window: Window | None = None) -> Report:
    """μ ∈ Γ 时每个张成族算子都零化 v_{-μ,0}"""
    window = window or ctx.window
    G = ctx.group
    desc = ModuleDescriptor(ModuleKind.A_MU, mu, G)
    rec = Recorder(f"trivial_submodule[{desc}]")
    coords = membership(mu, G)
    if coords is None:
        return rec.report(note="mu not in gamma")
    v = ModuleElement.basis_vector(desc, -coords)
    zero = ModuleElement(desc)
    for w in window_family(G, window).operators():
        if not rec.compare(act(w, v), zero, w=w, v=v):
            break
    return rec.report()


def check_quotient_consistency(ctx: Context, mu: Weight, window: Window | None = None) -> Report:
    """A_μ′ 的作用等于先在 A_μ 中作用再投影"""
    window = window or ctx.window
    G = ctx.group
    quotient = ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, mu, G)
    full = ModuleDescriptor(ModuleKind.A_MU, mu, G)
    rec = Recorder(f"quotient[{quotient}]")
    ops = window_family(G, window).operators()
    basis = quotient.module.basis(window)
    if not ops or not basis:
        return rec.report(note="empty window")
    sampler = Sampler(ctx.seed, rec.check)
    for _ in range(ctx.config.module_tuples):
        w, key = sampler.choice(ops), sampler.choice(basis)
        lhs = act(w, basis_element(quotient, key))
        rhs = ModuleElement(quotient, act(w, basis_element(full, key)).terms)
        if not rec.compare(lhs, rhs, w=w, v=basis_element(quotient, key)):
            break
    return rec.report()

def within(v: ModuleElement, bound: Window) -> bool:
    return all(bound.contains_group(beta) and j.degree <= bound.idx_degree for beta, j in v.terms)


def orbit_closure(
    start: ModuleElement,
    ops: list[WittElement],
    bound: Window,
    targets: list[ModuleElement] | None = None,
) -> tuple[EchelonBasis, list[ModuleElement]]:
    """start 在 ops 作用下生成的子空间, 越出 bound 的结果整体丢弃

    给定 targets 时全部进入张成空间即提前结束; 返回 (张成空间, 未到达的目标)。
    """
    span: EchelonBasis = EchelonBasis()
    queue: deque[ModuleElement] = deque()
    pending = list(targets) if targets is not None else None

    def visit(vec: ModuleElement) -> None:
        nonlocal pending
        if not within(vec, bound) or not span.add(vec.terms):
            return
        queue.append(vec)
        if pending is not None and len(pending) <= 4:
            pending = [t for t in pending if not span.contains(t.terms)]

    visit(start)
    while queue and pending != []:
        v = queue.popleft()
        for w in ops:
            visit(act(w, v))
            if pending == []:
                break
        if pending:
            pending = [t for t in pending if not span.contains(t.terms)]
    return span, pending or []


def residual(span: EchelonBasis, target: ModuleElement) -> ModuleElement:
    """target 模去 span 的余项, 非零即说明 target 不在 span 中"""
    return ModuleElement(target.descriptor, span.reduce(target.terms))


def annihilated(rec: Recorder, v: ModuleElement, ops: list[WittElement]) -> None:
    """每个算子都零化 v, 反例给出 w.v 与 0"""
    zero = ModuleElement(v.descriptor)
    for w in ops:
        if not rec.compare(act(w, v), zero, w=w, v=v):
            return


def evidence_window(ctx: Context) -> Window:
    """循环性证据用的窗口, |i| 至多为 1"""
    w = ctx.window
    return Window(w.gamma_radius, min(w.idx_degree, 1), w.sample_count, w.seed)


def _hub(basis: list[BasisKey]) -> BasisKey:
    return min(basis, key=lambda k: (sum(abs(c) for c in k[0].coords), k[1].degree, k))


def check_irreducibility_evidence(ctx: Context, desc: ModuleDescriptor, window: Window | None = None) -> Report:
    """窗口内的循环性证据

    每个基向量的轨道都含中心向量, 且中心向量的轨道含全部基向量,
    则每个基向量在窗口尺度上都是循环向量。μ ∈ Γ 的 A_μ 改为检查 v_{-μ,0} 只生成自身。
    越出加倍窗口的结果被丢弃后可达关系不再传递, 所以这只是证据。
    """
    window = window or evidence_window(ctx)
    bound = window.doubled()
    G = desc.group
    rec = Recorder(f"irreducibility[{desc}]")
    ops = window_family(G, window).operators()
    coords = membership(desc.parameter, G)

    if desc.kind is ModuleKind.A_MU and coords is not None:
        v = ModuleElement.basis_vector(desc, -coords)
        span, _ = orbit_closure(v, ops, bound)
        rec.details["trivial_orbit_dim"] = span.rank
        annihilated(rec, v, ops)
        return rec.report(note="reducible: " + WINDOW_NOTE)

    basis = desc.module.basis(window)
    if not ops or not basis:
        return rec.report(note="empty window")
    hub = basis_element(desc, _hub(basis))
    targets = [basis_element(desc, key) for key in basis]

    span, missed = orbit_closure(hub, ops, bound, targets)
    rec.tested += 1
    rec.details["hub"] = str(hub)
    rec.details["hub_orbit_dim"] = span.rank
    if missed:
        rec.fail(str(residual(span, missed[0])), "0", v=hub, target=missed[0])
        return rec.report(note=HUB_NOTE)

    cyclic = 0
    for key in progress(basis, ctx, rec.check):
        v = basis_element(desc, key)
        span, missed = orbit_closure(v, ops, bound, [hub])
        rec.tested += 1
        if missed:
            rec.fail(str(residual(span, hub)), "0", v=v, target=hub)
            break
        cyclic += 1
    rec.details["cyclic_vectors"] = cyclic
    return rec.report(note=HUB_NOTE)


def weight_dimensions(desc: ModuleDescriptor, window: Window) -> dict[GroupElement, int]:
    """每个窗口 β 上 dim V_{w}^{(0)}, w 为 v_{β,·} 的广义权

    在窗口张成空间上精确求 (∂_r - w_r) 方程组的零空间维数。
    """
    module = desc.module
    by_beta: dict[GroupElement, list[BasisKey]] = defaultdict(list)
    for key in module.basis(window):
        by_beta[key[0]].append(key)
    dims: dict[GroupElement, int] = {}
    for beta in window.group_elements(desc.group):
        keys = by_beta.get(beta, [])
        if not keys:
            dims[beta] = 0
            continue
        w = module.weight(beta)
        rows: dict[tuple[int, BasisKey], list[Fraction]] = {}
        for col, key in enumerate(keys):
            for r in desc.signature.directions:
                image = shifted_coordinate(basis_element(desc, key), r, w)
                for out_key, c in image.terms.items():
                    rows.setdefault((r, out_key), [Fraction(0)] * len(keys))[col] = c
        dims[beta] = len(keys) - rank(list(rows.values()), len(keys))
    return dims


def weight_representative(desc: ModuleDescriptor, beta: GroupElement, window: Window) -> ModuleElement:
    """权 w(β) 上的一个非零基向量, 商模在 v_{-μ,0} 处改取 |j| 最小的其余向量"""
    keys = [key for key in desc.module.basis(window) if key[0] == beta]
    return basis_element(desc, min(keys, key=lambda k: (k[1].degree, k))) if keys else ModuleElement(desc)


def check_weight_multiplicities(ctx: Context, desc: ModuleDescriptor, window: Window | None = None) -> Report:
    """A_0′ 在权 0 上重数为 l1+l2, 其余为 1; A_μ 全部为 1; 实现的权集合等于窗口 Γ 的像"""
    window = window or ctx.window
    G = desc.group
    rec = Recorder(f"multiplicity[{desc}]")
    dims = weight_dimensions(desc, window)
    null = None
    if desc.kind is ModuleKind.A_MU_QUOTIENT:
        coords = membership(desc.parameter, G)
        null = -coords if coords is not None else None
    n_t = G.signature.n_t
    module = desc.module
    realized: set[Weight] = set()
    for beta, dim in dims.items():
        expected = n_t if beta == null else 1
        rec.tested += 1
        if dim != expected:
            v = weight_representative(desc, beta, window)
            rec.fail(str(dim), str(expected), v=v, weight=module.weight(beta))
        if dim:
            realized.add(module.weight(beta))
    expected_weights = {module.weight(beta) for beta in dims if not (beta == null and n_t == 0)}
    rec.tested += 1
    if realized != expected_weights:
        w = min(realized ^ expected_weights, key=str)
        rec.fail(str(int(w in realized)), str(int(w in expected_weights)), weight=w)
    if null is not None:
        rec.details["null_weight_dim"] = dims.get(null, 0)
    rec.details["weights"] = len(realized)
    return rec.report(note=WINDOW_NOTE if dims else "empty window")


def check_shift_iso(
    ctx: Context,
    mu: Weight,
    gamma: GroupElement,
    window: Window | None = None,
    direction: int | None = None,
) -> Report:
    """v_{β,j} ↦ v_{β-γ,j} 与作用交换: A_μ ≅ A_{μ+γ}

    A_μ 是整个 W 的模, 逐个检查窗口内的 x^α t^i ∂_p 即可, 张成族的情形由线性得到。
    """
    window = window or ctx.window
    G = ctx.group
    desc = ModuleDescriptor(ModuleKind.A_MU, mu, G)
    directions = [direction] if direction is not None else list(G.signature.directions)
    suffix = f", d{direction}" if direction is not None else ""
    rec = Recorder(f"shift[{desc}, {gamma}{suffix}]")
    ops = [WittElement.operator(G, m, p) for m in window.monomials(G) for p in directions]
    basis = desc.module.basis(window)
    for w in progress(ops, ctx, rec.check):
        for key in basis:
            v = basis_element(desc, key)
            lhs = act(w, shift_map(v, gamma))
            rhs = shift_map(act(w, v), gamma)
            if not rec.compare(lhs, rhs, w=w, v=v, gamma=gamma):
                return rec.report()
    return rec.report()


def check_graded_submodules(ctx: Context, desc: ModuleDescriptor, window: Window | None = None) -> Report:
    """报告 M_μ 在窗口内的候选真子模: 轨道不能覆盖窗口全部基向量的起点

    μ ∈ Γ 时 v_{-μ} 被所有算子零化, 必须出现在候选里。
    """
    window = window or ctx.window
    bound = window.doubled()
    G = desc.group
    rec = Recorder(f"graded_submodules[{desc}]")
    ops = window_family(G, window).operators()
    basis = desc.module.basis(window)
    targets = [basis_element(desc, key) for key in basis]
    candidates: list[str] = []
    dims: list[int] = []
    for key in basis:
        v = basis_element(desc, key)
        span, missed = orbit_closure(v, ops, bound, targets)
        rec.tested += 1
        if missed:
            candidates.append(str(v))
            dims.append(span.rank)
    rec.details["candidates"] = candidates
    rec.details["candidate_dims"] = dims
    coords = membership(desc.parameter, G)
    if coords is not None and window.contains_group(-coords):
        annihilated(rec, ModuleElement.basis_vector(desc, -coords), ops)
    return rec.report(note=WINDOW_NOTE)


def describe(ctx: Context, kind: ModuleKind, parameter: Weight) -> ModuleDescriptor:
    return ModuleDescriptor(kind, parameter, ctx.graded_group if kind.graded else ctx.group)


def run_described(
    ctx: Context,
    check: Callable[[Context, ModuleDescriptor], Report],
    kind: ModuleKind,
    parameter: Weight,
) -> Report:
    return check(ctx, describe(ctx, kind, parameter))


def module_case(name: str, check: Callable[[Context, ModuleDescriptor], Report], spec: ModuleSpec) -> Case:
    """描述符在检查内部构造, 参数不合法时只让这一项失败"""
    kind, parameter = spec
    return Case(
        f"{name}[{kind.value}{parameter}]",
        run_described,
        (check, kind, parameter),
        {"module": kind.value, "mu": parameter},
    )


def _pairs(G: GroupDescriptor) -> list[tuple[int, int]]:
    return [(p, q) for p in G.signature.directions for q in range(p + 1, G.l + 1)]


@suite("module_axiom", heavy=True)
def module_axiom_suite(ctx: Context) -> list[Case]:
    return [module_case("module_axiom", check_module, spec) for spec in module_cases(ctx)]


@suite("four_term", heavy=True)
def four_term_suite(ctx: Context) -> list[Case]:
    return [
        Case(f"four_term[A_mu{mu}, D({p},{q})]", check_four_term, (mu, None, (p, q)), {"mu": mu})
        for mu in a_mu_values(ctx)
        for p, q in _pairs(ctx.group)
    ]


@suite("trivial_submodule")
def trivial_submodule_suite(ctx: Context) -> list[Case]:
    mu = ctx.mu_in_gamma
    cases = [Case(f"trivial_submodule[A_mu{mu}]", check_trivial_submodule, (mu,), {"mu": mu})]
    for nu in dict.fromkeys((mu, Weight.zero(ctx.group.l))):
        cases.append(Case(f"quotient[A_mu_quotient{nu}]", check_quotient_consistency, (nu,), {"mu": nu}))
    return cases


@suite("irreducibility", heavy=True)
def irreducibility_suite(ctx: Context) -> list[Case]:
    l = ctx.group.l
    specs: list[ModuleSpec] = []
    if (mu := outside_mu(ctx)) is not None:
        specs.append((ModuleKind.A_MU, mu))
    specs.append((ModuleKind.A_MU, ctx.mu_in_gamma))
    specs.append((ModuleKind.A_MU_QUOTIENT, ctx.mu_in_gamma))
    specs.append((ModuleKind.A_MU_QUOTIENT, Weight.zero(l)))
    return [module_case("irreducibility", check_irreducibility_evidence, spec) for spec in dict.fromkeys(specs)]


@suite("multiplicity")
def multiplicity_suite(ctx: Context) -> list[Case]:
    specs: list[ModuleSpec] = [(ModuleKind.A_MU_QUOTIENT, Weight.zero(ctx.group.l))]
    if (mu := outside_mu(ctx)) is not None:
        specs.append((ModuleKind.A_MU, mu))
    return [module_case("multiplicity", check_weight_multiplicities, spec) for spec in specs]


@suite("shift", heavy=True)
def shift_suite(ctx: Context) -> list[Case]:
    G = ctx.group
    mu = outside_mu(ctx)
    if mu is None or not G.m:
        return []
    gamma = first_generator(G)
    return [
        Case(f"shift[A_mu{mu}, {gamma}, d{p}]", check_shift_iso, (mu, gamma, None, p), {"mu": mu, "gamma": gamma})
        for p in G.signature.directions
    ]


@suite("graded_submodules", heavy=True)
def graded_submodules_suite(ctx: Context) -> list[Case]:
    H = ctx.graded_group
    if H.l < 3:
        return []
    params = dict.fromkeys((ctx.graded_mu, Weight.zero(H.l)))
    return [
        module_case("graded_submodules", check_graded_submodules, (ModuleKind.GRADED_M, mu)) for mu in params
    ]
