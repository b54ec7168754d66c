"""生成元集合在窗口内的括号闭包"""

from collections import defaultdict
from collections.abc import Iterator
from enum import Enum
from fractions import Fraction

from ..algebra import Monomial
from ..config import Context
from ..constants import WINDOW_NOTE
from ..data import Report, Window
from ..lattice import GroupDescriptor, GroupElement
from ..lie import WittElement, bracket, window_family
from ..linalg import EchelonBasis
from ..log import logger
from .base import Case, Recorder, suite


class GeneratorVariant(str, Enum):
    LOW_DEGREE = "prop21"
    """全部 D_{p,q}(x^α) (α ≠ 0) 与 |j| <= 2 的 D_{p,q}(t^j)"""
    NONZERO_ALPHA = "cor22"
    """全部 D_{p,q}(x^α t^i) (α ≠ 0)"""


def generator_set(G: GroupDescriptor, window: Window, variant: GeneratorVariant) -> list[WittElement]:
    family = window_family(G, window)
    cap = min(2, window.idx_degree)
    out: list[WittElement] = []
    for mem in family:
        alpha, degree = mem.monomial.alpha, mem.monomial.idx.degree
        match variant:
            case GeneratorVariant.LOW_DEGREE:
                keep = degree == 0 if not alpha.is_zero else degree <= cap
            case GeneratorVariant.NONZERO_ALPHA:
                keep = not alpha.is_zero
        if keep:
            out.append(mem.operator)
    return out


def target_set(G: GroupDescriptor, window: Window, variant: GeneratorVariant) -> list[WittElement]:
    """α ≠ 0 的全部窗口算子, 以及 t 部分 (NONZERO_ALPHA 只要 |i| <= 2)"""
    family = window_family(G, window)
    cap = window.idx_degree if variant is GeneratorVariant.LOW_DEGREE else min(2, window.idx_degree)
    return [
        mem.operator
        for mem in family
        if not mem.monomial.alpha.is_zero or mem.monomial.idx.degree <= cap
    ]


def homogeneous_degree(w: WittElement) -> GroupElement | None:
    """w 为 Γ 齐次时返回其次数"""
    alphas = {m.alpha for m, _ in w.terms}
    return next(iter(alphas)) if len(alphas) == 1 else None


Pair = tuple[WittElement, WittElement]


class BracketClosure:
    """生成元反复取括号得到的子空间, 只保留落在窗口内的结果

    子代数由生成元的右结合迭代括号张成, 所以每轮只需把新元素与生成元配对。
    生成元全是 Γ 齐次时张成空间按次数分块保存, 括号次数等于两边次数之和,
    每轮先算次数之和等于某个未覆盖目标次数的配对。
    """

    def __init__(self, G: GroupDescriptor, window: Window, generators: list[WittElement]):
        self.group = G
        self.window = window
        self.generators = [g for g in generators if g]
        self.graded = all(homogeneous_degree(g) is not None for g in self.generators)
        self.spans: dict[GroupElement | None, EchelonBasis] = {}
        self._by_degree: dict[GroupElement, list[WittElement]] = defaultdict(list)
        if self.graded:
            for g in self.generators:
                self._by_degree[homogeneous_degree(g)].append(g)  # type: ignore[index]
        self.frontier: list[WittElement] = [g for g in self.generators if self.add(g)]
        self.rounds = 0

    @property
    def rank(self) -> int:
        return sum(span.rank for span in self.spans.values())

    def _key(self, w: WittElement) -> GroupElement | None:
        return homogeneous_degree(w) if self.graded else None

    def add(self, w: WittElement) -> bool:
        return self.spans.setdefault(self._key(w), EchelonBasis()).add(w.terms)

    def residual(self, w: WittElement) -> WittElement:
        """w 模去闭包后的余项; 分块保存时逐个齐次分量约化"""
        if not self.graded:
            span = self.spans.get(None)
            return WittElement(self.group, span.reduce(w.terms) if span else w.terms)
        out: dict[tuple[Monomial, int], Fraction] = {}
        for gamma, part in w.by_alpha().items():
            vec = {(Monomial(gamma, idx), p): c for (idx, p), c in part.items()}
            if (span := self.spans.get(gamma)) is not None:
                vec = span.reduce(vec)
            out.update(vec)
        return WittElement(self.group, out)

    def contains(self, w: WittElement) -> bool:
        return not self.residual(w).terms

    def _pairs(self, pending: list[WittElement]) -> Iterator[Pair]:
        if not self.graded:
            for f in self.frontier:
                for g in self.generators:
                    yield f, g
            return
        wanted = {d for t in pending if (d := homogeneous_degree(t)) is not None}
        for f in self.frontier:
            a = homogeneous_degree(f)
            for d in wanted:
                for g in self._by_degree.get(d - a, ()):  # type: ignore[operator]
                    yield f, g
        for f in self.frontier:
            a = homogeneous_degree(f)
            for b, gs in self._by_degree.items():
                total = a + b  # type: ignore[operator]
                if total in wanted or not self.window.contains_group(total):
                    continue
                yield from ((f, g) for g in gs)

    def step(self, pending: list[WittElement]) -> list[WittElement]:
        """一轮扩张, 返回仍未覆盖的目标; 目标全部覆盖时提前结束本轮"""
        new: list[WittElement] = []
        for f, g in self._pairs(pending):
            b = bracket(f, g)
            if not b or not b.within(self.window) or not self.add(b):
                continue
            new.append(b)
            key = self._key(b)
            pending = [t for t in pending if (self.graded and homogeneous_degree(t) != key) or not self.contains(t)]
            if not pending:
                break
        self.frontier = new
        self.rounds += 1
        logger.debug(f"闭包第 {self.rounds} 轮: 新增 {len(new)}, 维数 {self.rank}")
        return pending

    def close(self, targets: list[WittElement], max_rounds: int) -> list[WittElement]:
        """迭代到目标全部覆盖、不动点或轮数上限, 返回未覆盖的目标"""
        pending = [t for t in targets if not self.contains(t)]
        while pending and self.frontier and self.rounds < max_rounds:
            pending = self.step(pending)
        return pending


def check_generators(
    ctx: Context,
    variant: GeneratorVariant | str,
    generators: list[WittElement] | None = None,
    window: Window | None = None,
) -> Report:
    """生成元集合的括号闭包包含窗口内全部目标算子"""
    variant = GeneratorVariant(variant)
    window = window or ctx.window
    G = ctx.group
    rec = Recorder(f"generators[{variant.value}]")
    if not G.signature.wide_enough:
        return rec.report(note=f"signature {G.signature} outside l1+l2>=3, l2+l3>=3")
    gens = generators if generators is not None else generator_set(G, window, variant)
    targets = target_set(G, window, variant)
    closure = BracketClosure(G, window, gens)
    missed = closure.close(targets, ctx.config.closure_rounds)
    rec.tested = len(targets)
    rec.details.update(
        generators=len(closure.generators),
        targets=len(targets),
        span_dim=closure.rank,
        rounds=closure.rounds,
    )
    if not missed:
        return rec.report(note=WINDOW_NOTE)
    reason = "round cap" if closure.frontier else "fixpoint"
    rec.fail(str(closure.residual(missed[0])), "0", target=missed[0])
    rec.details["missed"] = len(missed)
    return rec.report(note=f"stopped at {reason}; {WINDOW_NOTE}")


@suite("generators", heavy=True)
def generators_suite(ctx: Context) -> list[Case]:
    return [Case(f"generators[{variant.value}]", check_generators, (variant,)) for variant in GeneratorVariant]
