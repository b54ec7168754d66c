"""检查套件的注册、抽样、报告与并行调度"""

import time
import zlib
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TypeVar

import numpy as np
from tqdm import tqdm

from ..config import Context
from ..constants import SAMPLE_DENOMINATORS, SAMPLE_NUMERATORS
from ..data import Counterexample, Report, Status
from ..exception import AlgebraException
from ..log import logger
from ..render import render

T = TypeVar("T")


@dataclass(slots=True)
class Case:
    """一项检查: 调度与出错隔离的最小单位

    出错时 inputs 原样写进反例, 可用 CLI 重放。
    """

    label: str
    func: Callable[..., Report]
    args: tuple[Any, ...] = ()
    inputs: dict[str, Any] = field(default_factory=dict)

    def run(self, ctx: Context) -> Report:
        start = time.perf_counter()
        try:
            return self.func(ctx, *self.args)
        except AlgebraException as e:
            logger.error(f"检查 {self.label} 出错: {e.message}")
            return error_report(self.label, e, self.inputs, start)


SuiteFunc = Callable[[Context], list[Case]]


@dataclass(frozen=True, slots=True)
class SuiteEntry:
    func: SuiteFunc
    heavy: bool


_SUITES: dict[str, SuiteEntry] = {}
""" 套件名 → 套件 """


def suite(name: str, heavy: bool = False):
    """注册检查套件装饰器, heavy 的套件先提交"""

    def decorator(func: SuiteFunc) -> SuiteFunc:
        if name in _SUITES:
            raise ValueError(f"检查套件 {name} 重复注册")
        _SUITES[name] = SuiteEntry(func, heavy)
        return func

    return decorator


def all_suites() -> dict[str, SuiteFunc]:
    return {name: entry.func for name, entry in _SUITES.items()}


def error_report(check: str, e: AlgebraException, inputs: dict[str, Any], start: float) -> Report:
    return Report(
        check=check,
        status=Status.FAIL,
        tested=0,
        counterexample=Counterexample(
            inputs={k: render(v) for k, v in inputs.items()},
            lhs=f"error: {e.message}",
            rhs="ok",
        ),
        millis=int((time.perf_counter() - start) * 1000),
        note="error",
    )


class Sampler:
    """每个套件一个, 种子为 SeedSequence(seed) 按套件名派生的子序列"""

    def __init__(self, seed: int, key: str):
        seq = np.random.SeedSequence(seed, spawn_key=(zlib.crc32(key.encode()),))
        self.rng = np.random.default_rng(seq)

    def coefficient(self) -> Fraction:
        """分子取 {-3..3}\\{0}, 分母取 {1,2,3}"""
        num = SAMPLE_NUMERATORS[int(self.rng.integers(len(SAMPLE_NUMERATORS)))]
        den = SAMPLE_DENOMINATORS[int(self.rng.integers(len(SAMPLE_DENOMINATORS)))]
        return Fraction(num, den)

    def index(self, n: int) -> int:
        return int(self.rng.integers(n))

    def choice(self, items: Sequence[T]) -> T:
        return items[self.index(len(items))]

    def combination(self, items: Sequence[T], size: int) -> list[tuple[Fraction, T]]:
        return [(self.coefficient(), self.choice(items)) for _ in range(size)]


class Recorder:
    """累计比较次数并保存第一个反例"""

    def __init__(self, check: str):
        self.check = check
        self.tested = 0
        self.counterexample: Counterexample | None = None
        self.details: dict[str, Any] = {}
        self._start = time.perf_counter()

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def compare(self, lhs, rhs, **inputs) -> bool:
        """lhs == rhs 时返回 True, 否则记下反例"""
        self.tested += 1
        if lhs == rhs:
            return True
        self.fail(render(lhs), render(rhs), **inputs)
        return False

    def fail(self, lhs: str, rhs: str, **inputs) -> None:
        if self.counterexample is None:
            self.counterexample = Counterexample(
                inputs={k: render(v) for k, v in inputs.items()}, lhs=lhs, rhs=rhs
            )
            logger.warning(f"{self.check} 失败: {self.counterexample.inputs}")

    def report(self, note: str | None = None) -> Report:
        millis = int((time.perf_counter() - self._start) * 1000)
        return Report(
            check=self.check,
            status=Status.FAIL if self.failed else Status.PASS,
            tested=self.tested,
            counterexample=self.counterexample,
            millis=millis,
            note=note,
            details=self.details,
        )


def progress(items: Iterable[T], ctx: Context, desc: str, total: int | None = None) -> Iterable[T]:
    """config.progress 为真时在 stderr 上显示进度条"""
    if not ctx.config.progress:
        return items
    return tqdm(items, desc=desc, total=total, leave=False, dynamic_ncols=True)


def _cases(name: str, ctx: Context) -> list[Case] | Report:
    """套件的全部检查; 列举本身出错时返回一份失败报告"""
    start = time.perf_counter()
    try:
        return _SUITES[name].func(ctx)
    except AlgebraException as e:
        logger.error(f"检查套件 {name} 出错: {e.message}")
        return error_report(name, e, {"suite": name}, start)


def _run(case: Case, ctx: Context) -> Report:
    logger.info(f"开始检查 {case.label}")
    report = case.run(ctx)
    logger.info(f"检查 {case.label} 完成, 用时 {report.millis}ms")
    return report


def _run_case(name: str, index: int, ctx: Context) -> Report:
    """子进程入口: 重新列举套件的检查并运行第 index 项"""
    cases = _cases(name, ctx)
    assert isinstance(cases, list)
    return _run(cases[index], ctx)


def run_suites(ctx: Context, names: Iterable[str] | None = None) -> list[Report]:
    """每项检查一个任务, 多于一项时交给进程池; 报告按检查名排序, 与调度顺序无关"""
    selected = list(names) if names is not None else sorted(_SUITES)
    for name in selected:
        if name not in _SUITES:
            raise AlgebraException(f"未知的检查套件: {name}, 可选 {', '.join(sorted(_SUITES))}")
    selected.sort(key=lambda name: not _SUITES[name].heavy)

    reports: list[Report] = []
    tasks: list[tuple[str, int, Case]] = []
    for name in selected:
        cases = _cases(name, ctx)
        if isinstance(cases, Report):
            reports.append(cases)
        else:
            tasks += [(name, k, case) for k, case in enumerate(cases)]

    workers = min(ctx.config.max_workers, len(tasks))
    if workers <= 1:
        reports += [_run(case, ctx) for _, _, case in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_case, name, k, ctx) for name, k, _ in tasks]
            reports += [future.result() for future in futures]
    return sorted(reports, key=lambda r: r.check)
