# main.py

import argparse
import sys
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import msgspec

from core.algebra import AlgebraElement
from core.checks import GeneratorVariant, check_generators, run_suites
from core.config import Context, build_context, load_config
from core.constants import EXIT_FAIL, EXIT_OK, EXIT_USAGE, VERSION
from core.data import Status, VerifyOutput
from core.exception import AlgebraException, ModuleKindException, TermLimitException
from core.expr import Value, parse, parse_index
from core.lattice import Weight
from core.lie import WittElement, apply, bracket, divergence
from core.log import logger, setup_logging
from core.modules import (
    ModuleDescriptor,
    ModuleElement,
    ModuleKind,
    act,
    order_compare,
    weight_decompose,
)
from core.render import render, render_report
from core.utils import to_fraction


@dataclass(slots=True)
class Outcome:
    """命令结果: 文本、JSON 载荷与退出码"""

    text: str
    payload: Any
    code: int = EXIT_OK


Handler = Callable[["DivfreeCLI", argparse.Namespace], Outcome]

_COMMANDS: dict[str, Handler] = {}
""" 命令名 → 处理函数 """


def command(name: str):
    """注册命令处理函数"""

    def decorator(func: Handler) -> Handler:
        _COMMANDS[name] = func
        return func

    return decorator


def read_operand(text: str | None) -> str:
    """参数为 "-" 或缺省时从 stdin 读取"""
    if text is None or text == "-":
        return sys.stdin.read().strip()
    return text


def parse_weight(text: str, l: int) -> Weight:
    body = text.strip().strip("[](){}")
    entries = [to_fraction(part.strip()) for part in body.split(",") if part.strip()]
    if len(entries) != l:
        raise AlgebraException(f"--mu 应有 {l} 个分量, 实际 {len(entries)}")
    return Weight(tuple(entries))


class DivfreeCLI:
    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.config = ctx.config

    # region 工具

    def _check_size(self, value: Value) -> None:
        limit = self.config.max_terms
        if limit and len(value) > limit:
            raise TermLimitException(len(value), limit)

    def _element(self, value: Value) -> Outcome:
        self._check_size(value)
        text = render(value)
        return Outcome(text, {"result": text})

    def _witt(self, text: str) -> WittElement:
        return parse(read_operand(text), self.ctx.group, self.ctx.rho, expect=WittElement)  # type: ignore[return-value]

    def _module(self, args: argparse.Namespace) -> ModuleDescriptor:
        try:
            kind = ModuleKind(args.module)
        except ValueError:
            raise ModuleKindException(f"未知的模类型: {args.module!r}")
        group = self.ctx.graded_group if kind.graded else self.ctx.group
        if args.mu is not None:
            mu = parse_weight(args.mu, group.l)
        elif kind is ModuleKind.A_MU:
            mu = self.ctx.mu
        else:
            mu = Weight.zero(group.l)
        return ModuleDescriptor(kind, mu, group)

    # endregion

    # region 命令

    @command("bracket")
    def do_bracket(self, args: argparse.Namespace) -> Outcome:
        """[A, B]"""
        return self._element(bracket(self._witt(args.a), self._witt(args.b)))

    @command("apply")
    def do_apply(self, args: argparse.Namespace) -> Outcome:
        """W 作用在 A 中元素上"""
        w = self._witt(args.w)
        f = parse(read_operand(args.f), self.ctx.group, self.ctx.rho, expect=AlgebraElement)
        return self._element(apply(w, f))  # type: ignore[arg-type]

    @command("div")
    def do_div(self, args: argparse.Namespace) -> Outcome:
        return self._element(divergence(self._witt(args.w)))

    @command("act")
    def do_act(self, args: argparse.Namespace) -> Outcome:
        """W 作用在模元素上"""
        desc = self._module(args)
        group = desc.group
        w = parse(read_operand(args.w), group, self.ctx.rho, expect=WittElement)
        v = parse(read_operand(args.v), group, self.ctx.rho, module=desc, expect=ModuleElement)
        return self._element(act(w, v))  # type: ignore[arg-type]

    @command("decompose")
    def do_decompose(self, args: argparse.Namespace) -> Outcome:
        """按广义权分解模元素"""
        desc = self._module(args)
        v = parse(read_operand(args.v), desc.group, self.ctx.rho, module=desc, expect=ModuleElement)
        self._check_size(v)
        parts = weight_decompose(v)  # type: ignore[arg-type]
        rows = sorted((str(w), render(part)) for w, part in parts.items())
        text = "\n".join(f"{w}: {part}" for w, part in rows) or "0"
        return Outcome(text, {"components": dict(rows)})

    @command("order")
    def do_order(self, args: argparse.Namespace) -> Outcome:
        result = order_compare(parse_index(args.i), parse_index(args.j))
        return Outcome(result.value, {"result": result.value})

    @command("gens")
    def do_gens(self, args: argparse.Namespace) -> Outcome:
        """生成元集合的窗口闭包"""
        report = check_generators(self.ctx, GeneratorVariant(args.variant))
        code = EXIT_OK if report.passed else EXIT_FAIL
        return Outcome(render_report(report), report, code)

    @command("verify")
    def do_verify(self, args: argparse.Namespace) -> Outcome:
        names = None if args.suite == "all" else [args.suite]
        reports = run_suites(self.ctx, names)
        status = Status.PASS if all(r.passed for r in reports) else Status.FAIL
        text = "\n".join(render_report(r) for r in reports)
        text += f"\n{status.value}: {sum(r.passed for r in reports)}/{len(reports)} checks passed"
        code = EXIT_OK if status is Status.PASS else EXIT_FAIL
        return Outcome(text, VerifyOutput(status=status, reports=reports), code)

    # endregion

    def dispatch(self, args: argparse.Namespace) -> Outcome:
        return _COMMANDS[args.command](self, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divfree",
        description="非分次无散度 Lie 代数 S(l1,l2,l3;ρ,Γ) 及其权模的精确计算与验证",
    )
    parser.add_argument("--version", action="version", version=VERSION)
    parser.add_argument("--config", help="JSON 配置文件, 未给出的键取 _conf_schema.json 的默认值")
    parser.add_argument("--json", action="store_true", help="以 JSON 输出结果")
    parser.add_argument("--window-radius", type=int, help="覆盖 window_radius")
    parser.add_argument("--window-degree", type=int, help="覆盖 window_degree")
    parser.add_argument("--seed", type=int, help="覆盖 seed")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v 输出 info, -vv 输出 debug")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="W 中的 Lie 括号 [A, B]")
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p = sub.add_parser("apply", help="W 中元素作用在 A 中元素上")
    p.add_argument("w")
    p.add_argument("f", nargs="?")
    p = sub.add_parser("div", help="散度")
    p.add_argument("w", nargs="?")

    for name, help_text in (("act", "W 中元素作用在模元素上"), ("decompose", "模元素的广义权分解")):
        p = sub.add_parser(name, help=help_text)
        if name == "act":
            p.add_argument("w")
        p.add_argument("v", nargs="?")
        p.add_argument("--module", default=ModuleKind.A_MU.value, help="模类型: " + ", ".join(k.value for k in ModuleKind))
        p.add_argument("--mu", help="模参数 μ 或 η, 如 1/2,0,0")

    p = sub.add_parser("order", help="多重指标的全序比较")
    p.add_argument("i")
    p.add_argument("j")
    p = sub.add_parser("gens", help="生成元集合的窗口闭包")
    p.add_argument("--variant", choices=[v.value for v in GeneratorVariant], default=GeneratorVariant.LOW_DEGREE.value)
    p = sub.add_parser("verify", help="运行检查套件")
    p.add_argument("--suite", default="all", help="检查套件名或 all")
    return parser


def emit(outcome: Outcome, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(msgspec.json.encode(outcome.payload).decode() + "\n")
    else:
        sys.stdout.write(outcome.text + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = load_config(
            args.config,
            {"window_radius": args.window_radius, "window_degree": args.window_degree, "seed": args.seed},
        )
        ctx = build_context(config)
        outcome = DivfreeCLI(ctx).dispatch(args)
    except AlgebraException as e:
        logger.debug("命令失败", exc_info=True)
        sys.stderr.write(f"错误: {e.message}\n")
        return EXIT_USAGE
    emit(outcome, args.json)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
