"""表达式语法 (完整 EBNF 见 docs/grammar.ebnf)

    expr   = [sign] term {sign term}
    term   = factor {["*"] factor}
    factor = rational | x{c,...} | t[i,...] | dP | D(p,q; expr) | v{c,...}[j,...] | (expr)

一个项内至多一个算子因子 (dP、D(...)、向量场括号式) 或一个模向量。
"""

from dataclasses import dataclass, field
from fractions import Fraction

import pyparsing as pp

from .algebra import AlgebraElement, Monomial, MultiIndex
from .exception import AlgebraException, ExpressionSyntaxException
from .lattice import GroupDescriptor, GroupElement
from .lie import WittElement, d_op
from .modules import ModuleDescriptor, ModuleElement

pp.ParserElement.enable_packrat()

Value = AlgebraElement | WittElement | ModuleElement


@dataclass(slots=True)
class Node:
    loc: int
    token: str


@dataclass(slots=True)
class Num(Node):
    value: Fraction = Fraction(0)


@dataclass(slots=True)
class XFactor(Node):
    coords: tuple[int, ...] = ()


@dataclass(slots=True)
class TFactor(Node):
    entries: tuple[int, ...] = ()


@dataclass(slots=True)
class DFactor(Node):
    p: int = 0


@dataclass(slots=True)
class DOp(Node):
    p: int = 0
    q: int = 0
    body: "Sum | None" = None


@dataclass(slots=True)
class VFactor(Node):
    coords: tuple[int, ...] = ()
    idx: tuple[int, ...] | None = None


@dataclass(slots=True)
class Paren(Node):
    body: "Sum | None" = None


@dataclass(slots=True)
class Term(Node):
    factors: list[Node] = field(default_factory=list)


@dataclass(slots=True)
class Sum(Node):
    terms: list[tuple[int, Term]] = field(default_factory=list)


def _build_grammar() -> tuple[pp.ParserElement, pp.ParserElement]:
    LBRACE, RBRACE, LBRACK, RBRACK, LPAR, RPAR, COMMA, SEMI, STAR = map(pp.Suppress, "{}[](),;*")

    integer = pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))
    natural = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
    int_list = pp.Group(pp.Opt(pp.DelimitedList(integer)))
    nat_list = pp.Group(pp.Opt(pp.DelimitedList(natural)))

    def rational_action(s, loc, t):
        text = "".join(t[0].split())
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            raise pp.ParseFatalException(s, loc, f"分母为 0: {text}")
        return Num(loc, text, value)

    rational = pp.Regex(r"\d+(?:\s*/\s*\d+)?").set_parse_action(rational_action)

    expr = pp.Forward()

    xfac = (pp.Suppress("x") + LBRACE + int_list + RBRACE).set_parse_action(
        lambda s, loc, t: XFactor(loc, f"x{{{','.join(map(str, t[0]))}}}", tuple(t[0]))
    )
    tfac = (pp.Suppress("t") + LBRACK + nat_list + RBRACK).set_parse_action(
        lambda s, loc, t: TFactor(loc, f"t[{','.join(map(str, t[0]))}]", tuple(t[0]))
    )
    dfac = pp.Regex(r"d\s*(?P<p>\d+)").set_parse_action(
        lambda s, loc, t: DFactor(loc, f"d{t['p']}", int(t["p"]))
    )
    dop = (
        pp.Suppress("D") + LPAR + natural + COMMA + natural + SEMI + expr + RPAR
    ).set_parse_action(lambda s, loc, t: DOp(loc, f"D({t[0]},{t[1]}; ...)", t[0], t[1], t[2]))
    vfac = (
        pp.Suppress("v") + LBRACE + int_list + RBRACE + pp.Opt(LBRACK + nat_list + RBRACK)
    ).set_parse_action(
        lambda s, loc, t: VFactor(
            loc,
            f"v{{{','.join(map(str, t[0]))}}}",
            tuple(t[0]),
            tuple(t[1]) if len(t) > 1 else None,
        )
    )
    paren = (LPAR + expr + RPAR).set_parse_action(lambda s, loc, t: Paren(loc, "(", t[0]))

    factor = rational | xfac | tfac | dfac | dop | vfac | paren
    term = (factor + pp.ZeroOrMore(pp.Opt(STAR) + factor)).set_parse_action(
        lambda s, loc, t: Term(loc, "", list(t))
    )
    sign = pp.one_of("+ -")

    def sum_action(s, loc, t):
        tokens = list(t)
        terms = [(-1 if tokens[k] == "-" else 1, tokens[k + 1]) for k in range(0, len(tokens), 2)]
        return Sum(loc, "", terms)

    expr <<= (pp.Opt(sign, default="+") + term + pp.ZeroOrMore(sign + term)).set_parse_action(sum_action)

    index = LBRACK + nat_list + RBRACK
    return expr + pp.StringEnd(), index + pp.StringEnd()


EXPRESSION, MULTI_INDEX = _build_grammar()


def byte_offset(text: str, loc: int) -> int:
    """pyparsing 给出字符位置, 报错统一用字节偏移"""
    return len(text[:loc].encode("utf-8"))


def _syntax_error(text: str, e: pp.ParseBaseException) -> ExpressionSyntaxException:
    token = text[e.loc : e.loc + 1] if e.loc < len(text) else "<EOF>"
    return ExpressionSyntaxException(f"语法错误: {e.msg}", byte_offset(text, e.loc), token)


class Evaluator:
    """把语法树求值为 A、W 或模中的元素"""

    def __init__(
        self,
        text: str,
        group: GroupDescriptor,
        rho: GroupElement | None = None,
        module: ModuleDescriptor | None = None,
    ):
        self.text = text
        self.group = group
        self.rho = rho if rho is not None else group.zero()
        self.module = module

    def fail(self, node: Node, message: str) -> ExpressionSyntaxException:
        return ExpressionSyntaxException(message, byte_offset(self.text, node.loc), node.token)

    def eval_sum(self, node: Sum) -> Value:
        total: Value | None = None
        for sign, term in node.terms:
            value = self.eval_term(term)
            if sign < 0:
                value = -value
            if total is None:
                total = value
            elif type(total) is not type(value):
                raise self.fail(term, "不能把不同类型的对象相加")
            else:
                total = total + value  # type: ignore[operator]
        assert total is not None
        return total

    def eval_term(self, node: Term) -> Value:
        G = self.group
        coeff = Fraction(1)
        alg: AlgebraElement | None = None
        op: WittElement | ModuleElement | None = None

        def put_op(value, at: Node):
            nonlocal op
            if op is not None:
                raise self.fail(at, "一个项里只能有一个算子或模向量")
            op = value

        for f in node.factors:
            try:
                match f:
                    case Num():
                        coeff *= f.value
                    case XFactor():
                        m = Monomial(G.element(f.coords), MultiIndex.zero(G.signature.n_t))
                        alg = self.mul(alg, AlgebraElement.monomial(G, m))
                    case TFactor():
                        m = Monomial(G.zero(), MultiIndex(f.entries))
                        alg = self.mul(alg, AlgebraElement.monomial(G, m))
                    case DFactor():
                        put_op(WittElement.coordinate(G, f.p), f)
                    case DOp():
                        assert f.body is not None
                        body = self.eval_sum(f.body)
                        if not isinstance(body, AlgebraElement):
                            raise self.fail(f, "D(p,q; u) 中的 u 必须是 A 中元素")
                        put_op(d_op(f.p, f.q, body, self.rho), f)
                    case VFactor():
                        put_op(self.vector(f), f)
                    case Paren():
                        assert f.body is not None
                        inner = self.eval_sum(f.body)
                        if isinstance(inner, AlgebraElement):
                            alg = self.mul(alg, inner)
                        else:
                            put_op(inner, f)
            except ExpressionSyntaxException:
                raise
            except AlgebraException as e:
                raise self.fail(f, e.message)

        match op:
            case None:
                base = alg if alg is not None else AlgebraElement.one(G)
                return base * coeff
            case WittElement():
                return (op.times(alg) if alg is not None else op).scale(coeff)
            case _:
                if alg is not None:
                    raise self.fail(node, "模向量不能乘以 A 中元素")
                return op.scale(coeff)

    @staticmethod
    def mul(a: AlgebraElement | None, b: AlgebraElement) -> AlgebraElement:
        return b if a is None else a * b

    def vector(self, f: VFactor) -> ModuleElement:
        if self.module is None:
            raise self.fail(f, "出现模向量 v{..}, 但没有指定模 (--module)")
        n_t = self.group.signature.n_t
        idx = MultiIndex(f.idx) if f.idx is not None else MultiIndex.zero(n_t)
        return ModuleElement.basis_vector(self.module, self.group.element(f.coords), idx)


def parse(
    text: str,
    group: GroupDescriptor,
    rho: GroupElement | None = None,
    module: ModuleDescriptor | None = None,
    expect: type | None = None,
) -> Value:
    """解析表达式; expect 给定时把零标量转为对应类型的零元素并检查类型"""
    try:
        tree = EXPRESSION.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise _syntax_error(text, e)
    value = Evaluator(text, group, rho, module).eval_sum(tree)
    if expect is None or isinstance(value, expect):
        return value
    if isinstance(value, AlgebraElement) and not value:
        if expect is WittElement:
            return WittElement(group)
        if expect is ModuleElement and module is not None:
            return ModuleElement(module)
    raise ExpressionSyntaxException(
        f"期望 {expect.__name__}, 实际得到 {type(value).__name__}", 0, text.strip()[:16]
    )


def parse_index(text: str, n: int | None = None) -> MultiIndex:
    """解析 "[1,1,0]" 形式的多重指标"""
    try:
        entries = MULTI_INDEX.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise _syntax_error(text, e)
    idx = MultiIndex(tuple(entries))
    if n is not None and len(idx) != n:
        raise ExpressionSyntaxException(f"多重指标长度应为 {n}, 实际 {len(idx)}", 0, text.strip())
    return idx
