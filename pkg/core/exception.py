class AlgebraException(Exception):
    """异常基类"""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DimensionException(AlgebraException):
    """向量长度不匹配"""

    def __init__(self, expected: int, got: int, what: str = "向量"):
        super().__init__(f"{what}长度不匹配: 期望 {expected}, 实际 {got}")
        self.expected = expected
        self.got = got


class IndexRangeException(AlgebraException):
    """下标越界"""

    def __init__(self, index: int, low: int, high: int, what: str = "下标"):
        super().__init__(f"{what} {index} 越界, 允许范围 {low}..{high}")
        self.index = index


class DescriptorMismatchException(AlgebraException):
    """两个对象不属于同一个 Γ / 模"""

    def __init__(self, message: str | None = None):
        super().__init__(message or "参与运算的对象属于不同的群描述符")


class DegenerateGroupException(AlgebraException):
    """生成元线性相关或不满秩"""

    pass


class ModuleKindException(AlgebraException):
    """模类型与参数不匹配"""

    pass


class ModuleActionException(AlgebraException):
    """作用未定义, 如分次模上 ∂ ∉ ker α 的项"""

    def __init__(self, message: str, term: str | None = None):
        super().__init__(message)
        self.term = term


class WindowException(AlgebraException):
    """窗口参数非法或为空"""

    def __init__(self, message: str | None = None):
        super().__init__(message or "窗口为空")


class ExpressionSyntaxException(AlgebraException):
    """表达式语法错误"""

    def __init__(self, message: str, offset: int, token: str = ""):
        super().__init__(f"{message} (字节偏移 {offset}{f', 记号 {token!r}' if token else ''})")
        self.offset = offset
        self.token = token


class ConfigException(AlgebraException):
    """配置文件错误"""

    pass


class TermLimitException(AlgebraException):
    """元素项数超过配置上限"""

    def __init__(self, count: int, limit: int):
        super().__init__(f"元素含 {count} 项, 超过配置上限 max_terms={limit}")
        self.count = count
        self.limit = limit


class SpectrumException(AlgebraException):
    """遇到非有理特征值"""

    def __init__(self, message: str | None = None):
        super().__init__(message or "算子在窗口上出现非有理谱, 无法在有理数域上分解")
