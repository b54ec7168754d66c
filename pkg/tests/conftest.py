import pytest

from core.config import Context, build_context, load_config
from core.data import Window
from core.lattice import GroupDescriptor, Signature

SMALL = {
    "window_radius": 1,
    "window_degree": 1,
    "sample_count": 12,
    "module_tuples": 40,
    "max_workers": 2,
}


def make_ctx(**overrides) -> Context:
    return build_context(load_config(None, {**SMALL, **overrides}))


@pytest.fixture(scope="session")
def ctx() -> Context:
    """S(0,3,0;Z^3), 窗口半径 1、次数 1"""
    return make_ctx()


@pytest.fixture(scope="session")
def G(ctx: Context) -> GroupDescriptor:
    return ctx.group


@pytest.fixture(scope="session")
def mixed() -> GroupDescriptor:
    """(1,1,1): 三类方向都出现"""
    return GroupDescriptor.standard(Signature(1, 1, 1))


@pytest.fixture(scope="session")
def scaled() -> GroupDescriptor:
    """Γ 由非标准的有理生成元给出"""
    return GroupDescriptor(Signature(0, 2, 0), (("1/2", 0), (1, 3)))


@pytest.fixture
def tiny() -> Window:
    return Window(1, 0, sample_count=8)
