"""配置: _conf_schema.json 的默认值 ← 用户 JSON ← 命令行覆盖"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import msgspec
from msgspec import Struct, field

from .constants import CONF_SCHEMA_FILE
from .data import Window
from .exception import AlgebraException, ConfigException
from .lattice import GroupDescriptor, GroupElement, Signature, Weight, membership
from .log import logger
from .utils import to_fraction

RationalText = str | int


class Config(Struct, frozen=True, forbid_unknown_fields=True):
    l1: int
    l2: int
    l3: int
    generators: list[list[RationalText]] = field(default_factory=list)
    mu: list[RationalText] = field(default_factory=list)
    mu_in_gamma: list[RationalText] = field(default_factory=list)
    rho: list[int] = field(default_factory=list)
    window_radius: int = 1
    window_degree: int = 2
    sample_count: int = 100
    module_tuples: int = 500
    seed: int = 0
    max_terms: int = 0
    closure_rounds: int = 8
    graded_l: int = 3
    graded_mu: list[RationalText] = field(default_factory=list)
    graded_eta: list[RationalText] = field(default_factory=list)
    max_workers: int = 4
    progress: bool = False

    def __post_init__(self):
        for name in (
            "window_radius",
            "window_degree",
            "max_terms",
            "closure_rounds",
        ):
            if getattr(self, name) < 0:
                raise ConfigException(f"{name} 不能为负: {getattr(self, name)}")
        for name in ("sample_count", "module_tuples", "max_workers", "graded_l"):
            if getattr(self, name) < 1:
                raise ConfigException(f"{name} 必须为正: {getattr(self, name)}")


def schema_defaults(schema_file: Path = CONF_SCHEMA_FILE) -> dict[str, Any]:
    try:
        schema = msgspec.json.decode(schema_file.read_bytes())
    except (OSError, msgspec.DecodeError) as e:
        raise ConfigException(f"无法读取配置模式 {schema_file}: {e}")
    return {key: entry["default"] for key, entry in schema.items()}


def load_config(path: Path | str | None = None, overrides: dict[str, Any] | None = None) -> Config:
    merged = schema_defaults()
    if path is not None:
        try:
            user = msgspec.json.decode(Path(path).read_bytes())
        except OSError as e:
            raise ConfigException(f"无法读取配置文件 {path}: {e}")
        except msgspec.DecodeError as e:
            raise ConfigException(f"配置文件 {path} 不是合法 JSON: {e}")
        if not isinstance(user, dict):
            raise ConfigException(f"配置文件 {path} 顶层必须是对象")
        merged.update(user)
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value
    try:
        config = msgspec.convert(merged, Config)
    except msgspec.ValidationError as e:
        raise ConfigException(f"配置不合法: {e}")
    logger.debug(f"配置: {config}")
    return config


def _fractions(values: list[RationalText], what: str) -> tuple[Fraction, ...]:
    try:
        return tuple(to_fraction(v) for v in values)
    except ConfigException as e:
        raise ConfigException(f"{what}: {e.message}")


@dataclass(slots=True)
class Context:
    """由 Config 导出的全部代数对象"""

    config: Config
    signature: Signature
    group: GroupDescriptor
    mu: Weight
    mu_in_gamma: Weight
    rho: GroupElement
    window: Window
    graded_group: GroupDescriptor
    graded_mu: Weight
    graded_eta: Weight

    @property
    def seed(self) -> int:
        return self.config.seed


def build_context(config: Config) -> Context:
    try:
        sig = Signature(config.l1, config.l2, config.l3)
        if config.generators:
            gens = tuple(_fractions(g, "generators") for g in config.generators)
            group = GroupDescriptor(sig, gens)
        else:
            group = GroupDescriptor.standard(sig)

        mu = Weight(_fractions(config.mu, "mu")) if config.mu else Weight.zero(sig.l)
        group.check_weight(mu, "mu")

        if config.mu_in_gamma:
            mu_in = Weight(_fractions(config.mu_in_gamma, "mu_in_gamma"))
            group.check_weight(mu_in, "mu_in_gamma")
            if membership(mu_in, group) is None:
                raise ConfigException(f"mu_in_gamma={mu_in} 不在 Γ 中")
        elif group.m:
            mu_in = group.ambient(GroupElement(tuple(int(k == 0) for k in range(group.m))))
        else:
            mu_in = Weight.zero(sig.l)

        rho = group.element(config.rho) if config.rho else group.zero()
        window = Window(config.window_radius, config.window_degree, config.sample_count, config.seed)

        graded_sig = Signature(0, 0, config.graded_l)
        graded_group = GroupDescriptor.standard(graded_sig)
        graded_mu = (
            Weight(_fractions(config.graded_mu, "graded_mu"))
            if config.graded_mu
            else Weight.zero(config.graded_l)
        )
        graded_eta = (
            Weight(_fractions(config.graded_eta, "graded_eta"))
            if config.graded_eta
            else Weight.zero(config.graded_l)
        )
        graded_group.check_weight(graded_mu, "graded_mu")
        graded_group.check_weight(graded_eta, "graded_eta")
        if graded_eta.is_zero:
            raise ConfigException("graded_eta 不能为零向量, A_η 与 B_η 要求 η ≠ 0")
    except ConfigException:
        raise
    except AlgebraException as e:
        raise ConfigException(f"配置不合法: {e.message}")

    return Context(
        config=config,
        signature=sig,
        group=group,
        mu=mu,
        mu_in_gamma=mu_in,
        rho=rho,
        window=window,
        graded_group=graded_group,
        graded_mu=graded_mu,
        graded_eta=graded_eta,
    )
