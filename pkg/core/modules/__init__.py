from .amu import (
    AMuModule,
    AMuQuotientModule,
    act_monomial_op,
    four_term_formula,
    shift_descriptor,
    shift_map,
)
from .base import BaseModule, BasisKey, ModuleDescriptor, ModuleElement, ModuleKind, act
from .graded import GradedAModule, GradedBModule, GradedMModule, TrivialModule
from .weights import (
    filtration_degree,
    order_compare,
    order_key,
    shifted_coordinate,
    weight_decompose,
)

__all__ = [
    "AMuModule",
    "AMuQuotientModule",
    "BaseModule",
    "BasisKey",
    "GradedAModule",
    "GradedBModule",
    "GradedMModule",
    "ModuleDescriptor",
    "ModuleElement",
    "ModuleKind",
    "TrivialModule",
    "act",
    "act_monomial_op",
    "filtration_degree",
    "four_term_formula",
    "order_compare",
    "order_key",
    "shift_descriptor",
    "shift_map",
    "shifted_coordinate",
    "weight_decompose",
]
