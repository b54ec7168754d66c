from .base import Recorder, Sampler, all_suites, run_suites, suite
from .generators import GeneratorVariant, check_generators
from .lie import check_divergence_free, check_lie_axioms, check_subalgebra_closure
from .modules import (
    check_irreducibility_evidence,
    check_module,
    check_shift_iso,
    check_weight_multiplicities,
)
from .order import check_total_order
from .spectral import check_eigen_split

__all__ = [
    "GeneratorVariant",
    "Recorder",
    "Sampler",
    "all_suites",
    "check_divergence_free",
    "check_eigen_split",
    "check_generators",
    "check_irreducibility_evidence",
    "check_lie_axioms",
    "check_module",
    "check_shift_iso",
    "check_subalgebra_closure",
    "check_total_order",
    "check_weight_multiplicities",
    "run_suites",
    "suite",
]
