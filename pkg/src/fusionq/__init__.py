"""Exact fusion-procedure elements of the finite Hecke algebra H_n."""

from .exact_arith import PoleError, RationalFunctionQ, RationalFunctionQT
from .fusion import FusionResult, FusionSpec, evaluate_F, evaluate_G
from .hecke import RATQ, HeckeElement, t_gen, t_sigma
from .symmetric_group import Permutation
from .tableaux import Partition, StandardTableau, hook_tableau, standard_tableaux

__all__ = [
    "PoleError", "RationalFunctionQ", "RationalFunctionQT", "FusionResult", "FusionSpec",
    "evaluate_F", "evaluate_G", "RATQ", "HeckeElement", "t_gen", "t_sigma",
    "Permutation", "Partition", "StandardTableau", "hook_tableau", "standard_tableaux",
]

__version__ = "0.1.0"
