"""Finite quadratic modules, their Jordan decompositions, and even lattices realizing them."""

from .jordan import best_pair, jordan_decomposition, standard_presentation
from .lattice import Lattice, OddLatticeError, discriminant_module, milgram_check
from .module import (
    BudgetExceeded,
    Component,
    DegenerateModuleError,
    Fqm,
    a_class,
    direct_sum,
    make_A,
    make_Am,
    make_B,
    make_C,
    make_D,
    normalize_D,
    primary_decomposition,
)
from .oracle import IsoResult, invariants_match, iso_oracle
from .qz import QZ, Mu8
from .realize import expected_min_rank, realize_even, realize_module, realize_posdef

__all__ = [
    "BudgetExceeded", "Component", "DegenerateModuleError", "Fqm", "IsoResult",
    "Lattice", "Mu8", "OddLatticeError", "QZ", "a_class", "best_pair",
    "direct_sum", "discriminant_module", "expected_min_rank", "invariants_match",
    "iso_oracle", "jordan_decomposition", "make_A", "make_Am", "make_B", "make_C",
    "make_D", "milgram_check", "normalize_D", "primary_decomposition",
    "realize_even", "realize_module", "realize_posdef", "standard_presentation",
]
