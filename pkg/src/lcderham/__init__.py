"""Koszul and de Rham homology of graded local cohomology modules of
squarefree monomial ideals, in exact arithmetic."""

from lcderham.monomial import SquarefreeIdeal, parse_ideal, normalize_ideal
from lcderham.straight import (StraightModule, from_local_cohomology, injective_hull,
                               localization_module)
from lcderham.homology import (homology_tables, euler_characteristics, verify_main_theorem,
                               verify_localized_vanishing)

__version__ = "0.1.0"

__all__ = [
    "SquarefreeIdeal", "parse_ideal", "normalize_ideal", "StraightModule", "from_local_cohomology",
    "injective_hull", "localization_module", "homology_tables", "euler_characteristics",
    "verify_main_theorem", "verify_localized_vanishing",
]
