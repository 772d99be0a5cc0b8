"""Syzygy package: graded syzygies, mu-bases, Koszul homology, Rees layers and the base locus"""

from .baselocus import BaseLocusClass, BaseLocusKind, dim_base_locus, quotient_dimension
from .koszul import (KoszulHomologyPiece, KoszulPiece, h1_coordinates, koszul_cycles,
                     koszul_differential, koszul_H1)
from .mubasis import MuBasis, hilbert_burch_check, mu_basis
from .rees import (ReesEquationLayer, ReesInfeasibleError, downgrade, rees_layer,
                   substitute_maps, upgrade_syzygy)
from .syzygies import (MultiplicationMap, SyzygyGenerator, SyzygyPiece, coefficient_vector,
                       initial_syzygy_degree, minimal_generators_up_to, multiplication_map,
                       stacked_vector, syzygies_in_degree)

__all__ = [
    "SyzygyPiece", "SyzygyGenerator", "MultiplicationMap", "MuBasis", "KoszulPiece",
    "KoszulHomologyPiece", "ReesEquationLayer", "ReesInfeasibleError",
    "syzygies_in_degree", "minimal_generators_up_to", "initial_syzygy_degree",
    "multiplication_map", "coefficient_vector", "stacked_vector",
    "mu_basis", "hilbert_burch_check",
    "koszul_cycles", "koszul_differential", "koszul_H1", "h1_coordinates",
    "upgrade_syzygy", "downgrade", "rees_layer", "substitute_maps",
    "BaseLocusKind", "BaseLocusClass", "dim_base_locus", "quotient_dimension",
]
