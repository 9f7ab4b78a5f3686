"""First- and second-order Reed-Muller codes, idempotent sub-code families,
exact weight distributions and the accompanying bounds."""

from .binlinalg import BitMatrix, BitVector, rank, row_space_contains, row_space_subset, systematic_form
from .boolfn import BooleanFunction, coset_weight_distribution_by_rank, hadamard_transform, is_bent, polarize
from .codes import (
    EquivalenceCertificate,
    LinearCode,
    WeightDistribution,
    minimum_distance,
    verify_first_order_rm,
    weight_distribution,
)
from .gf2m import GF2m, field
from .rm import SubcodeSpec, rm1, rm2, simplex, orthogonal, subcode, symplectic_group, weight_distribution_by_cosets

__version__ = "0.1.0"
