"""Degrees and multiplicities of the Chow-dual factors of symmetrized hyperdeterminants."""

from .catalecticant import BinaryForm, catalecticant_det, catalecticant_matrix, power_sum_form
from .chowdeg import DegreeRow, DegreeTable, binary_chow_degree, is_hypersurface, solve_chow_degrees
from .discdeg import DEFAULT_MAX_TERMS, boole_degree, mu_discriminant_degree
from .errors import ConsistencyError, DomainError, ResourceError
from .factorization import Factor, FactorReport, factor_report, hyperdet_report
from .galeryser import binary_hyperdet_degree_gr, gale_ryser_count
from .partitions import (
    Partition,
    RefinementMatrix,
    chow_dimension,
    enumerate_partitions,
    multinomial,
    refinement_count,
    refinement_matrix_bruteforce,
    refines,
)
from .polyalg import Rational, SparsePoly, TruncatedSeries, coefficient, inverse_square, mul_truncated
from .symfunc import degree_identity_check, monomial_sym, power_sum, refinement_matrix_symfunc

__version__ = "0.1.0"
