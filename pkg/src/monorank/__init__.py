"""monorank: combinatorial lower bounds on the monotone rank of a matrix.

The monotone rank of a matrix is the smallest rank achievable after
applying an unknown strictly increasing distortion to each column.  This
package extracts the distortion-invariant order data of a matrix as sign
vectors and bounds the monotone rank from below four ways: Radon rank,
VC rank, Forster's spectral sign-rank bound, and oriented-matroid
completion rank.  Geometric generators (random low-rank representations,
arrangement topes and circuits, planar sweeps) provide independent oracles.
"""

from .arrangements import (
    AllowableSequence,
    HyperplaneArrangement,
    MonotoneDistortion,
    PointArrangement,
    ValidationReport,
    format_allowable_file,
    hyperplane_topes,
    matrix_from_allowable,
    parse_allowable_file,
    parse_points_csv,
    point_circuits,
    point_topes,
    random_representation,
    realize_matrix,
    sweep_permutations,
    validate_allowable,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    FormatError,
    GenericityError,
    MonorankError,
    ResourceLimitError,
)
from .matrices import (
    TieReport,
    check_generic,
    column_permutations,
    format_matrix_csv,
    parse_matrix,
    perturb_ties,
)
from .omatroid import (
    AxiomReport,
    AxiomViolation,
    CircuitCandidateSet,
    CompletionResult,
    MatrixCompletionRank,
    OmRankBound,
    check_circuit_axioms,
    is_rank2_topes,
    om_completion_rank_of_matrix,
    om_rank_lower_bound,
    potential_circuits,
    uniform_completion,
)
from .report import RankReport, build_report, encode_report
from .signs import (
    SignVector,
    SignVectorSet,
    compose,
    format_sign_file,
    negate,
    orthogonal,
    parse_sign_file,
    separator,
)
from .spectral import (
    encode_signs_as_matrix,
    forster_bound,
    hadamard,
    sign_matrix_with_columns,
    sign_matrix_with_rows,
    singular_values,
    spectral_norm,
)
from .topes import difference_topes, difference_vector, threshold_topes, threshold_vector
from .vc import radon_rank, shatters, vc_dimension, vc_rank

__version__ = "0.1.0"
