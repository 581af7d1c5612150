from leibniz_lab.linalg.matrix import (
    Echelon,
    EchelonBasis,
    ExactMatrix,
    flint_available,
    in_span,
    independent_subset,
    mat_vec,
    nullspace_basis,
    rank,
    row_reduce,
    span_rank,
    to_sparse,
    verify_inverse_pair,
)
from leibniz_lab.linalg.scalars import (
    LaurentScalar,
    as_laurent,
    as_rational,
    laurent_limit,
    parse_rational,
    render_rational,
)

__all__ = [
    "Echelon",
    "EchelonBasis",
    "ExactMatrix",
    "LaurentScalar",
    "as_laurent",
    "as_rational",
    "flint_available",
    "in_span",
    "independent_subset",
    "laurent_limit",
    "mat_vec",
    "nullspace_basis",
    "parse_rational",
    "rank",
    "render_rational",
    "row_reduce",
    "span_rank",
    "to_sparse",
    "verify_inverse_pair",
]
