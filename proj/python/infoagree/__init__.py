"""Information agreement between two raters.

Matrices are square count tables: ``rows[y][x]`` counts the items rater Y put
in class ``y`` and rater X put in class ``x``.
"""

from ._core import (
    AgreementMatrix,
    ConvergenceReport,
    EpsilonEvaluation,
    IaCase,
    IaResult,
    InfoAgreeError,
    MatrixDocument,
    __version__,
    check_convergence,
    col_sums,
    count_non_null_cols,
    count_non_null_rows,
    entropy_from_counts,
    eval_ia_at,
    geometric_grid,
    ia_epsilon,
    ia_strict,
    ia_values,
    parse_csv,
    parse_json,
    row_sums,
    shannon_entropy,
    sweep,
    to_json,
    zero_freed_cells,
)

__all__ = [
    "AgreementMatrix",
    "ConvergenceReport",
    "EpsilonEvaluation",
    "IaCase",
    "IaResult",
    "InfoAgreeError",
    "MatrixDocument",
    "__version__",
    "check_convergence",
    "col_sums",
    "count_non_null_cols",
    "count_non_null_rows",
    "entropy_from_counts",
    "eval_ia_at",
    "geometric_grid",
    "ia_epsilon",
    "ia_strict",
    "ia_values",
    "parse_csv",
    "parse_json",
    "row_sums",
    "shannon_entropy",
    "sweep",
    "to_json",
    "zero_freed_cells",
]
