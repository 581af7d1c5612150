from leibniz_lab.algebra.structure import (
    Algebra,
    StructureTensor,
    apply_basis_change,
    bracket,
    derived_dims,
    is_ideal,
    is_leibniz,
    is_nilpotent,
    is_solvable,
    leibniz_defects,
    lower_central_dims,
    require_declared_nilradical,
    restrict,
    right_annihilator,
    sparse_bracket,
    verify_nilpotent_ideal,
)

__all__ = [
    "Algebra",
    "StructureTensor",
    "apply_basis_change",
    "bracket",
    "derived_dims",
    "is_ideal",
    "is_leibniz",
    "is_nilpotent",
    "is_solvable",
    "leibniz_defects",
    "lower_central_dims",
    "require_declared_nilradical",
    "restrict",
    "right_annihilator",
    "sparse_bracket",
    "verify_nilpotent_ideal",
]
