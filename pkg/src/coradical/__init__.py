"""Exact computations with finite-dimensional G-graded coalgebras and comodules."""
from .exactla import GF, QQ, FieldSpec, Matrix
from .graded import GradedMap, GradedSpace, Group, Subspace
from .coalg import Algebra, Coalgebra, NotSplitError, RadicalError, check_coalgebra, coradical_filtration, dual_algebra

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldSpec", "Matrix", "GradedMap", "GradedSpace", "Group", "Subspace", "Algebra", "Coalgebra",
    "NotSplitError", "RadicalError", "check_coalgebra", "coradical_filtration", "dual_algebra",
]
