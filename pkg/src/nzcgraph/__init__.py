"""Non-zero component graphs of finite-dimensional vector spaces over GF(q)."""

from .errors import (
    BadSupportSize,
    CapExceeded,
    DimensionCap,
    FieldMismatch,
    NotPrimePower,
    NullVector,
    NZCError,
    SingularBasis,
    TheoremDiscrepancy,
    ZeroInverse,
)
from .ffield import FiniteField, field_arith, field_new
from .graph import (
    ClassGraph,
    ExplicitGraph,
    adjacent,
    class_graph,
    degree_formula,
    degree_of,
    edge_count_formula,
    expand,
    explicit_graph,
    to_dot,
)
from .invariants import (
    InvariantReport,
    build_report,
    diameter,
    domination_number,
    enumerate_independent_sets,
    independence_number,
    is_complete,
    max_minimal_dominating_size,
    verify_independence_implies_linear,
)
from .morphisms import (
    AutomorphismRecord,
    are_isomorphic,
    automorphisms,
    basis_change_iso_check,
    check_automorphism_form,
    is_linear_map,
    vertex_transitivity,
)
from .vspace import Basis, coords_in_basis, enumerate_vectors, rank, support

__version__ = "0.1.0"
