"""Exact invariant Kahler geometry on generalized flag varieties.

The package computes, in arbitrary-precision rational arithmetic, the
invariant (1,1)-cohomology of a flag variety cut out by a simple Lie type
and a parabolic subset: anticanonical data, Lefschetz contractions and
eigenvalues, volumes and degrees, the degree-zero Picard lattice, and the
torus-bundle metric data built from it (Ricci-flat for every Hermitian
connection parameter below one, and balanced).  A small numeric lab
cross-checks the exact eigenvalue formulas on type-A big cells by finite
differences.
"""

from .errors import (
    DimensionMismatch,
    FlagcyError,
    IllConditioned,
    IndexOutOfRange,
    InvalidParameter,
    InvalidRank,
    NotIntegral,
    NotKahler,
    NotPrimitive,
    NotProportional,
    OddCount,
    PicardRankOne,
    TrivialBundle,
    UnsupportedType,
)
from .root_system import (
    LieType,
    PositiveRoot,
    RootDatum,
    Weight,
    build_root_datum,
    cartan_matrix,
    pairing,
    positive_root_count,
    root_as_weight,
    symmetrizer,
    weight_from,
    weyl_vector,
)
from .flag_geometry import (
    InvariantClass,
    ParabolicFlag,
    anticanonical_class,
    anticanonical_coeffs,
    anticanonical_weight,
    basis_class,
    class_from_coeffs,
    class_weight,
    degree,
    endomorphism_eigenvalues,
    fano_index,
    is_kahler,
    lefschetz_contraction,
    make_flag,
    ricci_class,
    volume,
    zero_class,
)
from .picard_lattice import (
    LineBundleClass,
    PrimitiveBasis,
    hodge_riemann_pairing,
    integer_combination,
    is_primitive,
    orthogonal_decompose,
    primitive_basis,
)
from .bundle_constructor import (
    BalancedDatum,
    GauduchonDatum,
    build_balanced,
    build_t_gauduchon,
    lee_form_coefficients,
    ricci_flat_scale,
    verify_c1_trivial,
    verify_coclosed,
    verify_ricci_flat,
)
from .potential_lab import (
    EigenvalueReport,
    check_eigenvalue_formula,
    kahler_potential,
    norm_sq_fundamental,
    numeric_form_at_origin,
    unipotent_matrix,
)

__version__ = "0.1.0"
