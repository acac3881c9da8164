"""Exact lattice cohomology over cyclic groups and rationality verdicts.

The package splits into five layers: exact integer matrices (intmat),
lattices over cyclic groups with Tate cohomology and flabby resolutions
(lattices), number-field ramification machinery (numfield), the explicit
descent lattice and the rationality classifier (noether), and a symbolic
monomial route that re-derives the same lattice independently
(monomials).  A command-line front end ties them together (cli).
"""

from .intmat import (
    Cokernel,
    IntMatrix,
    cokernel_invariants,
    determinant,
    kernel_basis,
    matrix_power_order,
    smith_normal_form,
    solve_exact,
    unimodular_inverse,
)
from .lattices import (
    CyclicGroup,
    FlabbinessReport,
    FlabbyResolution,
    PiLattice,
    ResolutionReport,
    Subgroup,
    TateGroup,
    direct_sum,
    dual,
    fixed_sublattice,
    flabbiness_report,
    flabby_resolution,
    lattice_from_text,
    lattice_to_text,
    norm_matrix,
    permutation_lattice,
    sign_lattice,
    subgroups,
    tate_h0,
    tate_h_minus1,
    trivial_lattice,
    verify_resolution,
    zero_lattice,
)
from .monomials import (
    InvariantBasis,
    Monomial,
    galois_action_matrix,
    invariant_basis,
    rescale_indices,
    shift_weight,
)
from .noether import (
    CLASS_NUMBER_ONE_PRIMES,
    NOT_STABLY_RATIONAL,
    RATIONAL,
    UNKNOWN,
    NoetherParams,
    Verdict,
    classify,
    noether_lattice,
    primitive_root,
    rational_field,
    verdict_table,
)
from .numfield import (
    EisensteinCheck,
    IntPolynomial,
    NumberFieldSpec,
    QuadraticSplitting,
    RamificationVerdict,
    cyclotomic_phi,
    dedekind_ramification,
    discriminant,
    eisenstein_check_quadratic,
    factor_mod_p,
    is_prime,
    quadratic_splitting,
    shifted_phi,
)

__version__ = "0.1.0"
