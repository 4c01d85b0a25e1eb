"""p-ary point-hyperplane incidence codes of PG(n,q).

Exact finite-field geometry, codeword constructions, small-weight
classification, vertex/plane decomposition and machine verification of the
supporting lemmas and bounds.
"""

from .bounds import BoundTable, QuadExt, a_value, bounds
from .classify import SpaceType, classify_plane, classify_space, short_long_check
from .code import (
    Codeword,
    incidence_vector,
    is_codeword,
    is_dual_codeword,
    linear_combination,
    pgcode_dump_path,
    pgcode_dumps,
    pgcode_load_path,
    pgcode_loads,
    restrict,
    scalar_product,
    secant_spectrum,
    subspace_dot,
    support_and_weight,
    zero_codeword,
)
from .construct import (
    OddParams,
    bagchi_codeword,
    cone_codeword,
    generalized_odd,
    random_small_weight,
)
from .decompose import (
    Decomposition,
    decompose,
    decompose_two_hyperplanes,
    find_3_secant,
    verify_decomposition,
)
from .field import FieldElement, FieldSpec, PrimeFieldElement, field_arith, field_make, prime_arith
from .geometry import (
    Collineation,
    Hyperplane,
    ProjPoint,
    Subspace,
    apply_collineation,
    flats_through,
    hyperplanes_through,
    meet,
    point_table,
    span,
    theta,
)
from .verify import (
    VerificationReport,
    check_blocking_lemma,
    exhaustive_spectrum,
    lemma_suite,
    verify_appendix,
    verify_weight_theorems,
)

__version__ = "0.1.0"
