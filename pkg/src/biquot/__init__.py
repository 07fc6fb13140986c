"""Exact computation with two-sided (biquotient) actions of SU(2) and
SU(2)^2 on SU(4), SO(7) and Spin(7).

The package decides effective freeness of such actions with exact
rational arithmetic, built on an octonion model of the rank-4 rotation
group inside SO(8), signed-permutation Weyl groups, Smith normal form,
and a congruence solver on tori.
"""

__version__ = "0.1.0"

from .classify import (
    ClassificationReport,
    PairOutcome,
    TableMatchError,
    classify_su2,
    classify_su2xsu2,
    verify_table1,
)
from .freeness import (
    ActionSpec,
    DescentReport,
    FreenessVerdict,
    Witness,
    brute_force_oracle,
    descent_analysis,
    is_effectively_free,
    restriction_prune,
    verify_witness,
)
from .groups import (
    GroupModel,
    SignedPermutation,
    build_group_model,
    conjugators,
    orbit_of_relation,
    torus_conjugate,
    weyl_equivalent_weights,
)
from .linalg import (
    IntMatrix,
    RatMatrix,
    SnfResult,
    TorusPoint,
    TorusSubgroup,
    smith_normal_form,
    solve_affine_torus_congruence,
    solve_torus_congruence,
    subgroup_contained_in,
)
from .octonion import Octonion, clifford_hat, left_mult_matrix, oct_mul
from .reps import (
    CandidateMap,
    RepMultiset,
    Su2Irrep,
    Su2xSu2Irrep,
    TorusMap,
    enumerate_su2_complex,
    enumerate_su2_orthogonal,
    enumerate_su2xsu2_complex,
    enumerate_su2xsu2_orthogonal,
    parse_rep_spec,
    restrict_su2xsu2,
    spin7_lift,
    torus_weights,
)
from .spin7 import (
    SpinTorusParams,
    So8TorusPoint,
    spin_element,
    spin_to_so8_torus,
    so8_to_so7_torus,
)
