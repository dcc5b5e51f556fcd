"""Multiparticle entanglement classification for GHZ-diagonal qubit states.

The package classifies separability and distillability of an N-qubit
family of mixed states across every bipartite splitting of the parties,
certifies entanglement from measured diagonal data with error intervals,
verifies entanglement molecules pair by pair, and constructs the standard
bound-entanglement activation scenarios.  A dense partial-transpose
eigenvalue oracle cross-checks every coefficient-level verdict.
"""

from .activation import (
    InseparableSet,
    Scenario,
    example_i_state,
    example_ii_state,
    example_iii_state,
    mix,
    permute_parties,
    scenario_survey,
    subfamily_state,
    superactivation_example_1,
    superactivation_example_2,
)
from .classify import (
    EntanglementClassification,
    GroupedClassification,
    Verdict,
    can_distill_ghz,
    can_distill_pair,
    classify,
    classify_under_grouping,
    is_bound_entangled,
    is_l_separable,
)
from .detect import (
    Certification,
    DetectionVerdict,
    Interval,
    MeasuredCoefficients,
    WhiteNoiseAnalysis,
    detect,
    fidelity_extremal_state,
    fidelity_threshold_best_case,
    fidelity_threshold_worst_case,
    ghz_fidelity,
    white_noise_analysis,
)
from .family import (
    GhzDiagonalState,
    SVector,
    delta,
    depolarize,
    extract_coefficients,
    ghz_basis_state,
    ghz_with_white_noise,
    maximally_mixed,
    mix_with_white_noise,
    pure_ghz,
    s_vector,
    to_density_matrix,
)
from .molecules import (
    MoleculeReport,
    MoleculeSpec,
    PairVerdict,
    molecule_state,
    pair_state,
    pair_verdict,
    reduced_pair,
    verify_molecule,
)
from .partitions import (
    BipartiteSplitting,
    PartyGrouping,
    contains,
    enumerate_groupings,
    enumerate_splittings,
    relabel_splitting,
    sides_of,
    splitting_from_groups,
    splittings_compatible_with,
    splittings_separating,
)
from .qlinalg import (
    DEFAULT_MAX_QUBITS,
    CapacityError,
    DensityMatrix,
    StateVector,
    hermitian_eigenvalues,
    is_npt,
    min_pt_eigenvalue,
    partial_trace,
    partial_transpose,
    tensor_product,
)

__version__ = "0.1.0"
