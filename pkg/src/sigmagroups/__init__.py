"""Exhaustive finite permutation-group engine for prime-partition
permutability analysis."""

from .errors import (
    BadIso,
    BadPermutation,
    CapExceeded,
    Inconsistent,
    NotNormal,
    OverlappingBlocks,
    ParseError,
    PreconditionFailed,
    SigmaGroupsError,
)
from .perm import Permutation
from .group import (
    Group,
    Subgroup,
    basic_predicates,
    centralizer_of_factor,
    conjugate_subgroup,
    core,
    derived_subgroup,
    direct_product,
    generated_subgroup,
    group_from_generators,
    normal_closure,
    normalizer,
    product_permutes,
    product_set,
    quotient_group,
    subdirect_product,
    subgroup_as_group,
)
from .lattice import (
    ChiefSeries,
    SubgroupLattice,
    all_subgroups,
    chief_series,
    complement_search,
    frattini,
    hall_subgroups,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
)
from .sigma import (
    CompleteHallSigmaSet,
    O_sigma_lower,
    O_sigma_upper,
    SigmaPartition,
    complete_hall_sigma_sets,
    is_D_pi,
    is_sigma_full_sylow_type,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    sigma_of,
)
from .embeddings import (
    PermutabilityVerdict,
    SubnormalChain,
    hall_factorization_check,
    is_PsigmaT_transitive,
    is_PsigmaT_via_subnormal,
    is_hypercentrally_embedded,
    is_sigma_modular_everywhere,
    is_sigma_permutable,
    is_sigma_subnormal,
    satisfies_Y,
    sigma_hypercentre,
)
from .structure import (
    TheoremAReport,
    TheoremBReport,
    check_theorem_A,
    check_theorem_B,
    corollary_closure_check,
    induces_power_automorphisms,
    is_sigma_hall_subgroup,
    sigma_nilpotent_residual,
)
from .formats import (
    VerificationManifest,
    emit_group_file,
    emit_manifest,
    emit_sigma_file,
    parse_group_file,
    parse_manifest,
    parse_sigma_file,
)

__version__ = "0.1.0"
