"""Exact half-derivation analysis of finite-dimensional Lie algebras."""

from .catalog import DEFAULT_BETA, Family, FamilySpec, build, list_families
from .dersolve import (OperatorSpace, commutator_degrades, derivation_space,
                       delta_identity_violation, is_trivial_space)
from .errors import (DimensionMismatchError, HalfderError, ParameterError,
                     ParseError, UnsupportedFamilyError, ValidationError,
                     WitnessRefusalError)
from .exactlin import (Mat, Subspace, intersect, kernel_basis, member, rank,
                       rat, rat_from_str, rat_to_str, rref, solve)
from .liealg import LieAlgebra, roundtrip
from .locder import (CertifyOutcome, LocalSpaceResult, SamplingPlan,
                     evaluation_space, expected_locder_form, local_membership,
                     printed_form_notes, sampled_locder_space,
                     stratified_certify)
from .twolocal import (SeparatingCertificate, TwoLocalReport,
                       certify_two_local_rigidity, evaluation_injective,
                       find_separating_tuple, report_to_dict)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BETA", "Family", "FamilySpec", "build", "list_families",
    "OperatorSpace", "commutator_degrades", "derivation_space",
    "delta_identity_violation", "is_trivial_space",
    "DimensionMismatchError", "HalfderError", "ParameterError", "ParseError",
    "UnsupportedFamilyError", "ValidationError", "WitnessRefusalError",
    "Mat", "Subspace", "intersect", "kernel_basis", "member", "rank",
    "rat", "rat_from_str", "rat_to_str", "rref", "solve",
    "LieAlgebra", "roundtrip",
    "CertifyOutcome", "LocalSpaceResult", "SamplingPlan",
    "evaluation_space", "expected_locder_form", "local_membership",
    "printed_form_notes", "sampled_locder_space", "stratified_certify",
    "SeparatingCertificate", "TwoLocalReport", "certify_two_local_rigidity",
    "evaluation_injective", "find_separating_tuple", "report_to_dict",
    "__version__",
]
