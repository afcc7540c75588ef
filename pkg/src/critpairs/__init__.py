"""Exact structure theory for small-doubling pairs in finite abelian groups."""

from critpairs.beyond import (
    Extendible16,
    PeriodicBranch,
    StructuredCertificate,
    beyond_classify,
    extensions16,
    outcome_label,
    structured_matches,
)
from critpairs.bounds import (
    clique_profile,
    sidon_check,
    theorem31_params,
    verify_graph_bijection,
)
from critpairs.certificates import certificate_to_dict, certificate_to_json
from critpairs.duality import dual_identity, dual_pairs, is_extendible, is_freiman_isomorphism
from critpairs.errors import (
    BudgetExceededError,
    CritPairsError,
    DomainError,
    InternalContradictionError,
    InvalidGroupError,
    ParseError,
    PreconditionError,
)
from critpairs.groups import (
    FiniteAbelianGroup,
    GroupSubset,
    Subgroup,
    make_group,
    parse_group,
    parse_subset,
)
from critpairs.harness import EnumerationTask, PairRecord, classify_one, emit_reports, enumerate_pairs
from critpairs.holes import hole_placement
from critpairs.kernel import compiled_available, default_backend
from critpairs.kst import KstCertificate, PeriodicReduction, critical_classify, kst_classify, kst_periodic_reduce
from critpairs.suites import SuiteReport, verify_suite
from critpairs.sumsets import distance, layers, nu, stabilizer, sumset
from critpairs.verify import verify_beyond_certificate, verify_critical, verify_kst_certificate

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CritPairsError",
    "DomainError",
    "EnumerationTask",
    "Extendible16",
    "FiniteAbelianGroup",
    "GroupSubset",
    "InternalContradictionError",
    "InvalidGroupError",
    "KstCertificate",
    "PairRecord",
    "ParseError",
    "PeriodicBranch",
    "PeriodicReduction",
    "PreconditionError",
    "StructuredCertificate",
    "Subgroup",
    "SuiteReport",
    "beyond_classify",
    "certificate_to_dict",
    "certificate_to_json",
    "classify_one",
    "clique_profile",
    "compiled_available",
    "critical_classify",
    "default_backend",
    "distance",
    "dual_identity",
    "dual_pairs",
    "emit_reports",
    "enumerate_pairs",
    "extensions16",
    "hole_placement",
    "is_extendible",
    "is_freiman_isomorphism",
    "kst_classify",
    "kst_periodic_reduce",
    "layers",
    "make_group",
    "nu",
    "outcome_label",
    "parse_group",
    "parse_subset",
    "sidon_check",
    "stabilizer",
    "structured_matches",
    "sumset",
    "theorem31_params",
    "verify_beyond_certificate",
    "verify_critical",
    "verify_graph_bijection",
    "verify_kst_certificate",
    "verify_suite",
]
