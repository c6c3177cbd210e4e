from .shadow import (
    SymStep,
    BranchEvent,
    OracleEvent,
    SymbolicTrace,
    FieldBoundaryReport,
    shadow_trace,
    field_boundary_check,
)
from .certify import (
    EpsilonCertificate,
    SampleResult,
    NeighborhoodReport,
    extract_f,
    epsilon_certificate,
    verify_neighborhood,
    DEFAULT_MAX_HALVINGS,
)
from .paths import (
    PathCondition,
    PathLeaf,
    PathTree,
    explore_paths,
    boundary_report,
    as_unipoly,
    STEP_CAP,
)

__all__ = [
    "SymStep",
    "BranchEvent",
    "OracleEvent",
    "SymbolicTrace",
    "FieldBoundaryReport",
    "shadow_trace",
    "field_boundary_check",
    "EpsilonCertificate",
    "SampleResult",
    "NeighborhoodReport",
    "extract_f",
    "epsilon_certificate",
    "verify_neighborhood",
    "DEFAULT_MAX_HALVINGS",
    "PathCondition",
    "PathLeaf",
    "PathTree",
    "explore_paths",
    "boundary_report",
    "as_unipoly",
    "STEP_CAP",
]
