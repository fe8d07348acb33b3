"""Binary morphisms, unique decoding, and ultimately periodic words."""

from upmorph._core import (
    BinaryMorphism,
    CandidateRefuted,
    CommutationWitness,
    DomainError,
    Error,
    FalsifyConfig,
    FalsifyReport,
    FalsifySummary,
    FalsifyTrial,
    FitVerdict,
    InsufficientEvidenceError,
    InvariantViolationError,
    MorphismReport,
    NoDecodeError,
    PeriodicityEvidence,
    PhaseTrace,
    PreconditionError,
    RangeError,
    RootDecomposition,
    StreamExhaustedError,
    Substitution,
    TraceBlock,
    UPDecomposition,
    WordStream,
    canonicalize_up,
    check_up_fit,
    classify,
    classify_trace,
    common_root,
    commutes,
    decode,
    extract_phases,
    factor,
    falsify,
    fibonacci,
    named_stream,
    power,
    primitive_root,
    search_min_up,
    thue_morse,
    up_prefix,
)

__all__ = [
    "BinaryMorphism",
    "CandidateRefuted",
    "CommutationWitness",
    "DomainError",
    "Error",
    "FalsifyConfig",
    "FalsifyReport",
    "FalsifySummary",
    "FalsifyTrial",
    "FitVerdict",
    "InsufficientEvidenceError",
    "InvariantViolationError",
    "MorphismReport",
    "NoDecodeError",
    "PeriodicityEvidence",
    "PhaseTrace",
    "PreconditionError",
    "RangeError",
    "RootDecomposition",
    "StreamExhaustedError",
    "Substitution",
    "TraceBlock",
    "UPDecomposition",
    "WordStream",
    "canonicalize_up",
    "check_up_fit",
    "classify",
    "classify_trace",
    "common_root",
    "commutes",
    "decode",
    "extract_phases",
    "factor",
    "falsify",
    "fibonacci",
    "named_stream",
    "power",
    "primitive_root",
    "search_min_up",
    "thue_morse",
    "up_prefix",
]
