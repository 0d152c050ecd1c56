from components.augment.augmentation import (
    AppliedAugmentation,
    Augmentation,
    apply_augmentation,
    find_augmentation,
    find_f1_improvement,
    validate_augmentation,
)
from components.augment.auxiliary import AuxiliaryGraph, build_auxiliary
from components.augment.iteration import (
    IterationConfig,
    IterationResult,
    TraceRow,
    iterate_expansion_improvement,
    trace_frame,
    trace_violations,
    write_trace,
)

__all__ = [
    "AppliedAugmentation",
    "Augmentation",
    "AuxiliaryGraph",
    "IterationConfig",
    "IterationResult",
    "TraceRow",
    "apply_augmentation",
    "build_auxiliary",
    "find_augmentation",
    "find_f1_improvement",
    "iterate_expansion_improvement",
    "trace_frame",
    "trace_violations",
    "validate_augmentation",
    "write_trace",
]
