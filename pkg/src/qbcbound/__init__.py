"""Squashed-entanglement upper bounds on entanglement-distillation and
secret-key rates over quantum broadcast channels."""

__version__ = "0.1.0"

from .bosonic import (
    BosonicBoundReport,
    BosonicBroadcastSpec,
    asymptotic_bound,
    finite_ns_bound,
    g,
    optimal_eta_star,
    theorem3_report,
)
from .errors import (
    DimMismatch,
    DomainError,
    EmptySubset,
    LabelCollision,
    LabelNotFound,
    NotPure,
    QbcError,
    RootError,
    SpecError,
    TooLarge,
)
from .measures import (
    BlockSpec,
    cmi_dual_measure,
    cmi_total,
    conditional_entropy,
    entropy,
    qcmi,
)
from .partitions import (
    ConstraintCoefficients,
    Partition,
    a_of,
    c_of,
    constraint_coefficients,
    nontrivial_partitions,
    parse_partition,
    subsets_geq2,
)
from .rates import (
    InputSearchConfig,
    RateConstraint,
    channel_output_state,
    evaluate_bounds,
    two_receiver_report,
)
from .squash import (
    Measure,
    SquashConfig,
    SquashResult,
    esq_cq_average,
    esq_exact_pure,
    esq_upper_variational,
)
from .states import (
    MultipartiteState,
    PrivateStateSpec,
    QuantumChannel,
    apply_channel,
    channel_from_json,
    channel_to_json,
    check_private_state,
    make_ghz,
    make_private_state,
    measurement_channel,
    partial_trace,
    purify,
    state_from_json,
    state_to_json,
    tensor,
    trace_distance,
)

__all__ = [
    "__version__",
    "BlockSpec",
    "BosonicBoundReport",
    "BosonicBroadcastSpec",
    "ConstraintCoefficients",
    "DimMismatch",
    "DomainError",
    "EmptySubset",
    "InputSearchConfig",
    "LabelCollision",
    "LabelNotFound",
    "Measure",
    "MultipartiteState",
    "NotPure",
    "Partition",
    "PrivateStateSpec",
    "QbcError",
    "QuantumChannel",
    "RateConstraint",
    "RootError",
    "SpecError",
    "SquashConfig",
    "SquashResult",
    "TooLarge",
    "a_of",
    "apply_channel",
    "asymptotic_bound",
    "c_of",
    "channel_from_json",
    "channel_output_state",
    "channel_to_json",
    "check_private_state",
    "cmi_dual_measure",
    "cmi_total",
    "conditional_entropy",
    "constraint_coefficients",
    "entropy",
    "esq_cq_average",
    "esq_exact_pure",
    "esq_upper_variational",
    "evaluate_bounds",
    "finite_ns_bound",
    "g",
    "make_ghz",
    "make_private_state",
    "measurement_channel",
    "nontrivial_partitions",
    "optimal_eta_star",
    "parse_partition",
    "partial_trace",
    "purify",
    "qcmi",
    "state_from_json",
    "state_to_json",
    "subsets_geq2",
    "tensor",
    "theorem3_report",
    "trace_distance",
    "two_receiver_report",
]
