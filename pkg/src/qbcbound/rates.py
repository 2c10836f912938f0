"""Rate-region constraints for finite-dimensional broadcast channels.

For each nontrivial partition of {R, receivers}, the achievable
entanglement/key rate combinations obey
(1/2) sum_M |A(M, G)| (K_M + E_M) <= min{E_sq(G), E~_sq(G)} evaluated on
the channel output of the best pure input.  We maximize over parametrized
pure inputs; the inner squashed-entanglement estimate is exact whenever
the channel output is pure (isometric channels) and a variational upper
bound otherwise, so reported numbers for noisy channels are heuristic
estimates of the sup-inf quantity.

The input search itself evaluates a cheap surrogate (trivial squashing of
the purifier) at every trial point; the full variational squashing
optimization runs once at the best input found.  For isometric channels
the surrogate is already exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .errors import DimMismatch, QbcError, SpecError, TooLarge
from .partitions import (
    ConstraintCoefficients,
    Partition,
    constraint_coefficients,
    nontrivial_partitions,
)
from .squash import Measure, SquashConfig, esq_exact_pure, esq_upper_variational
from .states import MultipartiteState, QuantumChannel, apply_channel

SENDER_LABEL = "R"


@dataclass(frozen=True)
class InputSearchConfig:
    restarts: int = 5
    max_iters: int = 400
    tol: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise QbcError("restarts must be at least 1")


@dataclass(frozen=True)
class RateConstraint:
    partition: Partition
    coefficients: ConstraintCoefficients
    bound_bits: float
    measure_used: str
    metadata: dict = field(default_factory=dict)

    def weights(self) -> dict:
        """Per-subset weight |A(M, G)| / 2, the pre-divided presentation."""
        return {m: c / 2.0 for m, c in self.coefficients.terms}


def _pure_input(params: np.ndarray, d: int) -> MultipartiteState:
    """Pure phi_RA from d Schmidt parameters (softmax) and a parametrized
    unitary on A; |R| = |A|."""
    from scipy.linalg import expm

    s = params[:d]
    p = np.exp(s - np.max(s))
    p = p / p.sum()
    h = np.zeros((d, d), dtype=complex)
    k = d
    for i in range(d):
        h[i, i] = params[k]
        k += 1
    for i in range(d):
        for j in range(i + 1, d):
            h[i, j] = params[k] + 1j * params[k + 1]
            h[j, i] = params[k] - 1j * params[k + 1]
            k += 2
    u = expm(1j * h)
    vec = np.zeros(d * d, dtype=complex)
    eye = np.eye(d)
    for i in range(d):
        vec += np.sqrt(p[i]) * np.kron(eye[:, i], u[:, i])
    return MultipartiteState(
        np.outer(vec, vec.conj()), (SENDER_LABEL, "A"), (d, d)
    )


def _input_n_params(d: int) -> int:
    return d + d * d


def channel_output_state(
    channel: QuantumChannel, input_state: MultipartiteState
) -> MultipartiteState:
    """omega on {R, receivers} from sending the A half of a pure phi_RA."""
    if set(input_state.labels) != {SENDER_LABEL, "A"}:
        raise DimMismatch("input must live on labels {R, A}")
    if not input_state.is_pure():
        raise QbcError("channel input must be pure")
    return apply_channel(channel, input_state, "A")


def _estimate(omega, partition, measure, squash_cfg) -> float:
    if omega.is_pure():
        return esq_exact_pure(omega, partition, measure)
    return esq_upper_variational(omega, partition, measure, squash_cfg).value_bits


def _cheap_estimate(omega, partition, measure) -> float:
    """Fast upper bound used inside the input search: exact on pure outputs,
    trivial-squashing (untouched purifier) otherwise."""
    if omega.is_pure():
        return esq_exact_pure(omega, partition, measure)
    from .squash import _half_measure
    from .states import purify

    ep = "&E"
    while ep in omega.labels:
        ep += "'"
    return _half_measure(purify(omega, ep), partition, measure, conditioning=(ep,))


def _partition_value(omega, partition, squash_cfg, cheap=False) -> tuple[float, str]:
    if cheap:
        est = lambda m: _cheap_estimate(omega, partition, m)  # noqa: E731
    else:
        est = lambda m: _estimate(omega, partition, m, squash_cfg)  # noqa: E731
    if len(partition.blocks) == 2:
        # the two measures coincide on bipartitions
        return est(Measure.E_SQ), "esq"
    return min(est(Measure.E_SQ), est(Measure.E_SQ_TILDE)), "min_of_both"


def evaluate_bounds(
    channel: QuantumChannel,
    partitions: list[Partition] | None = None,
    cfg: InputSearchConfig = InputSearchConfig(),
    squash_cfg: SquashConfig = SquashConfig(restarts=3, max_iters=400),
) -> list[RateConstraint]:
    """One RateConstraint per partition, maximizing over pure inputs."""
    ground = (SENDER_LABEL,) + channel.output_labels
    if SENDER_LABEL in channel.output_labels:
        raise SpecError(f"{SENDER_LABEL!r} is reserved for the sender system")
    d = channel.input_dim
    if d * channel.output_dim > squash_cfg.dim_cap:
        raise TooLarge("channel output dimension exceeds the configured cap")
    if partitions is None:
        partitions = nontrivial_partitions(ground)
    npar = _input_n_params(d)
    out = []
    for partition in partitions:
        if set(partition.ground) != set(ground):
            raise SpecError(f"partition {partition} does not cover {ground}")
        rng = np.random.default_rng(cfg.seed)
        best = -math.inf
        best_params = np.zeros(npar)
        measure_used = "esq"
        for r in range(cfg.restarts):
            theta0 = np.zeros(npar) if r == 0 else rng.uniform(-1.0, 1.0, npar)

            def neg(theta):
                omega = channel_output_state(channel, _pure_input(theta, d))
                return -_partition_value(omega, partition, squash_cfg, cheap=True)[0]

            res = minimize(
                neg,
                theta0,
                method="Nelder-Mead",
                options={"maxiter": cfg.max_iters, "xatol": 1e-9, "fatol": cfg.tol},
            )
            if -res.fun > best:
                best = -float(res.fun)
                best_params = res.x
        omega = channel_output_state(channel, _pure_input(best_params, d))
        value, measure_used = _partition_value(omega, partition, squash_cfg)
        s = best_params[:d]
        p = np.exp(s - np.max(s))
        p = p / p.sum()
        out.append(
            RateConstraint(
                partition=partition,
                coefficients=constraint_coefficients(partition),
                bound_bits=value,
                measure_used=measure_used,
                metadata={
                    "schmidt": sorted((float(x) for x in p), reverse=True),
                    "restarts": cfg.restarts,
                    "seed": cfg.seed,
                    "estimate_only": not omega.is_pure(),
                },
            )
        )
    return out


# ordering of the two-receiver rate tuple
RATE_TUPLE = ("E_AB", "E_AC", "E_BC", "E_ABC", "K_AB", "K_AC", "K_BC", "K_ABC")


def two_receiver_report(
    channel: QuantumChannel,
    cfg: InputSearchConfig = InputSearchConfig(),
    squash_cfg: SquashConfig = SquashConfig(restarts=3, max_iters=400),
) -> dict[str, dict]:
    """The four named two-receiver inequalities with explicit coefficient
    vectors over (E_AB, E_AC, E_BC, E_ABC, K_AB, K_AC, K_BC, K_ABC)."""
    if len(channel.output_labels) != 2:
        raise SpecError("two_receiver_report needs exactly two receivers")
    b, c = channel.output_labels
    subset_name = {
        tuple(sorted((SENDER_LABEL, b))): "AB",
        tuple(sorted((SENDER_LABEL, c))): "AC",
        tuple(sorted((b, c))): "BC",
        tuple(sorted((SENDER_LABEL, b, c))): "ABC",
    }
    named = {
        "b_cut": Partition(((SENDER_LABEL, c), (b,))),
        "c_cut": Partition(((SENDER_LABEL, b), (c,))),
        "bc_cut": Partition(((SENDER_LABEL,), (b, c))),
        "tripartite": Partition(((SENDER_LABEL,), (b,), (c,))),
    }
    constraints = evaluate_bounds(channel, list(named.values()), cfg, squash_cfg)
    by_partition = {rc.partition: rc for rc in constraints}
    report = {}
    for name, partition in named.items():
        rc = by_partition[partition]
        vec = {f"E_{s}": 0.0 for s in ("AB", "AC", "BC", "ABC")}
        vec.update({f"K_{s}": 0.0 for s in ("AB", "AC", "BC", "ABC")})
        for m, w in rc.weights().items():
            s = subset_name[m]
            vec[f"E_{s}"] = w
            vec[f"K_{s}"] = w
        report[name] = {
            "partition": str(rc.partition),
            "coefficients": tuple(vec[k] for k in RATE_TUPLE),
            "bound_bits": rc.bound_bits,
            "measure_used": rc.measure_used,
            "metadata": rc.metadata,
        }
    return report
