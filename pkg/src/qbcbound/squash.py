"""Squashed-entanglement evaluation.

Exact values on pure states (every extension of a pure state is product
with it, so the infimum is attained without conditioning), and variational
upper bounds for mixed states obtained by optimizing a parametrized
squashing channel acting on the purifying system.

Variational results are upper bounds only: any feasible squashing channel
gives one, and we cannot certify convergence to the true infimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .errors import NotPure, QbcError, TooLarge
from .measures import BlockSpec, cmi_dual_measure, cmi_total
from .partitions import Partition
from .states import MultipartiteState, QuantumChannel, apply_channel, purify


class Measure(str, Enum):
    E_SQ = "esq"
    E_SQ_TILDE = "esq-tilde"


@dataclass(frozen=True)
class SquashConfig:
    squash_output_dim: int | None = None  # default: dimension of the purifier
    restarts: int = 20
    max_iters: int = 2000
    tol: float = 1e-8
    seed: int = 0
    dim_cap: int = 64

    def __post_init__(self):
        if self.tol <= 0:
            raise QbcError("tol must be positive")
        if self.restarts < 1:
            raise QbcError("restarts must be at least 1")


@dataclass(frozen=True)
class SquashResult:
    value_bits: float
    measure: Measure
    converged: bool
    extension_description: dict = field(default_factory=dict)


def _half_measure(state: MultipartiteState, partition: Partition, measure, conditioning=()):
    spec = BlockSpec(tuple(frozenset(b) for b in partition.blocks), frozenset(conditioning))
    fn = cmi_total if Measure(measure) is Measure.E_SQ else cmi_dual_measure
    return 0.5 * fn(state, spec)


def esq_exact_pure(state: MultipartiteState, partition: Partition, measure=Measure.E_SQ) -> float:
    """Exact squashed entanglement of a pure state for the given grouping."""
    if not state.is_pure():
        raise NotPure("exact evaluation requires a pure state")
    return _half_measure(state, partition, measure)


def esq_cq_average(flagged_states, partition: Partition, measure=Measure.E_SQ) -> float:
    """Exact value for a flagged ensemble of pure states: the probability-
    weighted average of the per-component pure-state values."""
    probs = [p for p, _ in flagged_states]
    if abs(sum(probs) - 1.0) > 1e-9:
        raise QbcError("probabilities must sum to 1")
    total = 0.0
    for p, st in flagged_states:
        if not st.is_pure():
            raise NotPure("cq-average exactness holds only for pure components")
        total += p * esq_exact_pure(st, partition, measure)
    return total


def _squash_channel_from_params(
    theta: np.ndarray, d_e: int, d_out: int, d_anc: int, label: str
) -> QuantumChannel:
    """Stinespring parametrization: unitary exp(iH(theta)) on E (x) ancilla,
    ancilla traced out.  At theta = 0 and d_out >= d_e this is the identity."""
    big = d_out * d_anc
    h = np.zeros((big, big), dtype=complex)
    k = 0
    for i in range(big):
        h[i, i] = theta[k]
        k += 1
    for i in range(big):
        for j in range(i + 1, big):
            h[i, j] = theta[k] + 1j * theta[k + 1]
            h[j, i] = theta[k] - 1j * theta[k + 1]
            k += 2
    u = expm(1j * h)
    # embed |e> as |e mod d_out> (x) |e div d_out> so that e < d_out maps
    # to |e>|0>; requires d_out * d_anc >= d_e
    emb = np.zeros((big, d_e))
    for e in range(d_e):
        emb[(e % d_out) * d_anc + (e // d_out), e] = 1.0
    iso = u @ emb
    kraus = [iso.reshape(d_out, d_anc, d_e)[:, a, :] for a in range(d_anc)]
    return QuantumChannel(tuple(kraus), d_e, (label,), (d_out,))


def n_params(d_out: int, d_anc: int) -> int:
    return (d_out * d_anc) ** 2


def esq_upper_variational(
    state: MultipartiteState,
    partition: Partition,
    measure=Measure.E_SQ,
    config: SquashConfig = SquashConfig(),
) -> SquashResult:
    """Variational upper bound on the squashed entanglement of a mixed state.

    The state is purified, a squashing channel on the purifier is
    parametrized through a Stinespring isometry, and half the conditional
    multipartite information is minimized by multi-restart Nelder-Mead.
    """
    measure = Measure(measure)
    ep = "&E"
    while ep in state.labels:
        ep += "'"
    epp = ep + "out"
    phi = purify(state, ep)
    d_e = phi.dims[-1]
    d_out = config.squash_output_dim or d_e
    if state.dim * d_out > config.dim_cap:
        raise TooLarge(
            f"state dim {state.dim} x squash output dim {d_out} exceeds cap "
            f"{config.dim_cap}"
        )
    if d_e == 1:
        # pure input: no extension can lower the objective
        val = _half_measure(state, partition, measure)
        return SquashResult(val, measure, True, {"trivial": True})

    d_anc = max(2, math.ceil(d_e / d_out))

    def objective(theta):
        ch = _squash_channel_from_params(theta, d_e, d_out, d_anc, epp)
        out = apply_channel(ch, phi, ep)
        return _half_measure(out, partition, measure, conditioning=(epp,))

    rng = np.random.default_rng(config.seed)
    npar = n_params(d_out, d_anc)
    best_val = math.inf
    best_theta = None
    converged = False
    for r in range(config.restarts):
        theta0 = np.zeros(npar) if r == 0 else rng.uniform(-np.pi, np.pi, npar)
        res = minimize(
            objective,
            theta0,
            method="Nelder-Mead",
            options={
                "maxiter": config.max_iters,
                "xatol": 1e-9,
                "fatol": config.tol,
                "adaptive": npar > 20,
            },
        )
        if res.fun < best_val:
            best_val = float(res.fun)
            best_theta = res.x
            converged = bool(res.success)
    if d_out >= d_e:
        # untouched purifier is a feasible point (identity squashing)
        baseline = _half_measure(phi, partition, measure, conditioning=(ep,))
        if baseline < best_val:
            best_val, best_theta, converged = baseline, None, True
    return SquashResult(
        best_val,
        measure,
        converged,
        {
            "squash_output_dim": d_out,
            "ancilla_dim": d_anc,
            "params": None if best_theta is None else best_theta.tolist(),
        },
    )
