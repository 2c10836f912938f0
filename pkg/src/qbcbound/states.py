"""Finite-dimensional multipartite states and channels.

States are density operators carrying an ordered list of subsystem labels
and dimensions.  Channels are CPTP maps given by Kraus operators with a
labeled output factorization, so a broadcast channel is simply a channel
whose output splits into several named receiver systems.

All values are immutable; every operation returns a new value.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimMismatch,
    LabelCollision,
    LabelNotFound,
    QbcError,
)

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
EIG_TOL = 1e-10
RANK_TOL = 1e-12


def _frozen_array(a) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class MultipartiteState:
    """Density operator on a tensor product of labeled subsystems.

    Parameters
    ----------
    matrix : square complex matrix of dimension prod(dims)
    labels : ordered subsystem names, unique
    dims : ordered positive subsystem dimensions, one per label
    """

    matrix: np.ndarray
    labels: tuple[str, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen_array(self.matrix))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        m = self.matrix
        if len(self.labels) != len(set(self.labels)):
            raise LabelCollision(f"duplicate labels in {self.labels}")
        if len(self.labels) != len(self.dims):
            raise DimMismatch("labels and dims length mismatch")
        if any(d < 1 for d in self.dims):
            raise DimMismatch("subsystem dimensions must be positive")
        n = int(np.prod(self.dims))
        if m.ndim != 2 or m.shape != (n, n):
            raise DimMismatch(
                f"matrix shape {m.shape} inconsistent with dims product {n}"
            )
        if np.max(np.abs(m - m.conj().T)) > HERM_TOL:
            raise QbcError("matrix is not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise QbcError("matrix trace differs from 1 beyond tolerance")
        ev = np.linalg.eigvalsh(m)
        if ev[0] < -EIG_TOL:
            raise QbcError(f"matrix has eigenvalue {ev[0]:.3e} below -{EIG_TOL}")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dim_of(self, label: str) -> int:
        return self.dims[self.index_of(label)]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelNotFound(f"label {label!r} not in {self.labels}") from None

    def is_pure(self, tol: float = 1e-9) -> bool:
        return bool(np.linalg.eigvalsh(self.matrix)[-1] >= 1.0 - tol)


@dataclass(frozen=True)
class QuantumChannel:
    """CPTP map given by Kraus operators with a labeled output split."""

    kraus_ops: tuple[np.ndarray, ...]
    input_dim: int
    output_labels: tuple[str, ...]
    output_dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "kraus_ops", tuple(_frozen_array(k) for k in self.kraus_ops)
        )
        object.__setattr__(self, "output_labels", tuple(self.output_labels))
        object.__setattr__(self, "output_dims", tuple(int(d) for d in self.output_dims))
        if len(self.output_labels) != len(set(self.output_labels)):
            raise LabelCollision(f"duplicate output labels {self.output_labels}")
        if len(self.output_labels) != len(self.output_dims):
            raise DimMismatch("output labels/dims length mismatch")
        dout = int(np.prod(self.output_dims))
        if not self.kraus_ops:
            raise DimMismatch("channel needs at least one Kraus operator")
        for k in self.kraus_ops:
            if k.shape != (dout, self.input_dim):
                raise DimMismatch(
                    f"Kraus shape {k.shape}, expected ({dout}, {self.input_dim})"
                )
        s = sum(k.conj().T @ k for k in self.kraus_ops)
        if np.max(np.abs(s - np.eye(self.input_dim))) > 1e-9:
            raise QbcError("Kraus operators do not satisfy the CPTP condition")

    @property
    def output_dim(self) -> int:
        return int(np.prod(self.output_dims))


@dataclass(frozen=True)
class PrivateStateSpec:
    """Recipe for an m-party private state with key dimension d.

    ``twist_unitaries`` holds one unitary on the joint shield space per key
    basis tuple (i_1, ..., i_m), in row-major order of the tuple.  ``None``
    means identity twists.
    """

    num_parties: int
    key_dim: int
    shield_dims: tuple[int, ...]
    twist_unitaries: tuple[np.ndarray, ...] | None = None
    shield_state: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.num_parties < 2:
            raise QbcError("private states need at least 2 parties")
        if self.key_dim < 2:
            raise QbcError("key dimension must be at least 2")
        object.__setattr__(self, "shield_dims", tuple(int(d) for d in self.shield_dims))
        if len(self.shield_dims) != self.num_parties:
            raise DimMismatch("one shield dimension per party required")
        ds = int(np.prod(self.shield_dims))
        if self.twist_unitaries is not None:
            tw = tuple(_frozen_array(u) for u in self.twist_unitaries)
            object.__setattr__(self, "twist_unitaries", tw)
            if len(tw) != self.key_dim**self.num_parties:
                raise DimMismatch("need one twist unitary per key basis tuple")
            for u in tw:
                if u.shape != (ds, ds):
                    raise DimMismatch("twist unitary has wrong shield dimension")
                if np.max(np.abs(u.conj().T @ u - np.eye(ds))) > 1e-10:
                    raise QbcError("twist unitary is not unitary within tolerance")
        if self.shield_state is not None:
            sh = _frozen_array(self.shield_state)
            object.__setattr__(self, "shield_state", sh)
            if sh.shape != (ds, ds):
                raise DimMismatch("shield state has wrong dimension")


def tensor(parts: list[MultipartiteState]) -> MultipartiteState:
    """Kronecker product of states in the given order."""
    if not parts:
        raise QbcError("tensor of zero states is undefined")
    labels: list[str] = []
    dims: list[int] = []
    for p in parts:
        for lab in p.labels:
            if lab in labels:
                raise LabelCollision(f"label {lab!r} appears in several factors")
        labels.extend(p.labels)
        dims.extend(p.dims)
    mat = functools.reduce(np.kron, (p.matrix for p in parts))
    return MultipartiteState(mat, tuple(labels), tuple(dims))


def partial_trace(state: MultipartiteState, keep) -> MultipartiteState:
    """Reduced state on ``keep`` labels, preserving their relative order."""
    keep = set(keep)
    if not keep:
        raise QbcError("cannot keep an empty label set")
    for lab in keep:
        if lab not in state.labels:
            raise LabelNotFound(f"label {lab!r} not in {state.labels}")
    n = len(state.labels)
    keep_idx = [i for i, lab in enumerate(state.labels) if lab in keep]
    if len(keep_idx) == n:
        return state
    t = state.matrix.reshape(state.dims + state.dims)
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    row = list(letters[:n])
    col = [letters[n + i] if i in keep_idx else letters[i] for i in range(n)]
    out = [letters[i] for i in keep_idx] + [letters[n + i] for i in keep_idx]
    expr = "".join(row) + "".join(col) + "->" + "".join(out)
    kd = tuple(state.dims[i] for i in keep_idx)
    m = int(np.prod(kd))
    red = np.einsum(expr, t).reshape(m, m)
    red = (red + red.conj().T) / 2
    return MultipartiteState(
        red, tuple(state.labels[i] for i in keep_idx), kd
    )


def purify(state: MultipartiteState, purifier_label: str) -> MultipartiteState:
    """Standard purification; purifier dimension equals the numerical rank."""
    if purifier_label in state.labels:
        raise LabelCollision(f"purifier label {purifier_label!r} already present")
    w, v = np.linalg.eigh(state.matrix)
    w = np.clip(w, 0.0, None)
    sel = w > RANK_TOL
    w, v = w[sel], v[:, sel]
    rank = int(sel.sum())
    vec = np.zeros(state.dim * rank, dtype=complex)
    for k in range(rank):
        vec += np.sqrt(w[k]) * np.kron(v[:, k], np.eye(rank)[:, k])
    vec /= np.linalg.norm(vec)
    mat = np.outer(vec, vec.conj())
    return MultipartiteState(
        mat, state.labels + (purifier_label,), state.dims + (rank,)
    )


def apply_channel(
    channel: QuantumChannel, state: MultipartiteState, target: str
) -> MultipartiteState:
    """Apply ``channel`` to the ``target`` subsystem, spectators untouched."""
    ti = state.index_of(target)
    if state.dims[ti] != channel.input_dim:
        raise DimMismatch(
            f"target dim {state.dims[ti]} != channel input dim {channel.input_dim}"
        )
    for lab in channel.output_labels:
        if lab in state.labels and lab != target:
            raise LabelCollision(f"output label {lab!r} collides with spectator")
    dl = int(np.prod(state.dims[:ti], dtype=int))
    dr = int(np.prod(state.dims[ti + 1 :], dtype=int))
    il, ir = np.eye(dl), np.eye(dr)
    out = None
    for k in channel.kraus_ops:
        op = np.kron(np.kron(il, k), ir)
        term = op @ state.matrix @ op.conj().T
        out = term if out is None else out + term
    out = (out + out.conj().T) / 2
    labels = state.labels[:ti] + channel.output_labels + state.labels[ti + 1 :]
    dims = state.dims[:ti] + channel.output_dims + state.dims[ti + 1 :]
    return MultipartiteState(out, labels, dims)


def make_ghz(labels, d: int) -> MultipartiteState:
    """GHZ state (1/sqrt(d)) sum_i |i...i> on the given labels."""
    labels = tuple(labels)
    m = len(labels)
    if m < 2:
        raise QbcError("GHZ needs at least 2 parties")
    if d < 2:
        raise QbcError("GHZ Schmidt rank must be at least 2")
    vec = np.zeros(d**m, dtype=complex)
    for i in range(d):
        idx = sum(i * d**k for k in range(m))
        vec[idx] = 1.0
    vec /= np.sqrt(d)
    return MultipartiteState(np.outer(vec, vec.conj()), labels, (d,) * m)


def _twist_unitary(spec: PrivateStateSpec) -> np.ndarray | None:
    if spec.twist_unitaries is None:
        return None
    d, m = spec.key_dim, spec.num_parties
    dk = d**m
    ds = int(np.prod(spec.shield_dims))
    u = np.zeros((dk * ds, dk * ds), dtype=complex)
    for flat, tw in enumerate(spec.twist_unitaries):
        u[flat * ds : (flat + 1) * ds, flat * ds : (flat + 1) * ds] = tw
    return u


def make_private_state(
    spec: PrivateStateSpec, key_labels, shield_labels
) -> MultipartiteState:
    """Twisted product U (GHZ_key x rho_shield) U^dag.

    Labels are ordered key systems first, then shield systems.  The shield
    state defaults to maximally mixed.
    """
    key_labels = tuple(key_labels)
    shield_labels = tuple(shield_labels)
    if len(key_labels) != spec.num_parties or len(shield_labels) != spec.num_parties:
        raise DimMismatch("one key label and one shield label per party required")
    ghz = make_ghz(key_labels, spec.key_dim)
    ds = int(np.prod(spec.shield_dims))
    shield_mat = (
        np.eye(ds) / ds if spec.shield_state is None else np.array(spec.shield_state)
    )
    shield = MultipartiteState(shield_mat, shield_labels, spec.shield_dims)
    prod = tensor([ghz, shield])
    u = _twist_unitary(spec)
    if u is None:
        return prod
    mat = u @ prod.matrix @ u.conj().T
    mat = (mat + mat.conj().T) / 2
    return MultipartiteState(mat, prod.labels, prod.dims)


def measurement_channel(d: int, label: str) -> QuantumChannel:
    """Von Neumann measurement channel in the computational basis."""
    eye = np.eye(d)
    kraus = [np.outer(eye[:, i], eye[:, i]) for i in range(d)]
    return QuantumChannel(tuple(kraus), d, (label,), (d,))


def check_private_state(
    state: MultipartiteState, key_labels, shield_labels, d: int, tol: float = 1e-8
) -> tuple[bool, float]:
    """Evaluate the defining secret-key condition of a private state.

    Purifies the state, dephases every key system, traces the shields and
    measures the trace distance to the ideal perfectly-correlated key that
    is product with the purifying system.  Returns (verdict, deviation).
    """
    key_labels = tuple(key_labels)
    shield_labels = tuple(shield_labels)
    for lab in key_labels:
        if state.dim_of(lab) != d:
            raise DimMismatch(f"key system {lab!r} does not have dimension {d}")
    pur = "&E"
    while pur in state.labels:
        pur += "'"
    phi = purify(state, pur)
    for lab in key_labels:
        phi = apply_channel(measurement_channel(d, lab), phi, lab)
    red = partial_trace(phi, set(key_labels) | {pur})
    # reorder: keys in given order, purifier last
    order = list(key_labels) + [pur]
    red = _permute(red, order)
    m = len(key_labels)
    de = red.dims[-1]
    t = red.matrix.reshape((d,) * m + (de,) + (d,) * m + (de,))
    sigma = np.zeros((de, de), dtype=complex)
    for i in range(d):
        idx = (i,) * m
        sigma += t[idx + (slice(None),) + idx + (slice(None),)]
    tr = np.trace(sigma).real
    if tr > 1e-12:
        sigma = sigma / tr
    else:
        sigma = np.eye(de) / de
    ideal = np.zeros_like(red.matrix).reshape(t.shape)
    for i in range(d):
        idx = (i,) * m
        ideal[idx + (slice(None),) + idx + (slice(None),)] = sigma / d
    ideal = ideal.reshape(red.matrix.shape)
    dev = 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(red.matrix - ideal))))
    return dev <= tol, dev


def _permute(state: MultipartiteState, order) -> MultipartiteState:
    order = list(order)
    if order == list(state.labels):
        return state
    perm = [state.index_of(lab) for lab in order]
    n = len(state.labels)
    t = state.matrix.reshape(state.dims + state.dims)
    t = np.transpose(t, perm + [n + p for p in perm])
    dims = tuple(state.dims[p] for p in perm)
    dd = int(np.prod(dims))
    return MultipartiteState(t.reshape(dd, dd), tuple(order), dims)


def trace_distance(a: MultipartiteState, b: MultipartiteState) -> float:
    """(1/2) ||a - b||_1."""
    if a.labels != b.labels or a.dims != b.dims:
        if set(a.labels) == set(b.labels):
            b = _permute(b, a.labels)
            if a.dims != b.dims:
                raise DimMismatch("states have different subsystem dimensions")
        else:
            raise DimMismatch("states live on different label sets")
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a.matrix - b.matrix))))


# ---------------------------------------------------------------------------
# JSON wire format


def _matrix_to_json(m: np.ndarray):
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


def _matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def state_to_json(state: MultipartiteState) -> str:
    return json.dumps(
        {
            "labels": list(state.labels),
            "dims": list(state.dims),
            "matrix": _matrix_to_json(state.matrix),
        }
    )


def state_from_json(text: str) -> MultipartiteState:
    doc = json.loads(text)
    return MultipartiteState(
        _matrix_from_json(doc["matrix"]), tuple(doc["labels"]), tuple(doc["dims"])
    )


def channel_to_json(channel: QuantumChannel) -> str:
    return json.dumps(
        {
            "input_dim": channel.input_dim,
            "output_labels": list(channel.output_labels),
            "output_dims": list(channel.output_dims),
            "kraus": [_matrix_to_json(k) for k in channel.kraus_ops],
        }
    )


def channel_from_json(text: str) -> QuantumChannel:
    doc = json.loads(text)
    return QuantumChannel(
        tuple(_matrix_from_json(k) for k in doc["kraus"]),
        int(doc["input_dim"]),
        tuple(doc["output_labels"]),
        tuple(doc["output_dims"]),
    )
