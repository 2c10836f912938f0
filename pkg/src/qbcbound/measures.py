"""Entropic quantities: von Neumann entropy, QCMI and the two conditional
multipartite informations (the total-correlation form and its dual form).

All results are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySubset, LabelCollision, LabelNotFound, SpecError
from .states import MultipartiteState, partial_trace

_EIG_FLOOR = 1e-12


@dataclass(frozen=True)
class BlockSpec:
    """Disjoint label blocks A_1;...;A_m plus an optional conditioning set E."""

    blocks: tuple[frozenset, ...]
    conditioning: frozenset = frozenset()

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "conditioning", frozenset(self.conditioning))
        if not blocks:
            raise SpecError("at least one block required")
        if any(not b for b in blocks):
            raise SpecError("blocks must be non-empty")
        seen: set = set()
        for b in blocks:
            if seen & b:
                raise SpecError("blocks are not pairwise disjoint")
            seen |= b
        if seen & self.conditioning:
            raise SpecError("conditioning set overlaps a block")

    def validate_for(self, state: MultipartiteState):
        known = set(state.labels)
        for lab in set().union(*self.blocks) | self.conditioning:
            if lab not in known:
                raise SpecError(f"label {lab!r} not present on the state")


def _entropy_of_matrix(m: np.ndarray) -> float:
    ev = np.linalg.eigvalsh(m)
    ev = ev[ev > _EIG_FLOOR]
    return float(-np.sum(ev * np.log2(ev)))


def entropy(state: MultipartiteState, subset) -> float:
    """Von Neumann entropy of the reduction to ``subset``, in bits."""
    subset = set(subset)
    if not subset:
        raise EmptySubset("entropy of an empty subset is not exposed")
    for lab in subset:
        if lab not in state.labels:
            raise LabelNotFound(f"label {lab!r} not in {state.labels}")
    return _entropy_of_matrix(partial_trace(state, subset).matrix)


def _h(state: MultipartiteState, subset: set) -> float:
    """Entropy with the internal H(empty) = 0 convention."""
    if not subset:
        return 0.0
    return _entropy_of_matrix(partial_trace(state, subset).matrix)


def conditional_entropy(state: MultipartiteState, subset, given) -> float:
    """H(subset | given) = H(subset given) - H(given)."""
    subset, given = set(subset), set(given)
    if not subset:
        raise EmptySubset("conditional entropy of an empty subset")
    if subset & given:
        raise LabelCollision("subset overlaps conditioning set")
    return _h(state, subset | given) - _h(state, given)


def qcmi(state: MultipartiteState, a, b, e=()) -> float:
    """Quantum conditional mutual information I(A;B|E) in bits."""
    a, b, e = set(a), set(b), set(e)
    if not a or not b:
        raise EmptySubset("QCMI needs non-empty A and B")
    if a & b or a & e or b & e:
        raise LabelCollision("A, B, E must be pairwise disjoint")
    for lab in a | b | e:
        if lab not in state.labels:
            raise LabelNotFound(f"label {lab!r} not in {state.labels}")
    return _h(state, a | e) + _h(state, b | e) - _h(state, e) - _h(state, a | b | e)


def cmi_total(state: MultipartiteState, spec: BlockSpec) -> float:
    """Conditional total correlation: sum_i H(A_i|E) - H(A_1...A_m|E)."""
    spec.validate_for(state)
    e = set(spec.conditioning)
    he = _h(state, e)
    total = 0.0
    allb: set = set()
    for b in spec.blocks:
        total += _h(state, set(b) | e) - he
        allb |= set(b)
    total -= _h(state, allb | e) - he
    return total


def cmi_dual_measure(state: MultipartiteState, spec: BlockSpec) -> float:
    """Dual conditional multipartite information:
    sum_i H(A_[m]\\{i}|E) - (m-1) H(A_1...A_m|E)."""
    spec.validate_for(state)
    e = set(spec.conditioning)
    he = _h(state, e)
    allb = set().union(*spec.blocks)
    hall = _h(state, allb | e) - he
    m = len(spec.blocks)
    if m == 1:
        return 0.0
    total = 0.0
    for b in spec.blocks:
        total += _h(state, (allb - set(b)) | e) - he
    return total - (m - 1) * hall
