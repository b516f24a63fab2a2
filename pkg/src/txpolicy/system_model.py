"""Source, channel and cost model for remote tracking of a discrete Markov source.

A transmitter watches a finite ergodic Markov chain and may sample-and-send
the current state over an unreliable channel (success probability ``p_s``,
one slot delay, instant error-free ACK/NACK).  The receiver keeps its last
successfully received state as the estimate.  The decision process lives on
the augmented state (x, x_hat): true source state and receiver estimate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

from .errors import (
    ConvergenceFailure,
    NegativeEntryError,
    NotIrreducibleError,
    RowSumError,
)

PROB_ATOL = 1e-12  # absolute tolerance for all probability comparisons


class Action(IntEnum):
    SILENT = 0
    TRANSMIT = 1


@dataclass(frozen=True)
class SystemState:
    """Augmented state: true source state ``x`` and receiver estimate ``x_hat``."""

    x: int
    x_hat: int


def state_index(s: SystemState, n_states: int) -> int:
    """Flat index of an augmented state; inverse of :func:`index_state`."""
    return s.x * n_states + s.x_hat


def index_state(idx: int, n_states: int) -> SystemState:
    return SystemState(idx // n_states, idx % n_states)


@dataclass(frozen=True)
class SourceModel:
    """Finite ergodic DTMC with row-stochastic transition matrix ``P``."""

    P: np.ndarray

    @property
    def n_states(self) -> int:
        return self.P.shape[0]


@dataclass(frozen=True)
class CostMatrix:
    """Actuation-error costs: ``C[i, j]`` is the cost of acting per estimate j
    while the source is in state i.  Diagonal is zero, entries nonnegative."""

    C: np.ndarray

    def __post_init__(self):
        C = np.asarray(self.C, dtype=float)
        if C.ndim != 2 or C.shape[0] != C.shape[1]:
            raise ValueError(f"cost matrix must be square, got shape {C.shape}")
        if np.any(C < 0):
            raise NegativeEntryError("cost matrix has negative entries")
        if np.any(np.abs(np.diag(C)) > 0):
            raise ValueError("cost matrix diagonal must be zero (no error, no cost)")
        if not np.all(np.isfinite(C)):
            raise ValueError("cost matrix entries must be finite")
        object.__setattr__(self, "C", C)

    @property
    def max_cost(self) -> float:
        return float(self.C.max())


@dataclass(frozen=True)
class ChannelModel:
    """Bernoulli erasure channel: each transmission succeeds with prob ``p_s``."""

    p_s: float

    def __post_init__(self):
        if not 0.0 <= self.p_s <= 1.0:
            raise ValueError(f"p_s must lie in [0, 1], got {self.p_s}")

    @property
    def p_f(self) -> float:
        return 1.0 - self.p_s


@dataclass(frozen=True)
class ResourceConfig:
    """Per-use sampling+transmission cost ``c`` and average budget ``c_max``."""

    c: float
    c_max: float

    def __post_init__(self):
        if self.c <= 0:
            raise ValueError(f"per-use cost c must be > 0, got {self.c}")
        if self.c_max <= 0:
            raise ValueError(f"budget c_max must be > 0, got {self.c_max}")


@dataclass(frozen=True)
class Model:
    """Bundle of everything that defines one tracking problem instance."""

    source: SourceModel
    channel: ChannelModel
    costs: CostMatrix
    resources: ResourceConfig

    def __post_init__(self):
        if self.costs.C.shape[0] != self.source.n_states:
            raise ValueError(
                f"cost matrix is {self.costs.C.shape[0]}x{self.costs.C.shape[0]} "
                f"but source has {self.source.n_states} states"
            )

    @property
    def n_states(self) -> int:
        return self.source.n_states

    @property
    def n_aug_states(self) -> int:
        return self.source.n_states ** 2


def _reachability_closure(support: np.ndarray) -> np.ndarray:
    """Boolean closure of a support graph by repeated squaring."""
    reach = support | np.eye(support.shape[0], dtype=bool)
    while True:
        nxt = reach | (reach @ reach)
        if np.array_equal(nxt, reach):
            return reach
        reach = nxt


def validate_source(P) -> SourceModel:
    """Validate a transition matrix and wrap it as a :class:`SourceModel`.

    Raises :class:`RowSumError` if a row is off by more than 1e-12,
    :class:`NegativeEntryError` for entries outside [0, 1], and
    :class:`NotIrreducibleError` if the support graph has more than one
    communicating class.  Aperiodicity is not required: long-run averages
    are taken against the stationary distribution of an irreducible chain.
    """
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError(f"transition matrix must be square, got shape {P.shape}")
    if np.any(P < 0) or np.any(P > 1):
        raise NegativeEntryError("transition probabilities must lie in [0, 1]")
    row_sums = P.sum(axis=1)
    bad = np.where(np.abs(row_sums - 1.0) > PROB_ATOL)[0]
    if bad.size:
        raise RowSumError(
            f"row {bad[0]} sums to {row_sums[bad[0]]!r}, expected 1 within {PROB_ATOL}"
        )
    reach = _reachability_closure(P > 0)
    if not reach.all():
        raise NotIrreducibleError("source chain is not irreducible")
    return SourceModel(P=P)


def stationary_distribution(src: SourceModel) -> np.ndarray:
    """Unique stationary distribution pi with pi P = pi, sum(pi) = 1."""
    n = src.n_states
    # Dense solve of the balance equations with the normalization replacing
    # one (redundant) row.
    A = src.P.T - np.eye(n)
    A[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    pi = np.linalg.solve(A, b)
    residual = np.abs(pi @ src.P - pi).sum()
    if residual > 1e-10:
        raise ConvergenceFailure(f"stationary residual {residual} > 1e-10")
    pi = np.maximum(pi, 0.0)
    return pi / pi.sum()


def transition_kernel(
    s: SystemState, a: Action | int, src: SourceModel, ch: ChannelModel
) -> dict[SystemState, float]:
    """One-step distribution over augmented states for state ``s`` and action ``a``.

    With a = 1 the receiver learns the current source state with probability
    p_s (one slot late), otherwise keeps its estimate; with a = 0 the
    estimate is frozen.  The source moves per its own row in every case.
    """
    row = src.P[s.x]
    out: dict[SystemState, float] = {}
    for k in np.nonzero(row)[0]:
        p = float(row[k])
        if a:
            _accumulate(out, SystemState(int(k), s.x), p * ch.p_s)
            _accumulate(out, SystemState(int(k), s.x_hat), p * ch.p_f)
        else:
            _accumulate(out, SystemState(int(k), s.x_hat), p)
    return out


def _accumulate(dist: dict[SystemState, float], s: SystemState, p: float) -> None:
    if p > 0.0:
        dist[s] = dist.get(s, 0.0) + p


def kernel_matrices(src: SourceModel, ch: ChannelModel) -> tuple[np.ndarray, np.ndarray]:
    """Dense transition matrices (T0, T1) over augmented-state indices.

    T0 is the stay-silent kernel, T1 the sample-and-transmit kernel.
    Row s of T_a equals ``transition_kernel(s, a, ...)``.
    """
    n = src.n_states
    S = n * n
    T0 = np.zeros((S, S))
    T1 = np.zeros((S, S))
    for x in range(n):
        for x_hat in range(n):
            s = x * n + x_hat
            for k in range(n):
                p = src.P[x, k]
                if p == 0.0:
                    continue
                T0[s, k * n + x_hat] += p
                T1[s, k * n + x] += p * ch.p_s
                T1[s, k * n + x_hat] += p * ch.p_f
    return T0, T1


def actuation_cost(s: SystemState, costs: CostMatrix) -> float:
    """Cost of acting per estimate ``x_hat`` while the source is in ``x``."""
    return float(costs.C[s.x, s.x_hat])


def reconstruction_error(s: SystemState) -> int:
    """1 if the receiver's estimate differs from the true state, else 0."""
    return int(s.x != s.x_hat)
