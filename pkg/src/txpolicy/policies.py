"""Stationary policies over the augmented state space.

A deterministic policy is a total table mapping each augmented state
(x, x_hat) to a binary action.  A mixture policy picks one of two
deterministic tables once at t = 0 (with probability ``eta`` for the first)
and follows it forever, so its long-run averages are the eta-convex
combination of the component averages.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .system_model import SystemState, index_state, state_index


@dataclass(frozen=True)
class DeterministicPolicy:
    """Total action table over the (n_states)^2 augmented states."""

    n_states: int
    table: np.ndarray  # int8 vector of length n_states**2, entries in {0, 1}

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int8)
        if table.shape != (self.n_states ** 2,):
            raise ValueError(
                f"policy table must have length {self.n_states ** 2}, "
                f"got shape {table.shape}"
            )
        if not np.isin(table, (0, 1)).all():
            raise ValueError("policy actions must be 0 or 1")
        object.__setattr__(self, "table", table)

    def action(self, s: SystemState) -> int:
        return int(self.table[state_index(s, self.n_states)])

    def policy_id(self) -> int:
        """Integer id with bit b holding the action at augmented index b."""
        return int(sum(int(a) << b for b, a in enumerate(self.table)))

    @classmethod
    def from_callable(
        cls, n_states: int, decide: Callable[[SystemState], int]
    ) -> "DeterministicPolicy":
        table = np.array(
            [decide(index_state(i, n_states)) for i in range(n_states ** 2)],
            dtype=np.int8,
        )
        return cls(n_states=n_states, table=table)

    @classmethod
    def from_id(cls, n_states: int, policy_id: int) -> "DeterministicPolicy":
        size = n_states ** 2
        table = np.array([(policy_id >> b) & 1 for b in range(size)], dtype=np.int8)
        return cls(n_states=n_states, table=table)


def all_silent(n_states: int) -> DeterministicPolicy:
    return DeterministicPolicy(n_states, np.zeros(n_states ** 2, dtype=np.int8))


def always_transmit(n_states: int) -> DeterministicPolicy:
    return DeterministicPolicy(n_states, np.ones(n_states ** 2, dtype=np.int8))


@dataclass(frozen=True)
class MixturePolicy:
    """Choose ``pi_minus`` with probability ``eta`` at t = 0, else ``pi_plus``."""

    pi_minus: DeterministicPolicy
    pi_plus: DeterministicPolicy
    eta: float
    diagnostics: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")
        if self.pi_minus.n_states != self.pi_plus.n_states:
            raise ValueError("mixture components must share a state space")

    @property
    def n_states(self) -> int:
        return self.pi_minus.n_states

    @property
    def is_deterministic(self) -> bool:
        return (
            self.eta in (0.0, 1.0)
            or np.array_equal(self.pi_minus.table, self.pi_plus.table)
        )
