"""Comparison policy: transmit whenever the receiver's estimate is wrong.

This rule ignores the sampling/transmission budget entirely; its average
resource cost may exceed c_max and must be reported as-is (budget-exempt),
never clamped.
"""

from __future__ import annotations

from .policies import DeterministicPolicy
from .system_model import SystemState


def baseline_decide(s: SystemState) -> int:
    """1 iff the true state and the estimate disagree."""
    return int(s.x != s.x_hat)


def baseline_policy(n_states: int) -> DeterministicPolicy:
    """The discrepancy rule as a stationary table, for exact evaluation."""
    return DeterministicPolicy.from_callable(n_states, baseline_decide)
