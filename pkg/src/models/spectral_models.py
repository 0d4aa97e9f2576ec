from dataclasses import dataclass

import numpy as np


class SymMatrix:
    """Dense symmetric matrix of float64 values"""

    def __init__(self, entries):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {entries.shape}")
        if not np.array_equal(entries, entries.T):
            raise ValueError("matrix is not symmetric")
        self.entries = entries

    @property
    def order(self):
        return self.entries.shape[0]

    @classmethod
    def from_upper(cls, order, upper):
        """Build from a mapping (i, j) -> value with i <= j"""
        entries = np.zeros((order, order))
        for (i, j), value in upper.items():
            entries[i, j] = value
            entries[j, i] = value
        return cls(entries)


@dataclass(frozen=True)
class Lambda1Report:
    lambda1: float
    leq_bound_ok: bool
    lichnerowicz_ok: bool
    connected: bool

    def to_dict(self):
        return {
            'lambda1': self.lambda1,
            'leq_bound_ok': self.leq_bound_ok,
            'lichnerowicz_ok': self.lichnerowicz_ok,
            'connected': self.connected
        }
