"""Closed-form edge-balanced index sets of K(m,n) with m >= n, both even."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .labeling import GraphShape


class Case(enum.Enum):
    BOTH_UNLABELED = "BOTH_UNLABELED"
    ONE_UNLABELED = "ONE_UNLABELED"
    NONE_UNLABELED = "NONE_UNLABELED"
    N_EQUALS_2 = "N_EQUALS_2"


@dataclass(frozen=True)
class TheoremParams:
    """Bounds on the 1-vertices of each part and the resulting maximum index.

    ``k`` is the most 1-vertices part A can hold (each needs n/2+1 one-edges)
    and ``k_prime`` the 1-edges left over for the remaining A-vertices; ``j``
    and ``j_prime`` are the same quantities for part B.  A leftover equal to
    half the opposite part leaves room for exactly one unlabeled vertex.
    """

    shape: GraphShape
    k: int
    k_prime: int
    j: int
    j_prime: int
    case: Case
    max_index: int

    @property
    def a_unlabeled(self) -> bool:
        return self.k_prime == self.shape.n // 2

    @property
    def b_unlabeled(self) -> bool:
        return self.j_prime == self.shape.m // 2


def compute_params(shape: GraphShape) -> TheoremParams:
    m, n = shape.m, shape.n
    ones = m * n // 2
    k = m * n // (n + 2)
    k_prime = ones % (n // 2 + 1)
    j = m * n // (m + 2)
    j_prime = ones % (m // 2 + 1)
    # leftovers never reach another full 1-vertex
    assert k_prime <= n // 2 and j_prime <= m // 2

    if n == 2:
        return TheoremParams(shape, k, k_prime, j, j_prime, Case.N_EQUALS_2, 0)

    extra = int(k_prime == n // 2) + int(j_prime == m // 2)
    case = (Case.NONE_UNLABELED, Case.ONE_UNLABELED, Case.BOTH_UNLABELED)[extra]
    max_index = 2 * (k + j) + extra - m - n
    return TheoremParams(shape, k, k_prime, j, j_prime, case, max_index)


def max_index(shape: GraphShape) -> int:
    return compute_params(shape).max_index


def ebi_set(shape: GraphShape) -> set[int]:
    """Every achievable balanced index: the full interval ``0..max``."""
    return set(range(compute_params(shape).max_index + 1))
