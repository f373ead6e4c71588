"""Binary edge labelings of complete bipartite graphs K(m,n).

A labeling is stored as an ``n x m`` matrix of 0/1 entries.  Row ``s`` is the
part-B vertex ``u_s`` and column ``t`` is the part-A vertex ``v_t``, so the
entry at ``(s, t)`` is the label on edge ``u_s v_t``.  Every public position is
1-based.  A vertex is a 1-vertex when most of its incident edges carry 1, a
0-vertex when most carry 0, and unlabeled on a tie.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class LabelingError(ValueError):
    """Raised for malformed shapes, matrices or switches."""


class VertexLabel(enum.Enum):
    ZERO = 0
    ONE = 1
    UNLABELED = 2


@dataclass(frozen=True)
class GraphShape:
    """Part sizes of K(m,n); ``m`` counts part A (columns), ``n`` part B (rows)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        for name, value in (("m", self.m), ("n", self.n)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise LabelingError(f"{name} must be an integer, got {value!r}")
            if value < 2 or value % 2:
                raise LabelingError(
                    f"{name}={value}: part cardinalities must be positive even integers"
                )
        if self.m < self.n:
            raise LabelingError(f"need m >= n, got m={self.m}, n={self.n}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))

    @property
    def edges(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"K({self.m},{self.n})"


@dataclass(frozen=True, eq=False)
class EdgeLabeling:
    """Immutable ``n x m`` 0/1 matrix of edge labels."""

    shape: GraphShape
    entries: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeLabeling):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.shape, self.entries.tobytes()))

    def __getitem__(self, pos: tuple[int, int]) -> int:
        row, col = _check_position(self.shape, pos)
        return int(self.entries[row - 1, col - 1])

    def to_lists(self) -> list[list[int]]:
        return self.entries.astype(int).tolist()

    def to_csv(self) -> str:
        return "".join(",".join(str(v) for v in row) + "\n" for row in self.to_lists())

    def to_pretty(self) -> str:
        return "".join(" ".join(str(v) for v in row) + "\n" for row in self.to_lists())

    def flipped(self) -> EdgeLabeling:
        """Complement labeling: every 0-edge becomes a 1-edge and vice versa."""
        return make_labeling(self.shape, 1 - self.entries)


@dataclass(frozen=True)
class LabelingStats:
    e0: int
    e1: int
    col_sums: tuple[int, ...]
    row_sums: tuple[int, ...]
    vA1: int
    vA0: int
    vAu: int
    vB1: int
    vB0: int
    vBu: int

    @property
    def v1(self) -> int:
        return self.vA1 + self.vB1

    @property
    def v0(self) -> int:
        return self.vA0 + self.vB0

    @property
    def index(self) -> int:
        return abs(self.v1 - self.v0)


@dataclass(frozen=True)
class Switch:
    """Exchange of the entries at two distinct 1-based positions."""

    first: tuple[int, int]
    second: tuple[int, int]

    def __post_init__(self) -> None:
        first = tuple(int(v) for v in self.first)
        second = tuple(int(v) for v in self.second)
        if len(first) != 2 or len(second) != 2:
            raise LabelingError("switch positions must be (row, col) pairs")
        if first == second:
            raise LabelingError(f"switch positions must differ, got {first} twice")
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def as_lists(self) -> list[list[int]]:
        return [list(self.first), list(self.second)]


def make_labeling(shape: GraphShape, entries: Sequence[Sequence[int]] | np.ndarray) -> EdgeLabeling:
    """Validate ``entries`` against ``shape`` and freeze them into a labeling.

    Edge-friendliness is not required here; see :func:`is_edge_friendly`.
    """
    arr = np.asarray(entries)
    if arr.shape != (shape.n, shape.m):
        raise LabelingError(
            f"{shape} needs a {shape.n}x{shape.m} matrix, got shape {arr.shape}"
        )
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise LabelingError("labeling entries must all be 0 or 1")
    frozen = arr.astype(np.uint8)
    frozen.flags.writeable = False
    return EdgeLabeling(shape, frozen)


def _vertex_counts(sums: np.ndarray, half: int) -> tuple[int, int, int]:
    ones = int(np.count_nonzero(sums > half))
    zeros = int(np.count_nonzero(sums < half))
    return ones, zeros, len(sums) - ones - zeros


def stats(lab: EdgeLabeling) -> LabelingStats:
    m, n = lab.shape.m, lab.shape.n
    col = lab.entries.sum(axis=0, dtype=np.int64)
    row = lab.entries.sum(axis=1, dtype=np.int64)
    e1 = int(col.sum())
    vA1, vA0, vAu = _vertex_counts(col, n // 2)
    vB1, vB0, vBu = _vertex_counts(row, m // 2)
    return LabelingStats(
        e0=m * n - e1,
        e1=e1,
        col_sums=tuple(int(v) for v in col),
        row_sums=tuple(int(v) for v in row),
        vA1=vA1, vA0=vA0, vAu=vAu,
        vB1=vB1, vB0=vB0, vBu=vBu,
    )


def vertex_labels(lab: EdgeLabeling) -> tuple[list[VertexLabel], list[VertexLabel]]:
    """Induced labels as ``(part_A, part_B)``, i.e. per column then per row."""

    def label(total: int, half: int) -> VertexLabel:
        if total > half:
            return VertexLabel.ONE
        if total < half:
            return VertexLabel.ZERO
        return VertexLabel.UNLABELED

    st = stats(lab)
    part_a = [label(v, lab.shape.n // 2) for v in st.col_sums]
    part_b = [label(v, lab.shape.m // 2) for v in st.row_sums]
    return part_a, part_b


def is_edge_friendly(lab: EdgeLabeling) -> bool:
    e1 = int(lab.entries.sum())
    return abs(e1 - (lab.shape.edges - e1)) <= 1


def balanced_index(lab: EdgeLabeling) -> int:
    return stats(lab).index


def batch_indices(batch: np.ndarray, shape: GraphShape) -> np.ndarray:
    """Balanced index of each matrix in a ``(N, n, m)`` 0/1 stack."""
    col = batch.sum(axis=1, dtype=np.int16)
    row = batch.sum(axis=2, dtype=np.int16)
    half_n, half_m = shape.n // 2, shape.m // 2
    score = (
        np.sign(col - half_n, dtype=np.int16).sum(axis=1, dtype=np.int32)
        + np.sign(row - half_m, dtype=np.int16).sum(axis=1, dtype=np.int32)
    )
    return np.abs(score)


def _check_position(shape: GraphShape, pos: Iterable[int]) -> tuple[int, int]:
    row, col = (int(v) for v in pos)
    if not (1 <= row <= shape.n and 1 <= col <= shape.m):
        raise LabelingError(
            f"position ({row}, {col}) outside the {shape.n}x{shape.m} matrix"
        )
    return row, col


def apply_switch(lab: EdgeLabeling, sw: Switch) -> EdgeLabeling:
    """Return ``lab`` with the two switched entries exchanged.

    Both entries must differ: swapping equal labels is a no-op and only ever
    comes from a broken switch sequence, so it is rejected.
    """
    r1, c1 = _check_position(lab.shape, sw.first)
    r2, c2 = _check_position(lab.shape, sw.second)
    a, b = lab.entries[r1 - 1, c1 - 1], lab.entries[r2 - 1, c2 - 1]
    if a == b:
        raise LabelingError(
            f"switch {sw.first}<->{sw.second} exchanges two equal entries ({a})"
        )
    out = lab.entries.copy()
    out[r1 - 1, c1 - 1], out[r2 - 1, c2 - 1] = b, a
    out.flags.writeable = False
    return EdgeLabeling(lab.shape, out)


def parse_csv(text: str, shape: GraphShape | None = None) -> EdgeLabeling:
    """Read the headerless 0/1 CSV format; the shape is inferred when omitted."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise LabelingError(f"line {lineno}: non-integer token") from exc
    if not rows:
        raise LabelingError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise LabelingError("ragged matrix: rows differ in length")
    if shape is None:
        shape = GraphShape(m=len(rows[0]), n=len(rows))
    return make_labeling(shape, rows)
