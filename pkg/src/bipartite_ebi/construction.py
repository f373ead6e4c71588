"""Switching construction of witness labelings for every balanced index.

Starting from the labeling whose top half is all 1s (index 0), a fixed
sequence of 0/1 exchanges pushes part-A vertices, then part-B vertices, to
1-vertices.  No exchange changes the index by more than one and the last one
reaches the maximum, so the replayed sequence contains a witness for every
value in between.

Phases:

* ``STEP1``  -- for ``a`` in ``1..m/2-1`` move a 1 from the top half into row
  ``n/2+1`` at column ``a``.
* ``STEP2``  -- two double exchanges at columns ``m/2`` and ``m/2+1``.
* ``STEP3``  -- the STEP1 move for ``a`` in ``m/2+2..k``.
* ``STEP4A`` / ``STEP4B`` -- same-column moves that shed surplus 1s from the
  1-vertex rows into the bottom rows, ``m/2+1`` at a time.

Generation stops once the labeling is extremal (see :func:`generate_trace`).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator

from .labeling import (
    EdgeLabeling,
    GraphShape,
    LabelingError,
    Switch,
    apply_switch,
    is_edge_friendly,
    make_labeling,
    stats,
)
from .theorem import TheoremParams, compute_params


class ConstructionError(RuntimeError):
    """The switch sequence broke one of its own guarantees (a bug, not bad input)."""


class Step(enum.Enum):
    STEP1 = "STEP1"
    STEP2 = "STEP2"
    STEP3 = "STEP3"
    STEP4A = "STEP4A"
    STEP4B = "STEP4B"


@dataclass(frozen=True)
class ConstructionParams:
    """Counts driving the part-B phase.

    ``c`` and ``d`` follow the closed forms ``n/2 - k mod n/2`` and
    ``k - m/2``.  ``full_rows`` is the number of top rows that actually hold
    ``k+1`` ones once the part-A phase is done.  It equals ``c`` unless both
    ``k mod n/2`` and ``k'`` vanish, in which case every row ``1..n/2+1``
    holds exactly ``k`` ones and ``full_rows`` is 0.
    """

    shape: GraphShape
    params: TheoremParams
    c: int
    d: int
    b: int
    full_rows: int

    @property
    def runs_step3(self) -> bool:
        return self.params.k > self.shape.m // 2 + 1

    @property
    def runs_step4(self) -> bool:
        p = self.params
        return p.j > self.shape.n // 2 + 1 or p.b_unlabeled


def construction_params(shape: GraphShape) -> ConstructionParams:
    params = compute_params(shape)
    m, n = shape.m, shape.n
    half = n // 2
    k = params.k
    c = half - k % half
    d = k - m // 2
    if params.b_unlabeled:
        b = m * n // 2 - (m // 2 + 1) * (n // 2 + 1)
    else:
        b = (params.j - (n // 2 + 1)) * (m // 2 + 1)
    # top rows each lost k div n/2 ones (rows below c lost one more)
    full_rows = c if m - k // half == k + 1 else 0
    return ConstructionParams(shape, params, c, d, b, full_rows)


def step0_labeling(shape: GraphShape) -> EdgeLabeling:
    half = shape.n // 2
    rows = [[1] * shape.m] * half + [[0] * shape.m] * half
    return make_labeling(shape, rows)


def qr(a: int, shape: GraphShape) -> tuple[int, int]:
    """Quotient and remainder of ``a - 1`` by ``n/2``."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return divmod(a - 1, shape.n // 2)


@dataclass(frozen=True)
class TraceEntry:
    step: Step
    switch: Switch
    index_after: int


@dataclass(frozen=True)
class SwitchTrace:
    shape: GraphShape
    initial: EdgeLabeling
    entries: tuple[TraceEntry, ...]
    final_index: int

    @property
    def max_index(self) -> int:
        return compute_params(self.shape).max_index

    def labelings(self) -> Iterator[EdgeLabeling]:
        """Yield the labeling after each entry (the initial one excluded)."""
        lab = self.initial
        for entry in self.entries:
            lab = apply_switch(lab, entry.switch)
            yield lab

    def final_labeling(self) -> EdgeLabeling:
        lab = self.initial
        for lab in self.labelings():
            pass
        return lab

    def to_dict(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "max_index": self.max_index,
            "entries": [
                {
                    "step": e.step.value,
                    "switch": e.switch.as_lists(),
                    "index_after": e.index_after,
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> SwitchTrace:
        shape = GraphShape(m=int(data["m"]), n=int(data["n"]))
        entries = tuple(
            TraceEntry(
                Step(e["step"]),
                Switch(tuple(e["switch"][0]), tuple(e["switch"][1])),
                int(e["index_after"]),
            )
            for e in data["entries"]
        )
        final = entries[-1].index_after if entries else 0
        return cls(shape, step0_labeling(shape), entries, final)

    @classmethod
    def from_json(cls, text: str) -> SwitchTrace:
        return cls.from_dict(json.loads(text))


def planned_moves(cp: ConstructionParams) -> Iterator[list[tuple[Step, Switch]]]:
    """The full schedule as moves, before any early termination.

    A move is one switch, except in STEP2 where both halves of a double
    switch form one move; generation only stops between moves.
    """
    m, n = cp.shape.m, cp.shape.n
    half = n // 2
    pivot = half + 1
    k = cp.params.k

    def part_a_move(a: int) -> Switch:
        q, r = qr(a, cp.shape)
        return Switch((pivot, a), (half - r, m - q))

    for a in range(1, m // 2):
        yield [(Step.STEP1, part_a_move(a))]

    for col in (m // 2, m // 2 + 1):
        q, r = qr(col, cp.shape)
        yield [
            (Step.STEP2, Switch((pivot, col), (half - r, col))),
            (Step.STEP2, Switch((half - r, col), (half - r, m - q))),
        ]

    if cp.runs_step3:
        for a in range(m // 2 + 2, k + 1):
            yield [(Step.STEP3, part_a_move(a))]

    if not cp.runs_step4:
        return
    width = m // 2 + 1
    c, d, b = cp.full_rows, cp.d, cp.b

    def target(a: int) -> tuple[int, int]:
        return half + 2 + (a - 1) // width, 1 + (a - 1) % width

    for a in range(1, min(c * d, b) + 1):
        row, col = target(a)
        yield [(Step.STEP4A, Switch((1 + (a - 1) // d, col), (row, col)))]
    if b > c * d and d == 1:
        raise ConstructionError(
            f"{cp.shape}: rows with k ones have no surplus (d=1) but b={b} > c*d={c * d}"
        )
    for a in range(c * d + 1, b + 1):
        row, col = target(a)
        yield [(Step.STEP4B, Switch((1 + c + (a - 1 - c * d) // (d - 1), col), (row, col)))]


def planned_switches(cp: ConstructionParams) -> Iterator[tuple[Step, Switch]]:
    for move in planned_moves(cp):
        yield from move


def _check_step4_entry(lab: EdgeLabeling, cp: ConstructionParams) -> None:
    half = cp.shape.n // 2
    k = cp.params.k
    expected = (
        [k + 1] * cp.full_rows
        + [k] * (half + 1 - cp.full_rows)
        + [0] * (half - 1)
    )
    actual = list(stats(lab).row_sums)
    if actual != expected:
        raise ConstructionError(
            f"{cp.shape}: row 1-degrees entering the part-B phase are {actual}, "
            f"expected {expected}"
        )


def extremal_counts(params: TheoremParams) -> tuple[int, int, int, int]:
    """``(vA1, vA0, vB1, vB0)`` of a labeling attaining the maximum index."""
    m, n = params.shape.m, params.shape.n
    return (
        params.k,
        m - params.k - params.a_unlabeled,
        params.j,
        n - params.j - params.b_unlabeled,
    )


def _finished(st, params: TheoremParams) -> bool:
    if st.index != params.max_index:
        return False
    return (st.vA1, st.vA0, st.vB1, st.vB0) == extremal_counts(params)


def generate_trace(shape: GraphShape) -> SwitchTrace:
    """Run the switch schedule until an extremal labeling is reached.

    Generation stops after the first move whose labeling has the maximum index
    and extremal vertex counts in both parts.  In a few shapes (``n = 4``,
    ``m = 2 mod 6``) the index peaks while part A still has unlabeled
    vertices; the remaining part-A moves then leave the index unchanged.

    Each exchange is replayed on a live labeling and annotated with the index
    it produces; any drop, jump by more than one, equal-entry exchange or
    failure to finish raises :class:`ConstructionError`.
    """
    cp = construction_params(shape)
    params = cp.params
    initial = step0_labeling(shape)
    if shape.n == 2:
        return SwitchTrace(shape, initial, (), 0)

    lab, index = initial, 0
    entries: list[TraceEntry] = []
    in_step4 = False
    moves = planned_moves(cp)
    while not _finished(stats(lab), params):
        try:
            move = next(moves)
        except StopIteration:
            raise ConstructionError(
                f"{shape}: schedule ended at index {index} with counts "
                f"{stats(lab)}, maximum is {params.max_index}"
            ) from None
        except LabelingError as exc:
            raise ConstructionError(f"{shape}: malformed switch: {exc}") from exc
        for step, sw in move:
            if step in (Step.STEP4A, Step.STEP4B) and not in_step4:
                _check_step4_entry(lab, cp)
                in_step4 = True
            try:
                lab = apply_switch(lab, sw)
            except LabelingError as exc:
                raise ConstructionError(f"{shape}, {step.value}: {exc}") from exc
            new_index = stats(lab).index
            if new_index - index not in (0, 1):
                raise ConstructionError(
                    f"{shape}, {step.value} switch {sw.first}<->{sw.second}: "
                    f"index moved {index} -> {new_index}"
                )
            index = new_index
            entries.append(TraceEntry(step, sw, index))

    return SwitchTrace(shape, initial, tuple(entries), index)


def construct_for_index(shape: GraphShape, target: int) -> EdgeLabeling:
    """First labeling along the construction whose index equals ``target``."""
    top = compute_params(shape).max_index
    if not 0 <= target <= top:
        raise ValueError(f"index {target} is outside 0..{top} for {shape}")
    trace = generate_trace(shape)
    if target == 0:
        return trace.initial
    for entry, lab in zip(trace.entries, trace.labelings()):
        if entry.index_after == target:
            return lab
    raise ConstructionError(f"{shape}: trace never reached index {target}")


@dataclass(frozen=True)
class EntryCheck:
    position: int
    measured: int | None
    expected: int
    edge_friendly: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.edge_friendly and self.measured == self.expected


@dataclass(frozen=True)
class TraceReport:
    shape: GraphShape
    checks: tuple[EntryCheck, ...]
    final_measured: int
    max_index: int
    first_failure: int | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.first_failure is None and self.final_measured == self.max_index

    def summary(self) -> str:
        if self.passed:
            return f"{self.shape}: PASS ({len(self.checks)} switches, final index {self.final_measured})"
        if self.first_failure is not None:
            bad = self.checks[self.first_failure - 1]
            why = bad.error or (
                f"measured {bad.measured}, expected {bad.expected}"
                + ("" if bad.edge_friendly else ", not edge-friendly")
            )
            return f"{self.shape}: FAIL at switch {self.first_failure}: {why}"
        return f"{self.shape}: FAIL final index {self.final_measured} != max {self.max_index}"


def verify_trace(trace: SwitchTrace) -> TraceReport:
    """Replay ``trace`` from its initial labeling and compare every index."""
    lab = trace.initial
    checks: list[EntryCheck] = []
    first_failure = None
    measured = stats(lab).index
    for pos, entry in enumerate(trace.entries, 1):
        try:
            lab = apply_switch(lab, entry.switch)
        except LabelingError as exc:
            checks.append(EntryCheck(pos, None, entry.index_after, False, str(exc)))
            first_failure = first_failure or pos
            break
        measured = stats(lab).index
        check = EntryCheck(pos, measured, entry.index_after, is_edge_friendly(lab))
        checks.append(check)
        if not check.ok and first_failure is None:
            first_failure = pos
    top = compute_params(trace.shape).max_index
    return TraceReport(trace.shape, tuple(checks), measured, top, first_failure)
