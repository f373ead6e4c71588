"""Brute-force and sampled search over edge-friendly labelings.

The search itself only relies on the labeling model and never consults the
construction, so it can be used to check it (see :func:`cross_check`).
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .construction import ConstructionError, generate_trace, verify_trace
from .labeling import EdgeLabeling, GraphShape, batch_indices, is_edge_friendly, make_labeling, stats
from .theorem import ebi_set

_CHUNK = 200_000


class Mode(enum.Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    SAMPLED = "SAMPLED"


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    exhaustive_edge_budget: int = 24
    sample_count: int = 1_000_000
    rng_seed: int = 0
    halve_by_complement: bool = True

    def __post_init__(self) -> None:
        if self.exhaustive_edge_budget < 4:
            raise ValueError("exhaustive_edge_budget must be >= 4")
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")


@dataclass
class OracleReport:
    shape: GraphShape
    mode: Mode
    achieved: set[int]
    visited: int
    witnesses: dict[int, EdgeLabeling] = field(default_factory=dict)
    seed: int | None = None

    @property
    def max_achieved(self) -> int:
        return max(self.achieved)

    def to_dict(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "mode": self.mode.value,
            "visited": self.visited,
            "achieved": sorted(self.achieved),
            "witnesses": {str(i): self.witnesses[i].to_csv() for i in sorted(self.witnesses)},
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _check_budget(shape: GraphShape, budget: int) -> None:
    if shape.edges > budget:
        raise BudgetExceeded(
            f"{shape} has {shape.edges} edges, over the exhaustive budget of {budget}"
        )


def _one_positions(shape: GraphShape, halve: bool) -> Iterator[tuple[int, ...]]:
    # lexicographic; with ``halve`` only sets containing position 0, which are
    # exactly the first C(mn-1, mn/2-1) sets of the full order
    edges, ones = shape.edges, shape.edges // 2
    if halve:
        return ((0,) + rest for rest in itertools.combinations(range(1, edges), ones - 1))
    return itertools.combinations(range(edges), ones)


def count_edge_friendly(shape: GraphShape, halve: bool = False) -> int:
    edges, ones = shape.edges, shape.edges // 2
    return math.comb(edges - 1, ones - 1) if halve else math.comb(edges, ones)


def enumerate_edge_friendly(
    shape: GraphShape, budget: int = 24, halve: bool = False
) -> Iterator[EdgeLabeling]:
    """Yield each ``n x m`` matrix with ``mn/2`` ones exactly once.

    Matrices are flattened row-major and ordered lexicographically by the
    positions of their ones.  ``halve`` keeps only those with entry (1,1) = 1;
    the rest are their complements and have the same indices.
    """
    _check_budget(shape, budget)
    for ones in _one_positions(shape, halve):
        flat = np.zeros(shape.edges, dtype=np.uint8)
        flat[list(ones)] = 1
        yield make_labeling(shape, flat.reshape(shape.n, shape.m))


def _record(
    report: OracleReport, batch: np.ndarray, indices: np.ndarray, shape: GraphShape
) -> None:
    values, first = np.unique(indices, return_index=True)
    for value, pos in zip(values.tolist(), first.tolist()):
        if value not in report.achieved:
            report.achieved.add(value)
            report.witnesses[value] = make_labeling(shape, batch[pos])


def _exhaustive(shape: GraphShape, config: OracleConfig) -> OracleReport:
    _check_budget(shape, config.exhaustive_edge_budget)
    halve = config.halve_by_complement
    half = shape.edges // 2
    report = OracleReport(shape, Mode.EXHAUSTIVE, set(), 0)
    source = _one_positions(shape, halve)
    while True:
        chunk = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(source, _CHUNK)),
            dtype=np.int64,
        )
        if chunk.size == 0:
            break
        positions = chunk.reshape(-1, half)
        batch = np.zeros((len(positions), shape.edges), dtype=np.uint8)
        np.put_along_axis(batch, positions, 1, axis=1)
        batch = batch.reshape(-1, shape.n, shape.m)
        _record(report, batch, batch_indices(batch, shape), shape)
        report.visited += len(positions)
    return report


def _sampled(shape: GraphShape, config: OracleConfig) -> OracleReport:
    rng = np.random.default_rng(config.rng_seed)
    report = OracleReport(shape, Mode.SAMPLED, set(), 0, seed=config.rng_seed)
    base = np.zeros(shape.edges, dtype=np.uint8)
    base[: shape.edges // 2] = 1
    remaining = config.sample_count
    while remaining:
        size = min(remaining, _CHUNK)
        batch = rng.permuted(np.broadcast_to(base, (size, shape.edges)), axis=1)
        batch = batch.reshape(size, shape.n, shape.m)
        _record(report, batch, batch_indices(batch, shape), shape)
        report.visited += size
        remaining -= size
    return report


def brute_force_ebi(
    shape: GraphShape, config: OracleConfig | None = None, mode: Mode | None = None
) -> OracleReport:
    """Indices reached by edge-friendly labelings of ``shape``.

    Exhaustive when the edge count fits the budget (the result is then the
    exact index set), otherwise uniform samples of edge-friendly labelings.
    """
    config = config or OracleConfig()
    if mode is None:
        fits = shape.edges <= config.exhaustive_edge_budget
        mode = Mode.EXHAUSTIVE if fits else Mode.SAMPLED
    if mode is Mode.EXHAUSTIVE:
        return _exhaustive(shape, config)
    return _sampled(shape, config)


def witnesses_valid(report: OracleReport) -> bool:
    return all(
        is_edge_friendly(lab) and stats(lab).index == index
        for index, lab in report.witnesses.items()
    )


@dataclass
class Verdict:
    shape: GraphShape
    mode: Mode
    oracle_set: set[int]
    theorem_set: set[int]
    construction_final: int | None
    discrepancies: list[str]

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def summary(self) -> str:
        lo_hi = f"0..{max(self.theorem_set)}"
        if self.passed:
            return f"{self.shape}: PASS ({self.mode.value}, EBI = {lo_hi})"
        return f"{self.shape}: FAIL ({self.mode.value}): " + "; ".join(self.discrepancies)


def cross_check(
    shape: GraphShape, config: OracleConfig | None = None, mode: Mode | None = None
) -> Verdict:
    """Compare search results, the closed form and the construction."""
    report = brute_force_ebi(shape, config, mode)
    expected = ebi_set(shape)
    top = max(expected)
    problems = []

    if not witnesses_valid(report):
        problems.append("a stored witness does not re-measure to its index")
    if report.mode is Mode.EXHAUSTIVE:
        if report.achieved != expected:
            problems.append(
                f"exhaustive set {sorted(report.achieved)} != closed form {sorted(expected)}"
            )
    elif report.max_achieved > top:
        problems.append(f"sample reached index {report.max_achieved} above maximum {top}")

    final = None
    try:
        trace_report = verify_trace(generate_trace(shape))
    except ConstructionError as exc:
        problems.append(f"construction failed: {exc}")
    else:
        final = trace_report.final_measured
        if not trace_report.passed:
            problems.append(trace_report.summary())

    return Verdict(shape, report.mode, report.achieved, expected, final, problems)
