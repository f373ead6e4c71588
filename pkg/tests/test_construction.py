import json

import pytest

from bipartite_ebi import (
    ConstructionError,
    GraphShape,
    SwitchTrace,
    construct_for_index,
    compute_params,
    generate_trace,
    is_edge_friendly,
    stats,
    step0_labeling,
    verify_trace,
)
from bipartite_ebi import Switch
from bipartite_ebi.construction import Step, TraceEntry, construction_params, planned_switches, qr

SHAPES_40 = [(m, n) for n in range(4, 41, 2) for m in range(n, 41, 2)]


def replay(trace):
    """(entry, labeling, stats) for every switch, starting after the first."""
    for entry, lab in zip(trace.entries, trace.labelings()):
        yield entry, lab, stats(lab)


def steps(trace):
    return [e.step for e in trace.entries]


class TestStep0:
    def test_k44_is_figure_a(self, figure1, k44):
        assert step0_labeling(k44) == figure1["a"]

    @pytest.mark.parametrize("m,n", [(6, 4), (8, 2), (40, 40)])
    def test_halves(self, m, n):
        lab = step0_labeling(GraphShape(m, n))
        assert lab.to_lists() == [[1] * m] * (n // 2) + [[0] * m] * (n // 2)
        assert is_edge_friendly(lab)
        assert stats(lab).index == 0


@pytest.mark.parametrize("a,n,expected", [(1, 4, (0, 0)), (3, 4, (1, 0)), (6, 6, (1, 2))])
def test_qr(a, n, expected):
    assert qr(a, GraphShape(max(n, 6), n)) == expected


def test_qr_rejects_zero():
    with pytest.raises(ValueError):
        qr(0, GraphShape(4, 4))


class TestExamples:
    def test_k44_ends_in_step2(self):
        trace = generate_trace(GraphShape(4, 4))
        assert trace.final_index == 2
        assert steps(trace) == [Step.STEP1, Step.STEP2, Step.STEP2]
        assert verify_trace(trace).passed

    def test_k64(self):
        trace = generate_trace(GraphShape(6, 4))
        assert trace.final_index == 4
        assert steps(trace) == [Step.STEP1] * 2 + [Step.STEP2] * 4

    def test_k44_skips_degenerate_second_double_switch(self):
        # the column m/2+1 move would swap (2,3) with itself
        assert len(generate_trace(GraphShape(4, 4)).entries) == 3

    @pytest.mark.parametrize("m", [8, 14, 20, 26, 32, 38])
    def test_part_a_finished_after_peak(self, m):
        trace = generate_trace(GraphShape(m, 4))
        top = compute_params(trace.shape).max_index
        first_peak = next(i for i, e in enumerate(trace.entries) if e.index_after == top)
        tail = trace.entries[first_peak + 1 :]
        assert all(e.index_after == top for e in tail)
        assert {e.step for e in tail} <= {Step.STEP2, Step.STEP3}

    @pytest.mark.parametrize("shape", [(6, 4), (8, 4), (10, 4), (6, 6)])
    def test_listed_early_exits_after_second_double_switch(self, shape):
        trace = generate_trace(GraphShape(*shape))
        m = shape[0]
        assert steps(trace) == [Step.STEP1] * (m // 2 - 1) + [Step.STEP2] * 4
        assert trace.final_index == compute_params(trace.shape).max_index

    def test_k86(self):
        shape = GraphShape(8, 6)
        cp = construction_params(shape)
        assert (cp.c, cp.d, cp.b) == (3, 2, 4)
        assert cp.runs_step3 and cp.runs_step4
        trace = generate_trace(shape)
        s = steps(trace)
        assert s.count(Step.STEP1) == 3
        assert s.count(Step.STEP2) == 4
        assert s.count(Step.STEP3) == 1
        assert trace.final_index == 7

    def test_step3_exit_when_b_has_no_room(self):
        # j = n/2+1 with j' < m/2: nothing left for the part-B phase
        hits = 0
        for m, n in SHAPES_40:
            p = compute_params(GraphShape(m, n))
            if p.j == n // 2 + 1 and p.j_prime < m // 2 and p.k > m // 2 + 1:
                s = steps(generate_trace(GraphShape(m, n)))
                assert Step.STEP4A not in s and Step.STEP4B not in s
                hits += 1
        assert hits > 0

    def test_n_equals_2(self):
        trace = generate_trace(GraphShape(10, 2))
        assert trace.entries == () and trace.final_index == 0
        assert verify_trace(trace).passed


class TestSchedule:
    def test_full_rows_matches_replay(self):
        # both k mod n/2 and k' vanish for (12,6): no row keeps k+1 ones
        cp = construction_params(GraphShape(12, 6))
        assert (cp.params.k % 3, cp.params.k_prime) == (0, 0)
        assert cp.c == 3 and cp.full_rows == 0

    @pytest.mark.parametrize("m,n", SHAPES_40)
    def test_part_b_phase_entry_degrees(self, m, n):
        shape = GraphShape(m, n)
        cp = construction_params(shape)
        trace = generate_trace(shape)
        before = trace.initial
        for entry, lab in zip(trace.entries, trace.labelings()):
            if entry.step in (Step.STEP4A, Step.STEP4B):
                rows = stats(before).row_sums
                k, half = cp.params.k, n // 2
                assert rows[: cp.full_rows] == (k + 1,) * cp.full_rows
                assert rows[cp.full_rows : half + 1] == (k,) * (half + 1 - cp.full_rows)
                assert set(rows[half + 1 :]) == {0}
                break
            before = lab

    def test_plan_covers_trace_prefix(self):
        shape = GraphShape(20, 10)
        planned = [sw for _, sw in planned_switches(construction_params(shape))]
        trace = generate_trace(shape)
        assert [e.switch for e in trace.entries] == planned[: len(trace.entries)]

    def test_c_positive_and_d_positive(self):
        for m, n in SHAPES_40:
            cp = construction_params(GraphShape(m, n))
            assert cp.c >= 1
            if Step.STEP4A in steps(generate_trace(cp.shape)) or Step.STEP4B in steps(
                generate_trace(cp.shape)
            ):
                assert cp.d > 0 and cp.b >= 0


@pytest.mark.parametrize("m,n", SHAPES_40)
def test_trace_invariants(m, n):
    shape = GraphShape(m, n)
    p = compute_params(shape)
    trace = generate_trace(shape)
    index = 0
    after_step1 = None
    step4_cols = None
    lab = trace.initial
    for entry, lab, st in replay(trace):
        assert is_edge_friendly(lab)
        assert st.index == entry.index_after
        assert entry.index_after - index in (0, 1)
        index = entry.index_after
        if entry.step is Step.STEP1:
            after_step1 = st
        if entry.step in (Step.STEP4A, Step.STEP4B):
            if step4_cols is None:
                step4_cols = st.col_sums
            assert st.col_sums == step4_cols
            assert entry.switch.first[1] == entry.switch.second[1]
    assert index == p.max_index == trace.final_index

    if len(steps(trace)) > m // 2 - 1:
        assert after_step1.row_sums[n // 2] == m // 2 - 1

    final = stats(lab)
    assert final.vA1 == p.k
    assert final.vA0 == m - p.k - (p.k_prime == n // 2)
    assert final.vB1 == p.j
    assert final.vB0 == n - p.j - (p.j_prime == m // 2)


class TestConstructForIndex:
    def test_zero_is_step0(self, k44):
        assert construct_for_index(k44, 0) == step0_labeling(k44)

    def test_k44_max(self, k44):
        lab = construct_for_index(k44, 2)
        assert is_edge_friendly(lab) and stats(lab).index == 2

    @pytest.mark.parametrize("m,n", [(6, 4), (8, 6), (14, 10), (40, 40)])
    def test_every_index(self, m, n):
        shape = GraphShape(m, n)
        for t in range(compute_params(shape).max_index + 1):
            lab = construct_for_index(shape, t)
            assert is_edge_friendly(lab) and stats(lab).index == t

    @pytest.mark.parametrize("t", [-1, 3])
    def test_out_of_range(self, k44, t):
        with pytest.raises(ValueError, match="outside"):
            construct_for_index(k44, t)


class TestVerifyTrace:
    def test_large(self):
        report = verify_trace(generate_trace(GraphShape(40, 40)))
        assert report.passed and report.final_measured == 72

    def test_deleted_switch_detected(self):
        trace = generate_trace(GraphShape(8, 6))
        broken = SwitchTrace(trace.shape, trace.initial, trace.entries[:2] + trace.entries[3:],
                             trace.final_index)
        report = verify_trace(broken)
        assert not report.passed
        assert report.first_failure == 3
        assert "FAIL at switch 3" in report.summary()

    def test_equal_swap_reported_not_raised(self):
        trace = generate_trace(GraphShape(4, 4))
        bad = TraceEntry(Step.STEP1, Switch((1, 1), (1, 2)), 0)
        report = verify_trace(SwitchTrace(trace.shape, trace.initial, trace.entries[:1] + (bad,), 0))
        assert report.first_failure == 2
        assert "equal" in report.checks[-1].error

    def test_wrong_annotation_detected(self):
        trace = generate_trace(GraphShape(6, 6))
        data = trace.to_dict()
        data["entries"][0]["index_after"] += 1
        assert verify_trace(SwitchTrace.from_dict(data)).first_failure == 1


def test_json_round_trip():
    trace = generate_trace(GraphShape(8, 6))
    data = json.loads(trace.to_json())
    assert set(data) == {"m", "n", "max_index", "entries"}
    assert data["max_index"] == 7
    assert data["entries"][0] == {"step": "STEP1", "switch": [[4, 1], [3, 8]], "index_after": 0}
    assert SwitchTrace.from_json(trace.to_json()) == trace


def test_equal_swap_in_schedule_raises(monkeypatch):
    import bipartite_ebi.construction as construction

    real = construction.planned_moves

    def broken(cp):
        yield [(Step.STEP1, Switch((1, 1), (1, 2)))]
        yield from real(cp)

    monkeypatch.setattr(construction, "planned_moves", broken)
    with pytest.raises(ConstructionError, match="equal"):
        construction.generate_trace(GraphShape(8, 6))
