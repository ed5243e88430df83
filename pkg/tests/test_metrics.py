"""Latency, sufficiency/necessity and IoU metrics against hand-computed values."""

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import g_with_src_len
from dualpath import (
    DimensionError,
    GSequence,
    MetricUndefinedError,
    average_lagging,
    average_proportion,
    coverage_matrix,
    differentiable_average_lagging,
    evaluate_path,
    iou_duality,
    necessity,
    sufficiency,
    transpose_gsequence,
    wait_k_path,
)


class TestAverageLagging:
    def test_wait_three_equal_lengths(self):
        # terms (3-0)+(4-1)+(5-2)+(6-3) over the 4 steps before the source ends
        assert average_lagging([3, 4, 5, 6, 6, 6], 6, 6) == 3.0

    def test_full_sentence_policy(self):
        for n in (1, 4, 9):
            assert average_lagging([n] * n, n, n) == float(n)

    def test_diagonal_policy(self):
        for n in (1, 3, 8):
            assert average_lagging(list(range(1, n + 1)), n, n) == 1.0

    def test_truncated_path_averages_all_steps(self):
        # g never reaches the source length, so every step counts:
        # (1 - 0) + (1 - 1.5), divided by 2
        assert average_lagging([1, 1], 3, 2) == pytest.approx(0.25)

    def test_rejects_inconsistent_lengths(self):
        with pytest.raises(DimensionError):
            average_lagging([1, 2], 2, 3)
        with pytest.raises(DimensionError):
            average_lagging([4], 3, 1)


class TestAverageProportion:
    def test_full_sentence_policy(self):
        assert average_proportion([5] * 3, 5, 3) == 1.0

    def test_wait_three(self):
        assert average_proportion([3, 4, 5, 6, 6, 6], 6, 6) == pytest.approx(30 / 36)

    def test_single_cell(self):
        assert average_proportion([1], 1, 1) == 1.0

    @given(g_with_src_len())
    def test_lies_in_unit_interval(self, case):
        g, src_len = case
        ap = average_proportion(g, src_len, len(g))
        assert 0.0 < ap <= 1.0
        if any(v < src_len for v in g):
            assert ap < 1.0
        else:
            assert ap == 1.0


class TestDifferentiableAverageLagging:
    def test_wait_three_equal_lengths(self):
        # adjusted path [3,4,5,6,7,8]; every term equals 3
        assert differentiable_average_lagging([3, 4, 5, 6, 6, 6], 6, 6) == 3.0

    def test_diagonal_policy(self):
        for n in (1, 3, 8):
            assert differentiable_average_lagging(list(range(1, n + 1)), n, n) == 1.0

    def test_full_sentence_policy(self):
        # adjusted path J, J+1, ..., so every term is J
        for n in (2, 5):
            assert differentiable_average_lagging([n] * n, n, n) == float(n)

    def test_unequal_lengths(self):
        # g=[2,3,4], J=6, I=3: adjusted [2,4,6], lag term 2(i-1); all terms 2
        assert differentiable_average_lagging([2, 3, 4], 6, 3) == pytest.approx(2.0)


@given(st.integers(1, 9), st.integers(1, 50))
def test_wait_k_lagging_law(k, n):
    # for equal lengths, both lagging metrics equal k whenever k <= n
    assume(k <= n)
    g = wait_k_path(k, n, n)
    assert average_lagging(g, n, n) == pytest.approx(k, abs=1e-9)
    assert differentiable_average_lagging(g, n, n) == pytest.approx(k, abs=1e-9)


class TestSufficiency:
    def test_worked_example(self):
        assert sufficiency([2, 2, 4, 4, 5], [3, 2, 1, 5, 4]) == pytest.approx(3 / 5)

    def test_all_in_time(self):
        assert sufficiency([2, 3], [1, 3]) == 1.0

    def test_forced_anticipation(self):
        assert sufficiency([1], [2]) == 0.0

    def test_unaligned_words_are_skipped(self):
        assert sufficiency([1, 2, 2], [None, 3, None]) == 0.0
        assert sufficiency([1, 2, 2], [None, 2, None]) == 1.0

    def test_no_aligned_words_raises(self):
        with pytest.raises(MetricUndefinedError):
            sufficiency([1, 2], [None, None])

    def test_length_mismatch_raises(self):
        with pytest.raises(DimensionError):
            sufficiency([1, 2], [1])


class TestNecessity:
    def test_worked_example(self):
        # qualifying terms 2/2, 1/4 and 4/5 averaged over the three of them
        assert necessity([2, 2, 4, 4, 5], [3, 2, 1, 5, 4]) == pytest.approx(
            41 / 60, abs=1e-12
        )

    def test_writes_exactly_at_alignment(self):
        assert necessity([1, 3, 3], [1, 3, 3]) == 1.0

    def test_single_late_write(self):
        assert necessity([4], [1]) == 0.25

    def test_empty_qualifying_set_raises(self):
        with pytest.raises(MetricUndefinedError):
            necessity([1], [2])

    @given(g_with_src_len(max_len=20), st.data())
    def test_earlier_writes_never_hurt_for_fixed_qualifying_set(self, case, data):
        g, src_len = case
        oracle = data.draw(
            st.lists(
                st.one_of(st.none(), st.integers(1, src_len)),
                min_size=len(g), max_size=len(g),
            )
        )
        qualifying = [
            a is not None and a <= v for a, v in zip(oracle, g)
        ]
        assume(any(qualifying))
        # lower each step without changing which writes come after their
        # alignment, then restore monotonicity with a running maximum
        floors = [
            a if q else 1 for a, q, in zip((o or 1 for o in oracle), qualifying)
        ]
        lowered = [
            data.draw(st.integers(lo, hi)) for lo, hi in zip(floors, g)
        ]
        running = []
        for v in lowered:
            running.append(v if not running else max(v, running[-1]))
        earlier = GSequence(tuple(running))
        assert necessity(earlier, oracle) >= necessity(g, oracle) - 1e-12


class TestIouDuality:
    def test_shared_segment_pairs_score_one(self):
        assert iou_duality([2, 2, 2, 3, 4], [3, 3, 4, 5]) == 1.0

    def test_six_step_pair_scores_one(self):
        assert iou_duality([2, 2, 2, 3, 3, 5], [3, 3, 5, 6, 6]) == 1.0

    def test_perturbed_pair(self):
        # the reverse path transposes to [1,2,2,3,4]; min/max sums are 12 and 13
        assert iou_duality([2, 2, 2, 3, 4], [1, 3, 4, 5]) == pytest.approx(12 / 13)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            iou_duality([3], [1])
        with pytest.raises(DimensionError):
            iou_duality([1], [2, 2, 2])


@st.composite
def forward_backward_paths(draw, max_len=15):
    tgt_len = draw(st.integers(1, max_len))
    src_len = draw(st.integers(1, max_len))
    fwd = sorted(draw(st.lists(st.integers(1, src_len), min_size=tgt_len, max_size=tgt_len)))
    bwd = sorted(draw(st.lists(st.integers(1, tgt_len), min_size=src_len, max_size=src_len)))
    return GSequence(tuple(fwd)), GSequence(tuple(bwd))


@given(forward_backward_paths())
def test_iou_matches_binary_matrix_oracle(pair):
    g_fwd, g_bwd = pair
    src_len = len(g_bwd)
    p = coverage_matrix(g_fwd, src_len).astype(bool)
    tp = coverage_matrix(
        transpose_gsequence(g_bwd, src_len=len(g_fwd)).g_back, src_len
    ).astype(bool)
    intersection = np.logical_and(p, tp).sum()
    union = np.logical_or(p, tp).sum()
    assert iou_duality(g_fwd, g_bwd) == intersection / union
    # the matrix formula itself is symmetric
    assert (
        np.logical_and(tp, p).sum() / np.logical_or(tp, p).sum()
        == intersection / union
    )


@given(g_with_src_len(max_len=15), st.data())
def test_alignment_scores_stay_in_range(case, data):
    g, src_len = case
    oracle = data.draw(
        st.lists(
            st.one_of(st.none(), st.integers(1, src_len)),
            min_size=len(g), max_size=len(g),
        ).filter(lambda xs: any(x is not None for x in xs))
    )
    assert 0.0 <= sufficiency(g, oracle) <= 1.0
    if any(a is not None and a <= v for a, v in zip(oracle, g)):
        assert 0.0 < necessity(g, oracle) <= 1.0


@given(forward_backward_paths())
def test_iou_stays_in_range(pair):
    g_fwd, g_bwd = pair
    assert 0.0 < iou_duality(g_fwd, g_bwd) <= 1.0


@given(g_with_src_len(terminal=True))
def test_oracle_path_saturates_all_three_scores(case):
    # a monotone, fully aligned sentence where the path writes exactly at
    # each alignment: sufficiency, necessity and IoU all reach their best
    g, src_len = case
    oracle = list(g.values)
    assert sufficiency(g, oracle) == 1.0
    assert necessity(g, oracle) == 1.0
    assert iou_duality(g, transpose_gsequence(g, src_len).g_back) == 1.0


class TestEvaluatePath:
    def test_with_alignment(self):
        report = evaluate_path([2, 2, 4, 4, 5], 5, [3, 2, 1, 5, 4])
        assert report.a_suf == pytest.approx(3 / 5)
        assert report.a_nec == pytest.approx(41 / 60, abs=1e-12)
        assert report.aligned_count == 5
        assert report.qualifying_count == 3
        assert report.tau == 5
        assert (report.src_len, report.tgt_len) == (5, 5)

    def test_without_alignment(self):
        report = evaluate_path([1, 2], 2)
        assert report.a_suf is None and report.a_nec is None
        assert report.aligned_count == 0 and report.qualifying_count == 0
        assert report.al == 1.0

    def test_fully_unaligned_sentence(self):
        report = evaluate_path([1, 2], 2, [None, None])
        assert report.a_suf is None and report.a_nec is None

    def test_no_qualifying_writes(self):
        report = evaluate_path([1], 2, [2])
        assert report.a_suf == 0.0
        assert report.a_nec is None
