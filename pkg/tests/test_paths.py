"""Path representations: conversions, validation and their laws."""

import random

import pytest
from hypothesis import given

from conftest import g_with_src_len, random_g
from dualpath import (
    ActionSequence,
    GSequence,
    PathError,
    actions_to_g,
    coverage_matrix,
    g_to_actions,
    validate_path,
)


class TestGSequence:
    def test_rejects_empty(self):
        with pytest.raises(PathError):
            GSequence(())

    def test_rejects_zero_and_negative(self):
        with pytest.raises(PathError):
            GSequence((0,))
        with pytest.raises(PathError):
            GSequence((-1, 2))

    def test_rejects_non_monotone(self):
        with pytest.raises(PathError):
            GSequence((2, 1))

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            GSequence((1.5, 2.0))

    def test_coerce_accepts_lists(self):
        assert GSequence.coerce([1, 2, 2]).values == (1, 2, 2)


class TestActionsToG:
    def test_segmented_path(self):
        a = ActionSequence.from_string("RRWWWRWWRRW")
        assert (a.target_len, a.source_len) == (6, 5)
        assert actions_to_g(a).values == (2, 2, 2, 3, 3, 5)

    def test_minimal_path(self):
        assert actions_to_g(ActionSequence.from_string("RW")).values == (1,)

    def test_three_segment_path(self):
        a = ActionSequence.from_string("RRWWWRWRW")
        assert (a.target_len, a.source_len) == (5, 4)
        assert actions_to_g(a).values == (2, 2, 2, 3, 4)

    def test_write_before_read_rejected(self):
        with pytest.raises(PathError, match="WRITE before any READ"):
            actions_to_g(ActionSequence.from_string("WR"))

    def test_declared_count_mismatch_rejected(self):
        with pytest.raises(PathError, match="WRITE count"):
            actions_to_g(ActionSequence("RRW", source_len=2, target_len=2))

    def test_bad_alphabet_rejected(self):
        with pytest.raises(PathError, match="invalid action characters"):
            actions_to_g(ActionSequence("RXW", source_len=2, target_len=1))


class TestGToActions:
    def test_segmented_path(self):
        assert g_to_actions([2, 2, 2, 3, 3, 5], 5).actions == "RRWWWRWWRRW"

    def test_minimal_path(self):
        assert g_to_actions([1], 1).actions == "RW"

    def test_trailing_reads_cover_unread_source(self):
        assert g_to_actions([2, 2], 3).actions == "RRWWR"

    def test_source_too_short_rejected(self):
        with pytest.raises(PathError):
            g_to_actions([2, 3], 2)


class TestCoverageMatrix:
    def test_diagonal(self):
        assert coverage_matrix([1, 2], 2).tolist() == [[1, 0], [1, 1]]

    def test_segmented_path_prefix_lengths(self):
        m = coverage_matrix([2, 2, 2, 3, 3, 5], 5)
        assert m.sum(axis=1).tolist() == [2, 2, 2, 3, 3, 5]
        # each row is a contiguous prefix
        for row, g_i in zip(m, (2, 2, 2, 3, 3, 5)):
            assert row[:g_i].all() and not row[g_i:].any()

    def test_full_sentence_policy_is_all_ones(self):
        assert coverage_matrix([4] * 3, 4).all()


class TestValidatePath:
    def test_valid_path(self):
        assert validate_path(ActionSequence.from_string("RRWWWRWWRRW")).ok

    def test_write_before_read(self):
        report = validate_path(ActionSequence.from_string("WR"))
        assert any("WRITE before any READ" in v for v in report.violations)

    def test_declared_write_count_mismatch(self):
        report = validate_path(ActionSequence("RRW", source_len=2, target_len=2))
        assert not report.ok
        assert any("WRITE count" in v for v in report.violations)

    def test_reports_all_violations(self):
        report = validate_path(ActionSequence("W", source_len=1, target_len=2))
        assert len(report.violations) >= 3


@given(g_with_src_len())
def test_round_trip_and_length_law(case):
    g, src_len = case
    a = g_to_actions(g, src_len)
    assert len(a.actions) == len(g) + src_len
    assert actions_to_g(a) == g


@given(g_with_src_len())
def test_coverage_row_sums_equal_g(case):
    g, src_len = case
    assert coverage_matrix(g, src_len).sum(axis=1).tolist() == list(g.values)


def test_fuzz_conversions_exact():
    # 1000 seeded instances: conversions round-trip and stay consistent.
    rng = random.Random(20240511)
    for _ in range(1000):
        g, src_len = random_g(rng)
        a = g_to_actions(g, src_len)
        assert len(a.actions) == len(g) + src_len
        assert actions_to_g(a) == g
        assert coverage_matrix(g, src_len).sum(axis=1).tolist() == list(g.values)
