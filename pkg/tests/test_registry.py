# -*- coding: utf-8 -*-
import pytest

from degenerate_eulerian import catalog  # noqa: F401  (registers the checks)
from degenerate_eulerian.algebra import T
from degenerate_eulerian.context import SequenceContext
from degenerate_eulerian.errors import UnknownIdentity
from degenerate_eulerian.registry import CheckFailed, CheckRun, get_check, identity, registered, registered_tags

EXPECTED_TAGS = {
    "EQ01_GF", "EQ02_VS_EQ04", "EQ05_GF", "EQ06_UMBRAL", "EQ07_COEFFS", "EQ08_TABLE",
    "EQ09_WORPITZKY", "EQ10_RECURSION", "EQ11_POWER_SUM", "EQ12_GF", "EQ13_GF", "EQ14_GF",
    "EQ15_GF", "EQ16_GF", "EQ18_UMBRAL_DEG", "EQ20_RECURSION_DEG", "EQ22_STIRLING_TRANSFORM",
    "EQ23_25_28_NUMBERS", "EQ26_27_ORDERED_BELL", "EQ30_FROBENIUS_FORM", "EQ31_BELL_FROBENIUS",
    "EQ41_Q_FORM", "EQ44_46_MOMENT", "LIMIT_LAMBDA_ZERO", "BRIDGE_A_EQUALS_H",
    "STIRLING_ORTHOGONALITY", "BRUTE_FORCE_EULERIAN",
}


class TestRegistry:
    def test_every_tag_registered_once(self):
        tags = registered_tags()
        assert len(tags) == len(set(tags))
        assert set(tags) == EXPECTED_TAGS

    def test_sides_come_from_different_operations(self):
        for check in registered():
            assert check.left_source != check.right_source, check.tag

    def test_only_power_sum_has_two_indices(self):
        assert [c.tag for c in registered() if c.two_index] == ["EQ11_POWER_SUM"]

    def test_unknown_tag(self):
        with pytest.raises(UnknownIdentity) as info:
            get_check("EQ99")
        assert isinstance(info.value, KeyError)
        assert str(info.value) == "unknown identity: EQ99"

    def test_duplicate_registration_rejected(self):
        with pytest.raises(ValueError):
            identity("EQ09_WORPITZKY", description="", anchor="", left="a", right="b")(lambda run: None)
        assert len(registered_tags()) == len(EXPECTED_TAGS)

    def test_same_source_rejected(self):
        with pytest.raises(ValueError):
            identity("SELF_CHECK", description="", anchor="", left="a", right="a")(lambda run: None)
        assert "SELF_CHECK" not in registered_tags()


class TestCheckRun:
    def test_equal_sides_pass(self):
        run = CheckRun(ctx=SequenceContext(), n_max=1)
        run.compare({"n": 1}, 1 + T, T + 1)
        run.compare({"n": 1}, 4, 4)
        assert run.comparisons == 2
        assert run.counterexample is None

    def test_mismatch_records_exact_counterexample(self):
        run = CheckRun(ctx=SequenceContext(), n_max=1)
        with pytest.raises(CheckFailed):
            run.compare({"n": 1}, 1 + T, T, label="example")
        counterexample = run.counterexample
        assert counterexample.indices == {"n": 1}
        assert (counterexample.left, counterexample.right, counterexample.difference) == ("1+t", "t", "1")
        assert counterexample.label == "example"
        assert counterexample.point is None

    def test_fast_mode_reports_a_point(self):
        run = CheckRun(ctx=SequenceContext(), n_max=1, mode="fast")
        run.compare({"n": 0}, 1 + T, T + 1)
        with pytest.raises(CheckFailed):
            run.compare({"n": 1}, T, T + 1)
        assert set(run.counterexample.point) == {"t"}

    def test_record_error(self):
        run = CheckRun(ctx=SequenceContext(), n_max=1)
        run.record_error(ZeroDivisionError("boom"))
        assert run.counterexample.label == "computation failed"
        assert "boom" in run.counterexample.left

    def test_cover(self):
        run = CheckRun(ctx=SequenceContext(), n_max=4)
        run.cover(n=(0, 4))
        assert run.covered == {"n": [0, 4]}
