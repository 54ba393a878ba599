# -*- coding: utf-8 -*-
import pytest

from degenerate_eulerian.catalog import all_passed, list_identities, verify, verify_all
from degenerate_eulerian.errors import MissingSecondIndex, NegativeIndex, UnknownIdentity
from degenerate_eulerian.registry import registered_tags


class TestListIdentities:
    def test_complete_and_stable(self):
        infos = list_identities()
        assert len(infos) >= 27
        assert [info.tag for info in infos] == list(registered_tags())
        assert [info.tag for info in list_identities()] == [info.tag for info in infos]

    def test_worpitzky_anchor(self):
        by_tag = {info.tag: info for info in list_identities()}
        assert by_tag["EQ09_WORPITZKY"].anchor == "Eq. (9)"
        assert "Worpitzky" in by_tag["EQ09_WORPITZKY"].description


class TestVerify:
    def test_worpitzky(self):
        report = verify("EQ09_WORPITZKY", 6)
        assert report.passed
        assert report.counterexample is None
        assert report.range["n"] == [1, 6]
        assert report.comparisons == 6

    def test_stirling_transform_base_case(self):
        assert verify("EQ22_STIRLING_TRANSFORM", 0).passed

    def test_power_sum_under_the_k_to_the_n_reading(self):
        report = verify("EQ11_POWER_SUM", 4, 6)
        assert report.passed
        assert report.range["m"] == [1, 6]
        assert any("(0, 2)" in note for note in report.notes)

    def test_power_sum_needs_second_index(self):
        with pytest.raises(MissingSecondIndex):
            verify("EQ11_POWER_SUM", 4)

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            verify("EQ99", 3)

    def test_negative_bound(self):
        with pytest.raises(NegativeIndex):
            verify("EQ09_WORPITZKY", -1)

    def test_eq01_records_its_shift(self):
        report = verify("EQ01_GF", 5)
        assert report.passed
        assert report.notes

    def test_fast_mode(self):
        report = verify("EQ44_46_MOMENT", 4, fast=True)
        assert report.passed
        assert report.mode == "fast"

    def test_reports_are_deterministic(self):
        first = verify("EQ41_Q_FORM", 5).model_dump(exclude={"elapsed"})
        second = verify("EQ41_Q_FORM", 5).model_dump(exclude={"elapsed"})
        assert first == second


class TestFaultInjection:
    def test_corrupted_eulerian_entry_is_named(self, eulerian_corrupted_ctx):
        report = verify("EQ02_VS_EQ04", 6, ctx=eulerian_corrupted_ctx)
        assert not report.passed
        assert report.counterexample.indices == {"n": 3, "m": 1}
        assert (report.counterexample.left, report.counterexample.right) == ("4", "5")
        assert report.counterexample.difference == "-1"

    def test_bruteforce_oracle_sees_corruption(self, eulerian_corrupted_ctx):
        report = verify("BRUTE_FORCE_EULERIAN", 5, ctx=eulerian_corrupted_ctx)
        assert report.counterexample.indices == {"n": 3, "m": 1}

    def test_corrupted_stirling_entry(self, stirling_corrupted_ctx):
        reports = {r.id: r for r in verify_all(8, ctx=stirling_corrupted_ctx)}
        for tag in ("EQ22_STIRLING_TRANSFORM", "EQ41_Q_FORM", "EQ30_FROBENIUS_FORM", "STIRLING_ORTHOGONALITY"):
            assert not reports[tag].passed, tag
            assert reports[tag].counterexample.indices["n"] == 4, tag
        assert reports["EQ22_STIRLING_TRANSFORM"].counterexample.difference == "λ^2+tλ^2"
        # sides that never read the triangles are unaffected
        assert reports["EQ10_RECURSION"].passed
        assert reports["BRIDGE_A_EQUALS_H"].passed

    def test_pristine_default_context_unaffected(self, stirling_corrupted_ctx):
        verify("EQ22_STIRLING_TRANSFORM", 6, ctx=stirling_corrupted_ctx)
        assert verify("EQ22_STIRLING_TRANSFORM", 6).passed


class TestVerifyAll:
    def test_base_cases(self):
        reports = verify_all(0)
        assert len(reports) == len(registered_tags())
        assert all_passed(reports)

    def test_full_suite(self):
        reports = verify_all(8)
        assert len(reports) >= 27
        failed = [r.id for r in reports if not r.passed]
        assert failed == []

    def test_acceptance_range(self):
        reports = verify_all(10)
        assert [r.id for r in reports if not r.passed] == []
        assert {r.range["n_max"] for r in reports} == {10}

    def test_parallel_keeps_registry_order(self):
        reports = verify_all(4, workers=4)
        assert [r.id for r in reports] == list(registered_tags())
        assert all_passed(reports)

    def test_negative_bound(self):
        with pytest.raises(NegativeIndex):
            verify_all(-1)
