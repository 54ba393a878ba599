# -*- coding: utf-8 -*-
import pytest
from pydantic import ValidationError

from degenerate_eulerian.models import Counterexample, IdentityReport, OutputDocument


def _counterexample():
    return Counterexample(indices={"n": 3, "m": 1}, left="4", right="5", difference="-1")


def test_fail_requires_counterexample():
    with pytest.raises(ValidationError):
        IdentityReport(id="EQ02_VS_EQ04", range={"n_max": 3}, status="fail", elapsed=0.0)


def test_pass_forbids_counterexample():
    with pytest.raises(ValidationError):
        IdentityReport(
            id="EQ02_VS_EQ04", range={"n_max": 3}, status="pass", counterexample=_counterexample(), elapsed=0.0
        )


def test_failed_report():
    report = IdentityReport(
        id="EQ02_VS_EQ04", range={"n_max": 3}, status="fail", counterexample=_counterexample(), elapsed=0.1
    )
    assert not report.passed
    assert report.counterexample.label is None
    assert report.model_dump()["counterexample"]["indices"] == {"n": 3, "m": 1}


def test_negative_elapsed_rejected():
    with pytest.raises(ValidationError):
        IdentityReport(id="EQ09_WORPITZKY", range={}, status="pass", elapsed=-1.0)


def test_document_values_must_be_strings():
    with pytest.raises(ValidationError):
        OutputDocument(command="table", version="0", results=[{"n": 0, "value": 1}])
    with pytest.raises(ValidationError):
        OutputDocument(command="table", version="0", results=[{"n": 0, "row": ["1", 2]}])


def test_format_is_not_serialized():
    doc = OutputDocument(format="csv", command="table", version="0")
    assert "format" not in doc.model_dump()
    assert set(doc.model_dump()) == {"command", "version", "params", "results"}
