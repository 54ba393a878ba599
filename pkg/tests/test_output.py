# -*- coding: utf-8 -*-
import json

import pytest

from degenerate_eulerian.algebra import LAM, T
from degenerate_eulerian.catalog import list_identities, verify
from degenerate_eulerian.errors import NegativeIndex, PoleEncountered
from degenerate_eulerian.output import (
    decode_exact,
    document_values,
    exact_value,
    expand_document,
    list_document,
    parse_csv_rows,
    parse_json_document,
    render_csv,
    render_document,
    render_json,
    render_text,
    table_document,
    verify_document,
)


class TestTables:
    def test_eulerian_csv_golden(self):
        rows = parse_csv_rows(render_csv(table_document("eulerian", 3)))
        assert rows == [["1"], ["1"], ["1", "1"], ["1", "4", "1"]]

    def test_csv_header_is_a_comment(self):
        text = render_csv(table_document("eulerian", 2))
        assert text.splitlines()[0].startswith("#")
        assert not render_csv(table_document("eulerian", 2), header=False).startswith("#")

    def test_deg_eulerian_row(self):
        doc = table_document("deg-eulerian", 2)
        assert doc.results[2]["row"] == ["1-λ", "1"]

    def test_other_kinds(self):
        assert table_document("stirling1", 3).results[3]["row"] == ["0", "2", "-3", "1"]
        assert table_document("stirling2", 3).results[3]["row"] == ["0", "1", "3", "1"]
        assert table_document("deg-stirling1", 2).results[2]["row"] == ["0", "λ", "1"]
        assert table_document("ordered-bell", 2).results[2]["value"] == "3-λ"

    def test_csv_and_json_agree(self):
        doc = table_document("deg-eulerian", 5)
        assert parse_csv_rows(render_csv(doc)) == [entry["row"] for entry in doc.results]

    def test_invalid_requests(self):
        with pytest.raises(ValueError):
            table_document("catalan", 3)
        with pytest.raises(NegativeIndex):
            table_document("eulerian", -1)

    def test_text_rendering(self):
        text = render_text(table_document("eulerian", 3))
        assert "TABLE eulerian" in text
        assert any(line.split() == ["3", "1", "4", "1"] for line in text.splitlines())


class TestRoundTrip:
    def test_json_document_round_trip(self):
        doc = table_document("deg-eulerian", 4)
        parsed = parse_json_document(render_json(doc))
        assert parsed == doc

    def test_exact_values_decode(self):
        doc = table_document("deg-eulerian", 3)
        decoded = document_values(parse_json_document(render_json(doc)))
        assert decoded[2][0] == 1 - LAM
        assert decoded[2][1] == 1

    def test_exact_value_of_rational_function(self):
        doc = expand_document("frobenius-euler", 2, {"x": 0})
        values = document_values(parse_json_document(render_json(doc)))
        assert values[1] == decode_exact(exact_value(values[1]))
        assert doc.results[1]["value"] == "1/(-1+u)"

    def test_values_are_strings(self):
        payload = json.loads(render_json(table_document("eulerian", 4)))
        assert set(payload) == {"command", "version", "params", "results"}
        assert all(isinstance(v, str) for entry in payload["results"] for v in entry["row"])
        assert payload["params"]["variables"] == ["x", "t", "λ", "u", "q"]


class TestExpand:
    def test_deg_eulerian_at_two(self):
        doc = expand_document("deg-eulerian", 2, {"t": 2})
        assert [entry["value"] for entry in doc.results] == ["1", "1", "3-λ"]
        assert doc.params["bindings"] == {"t": "2"}

    def test_eulerian(self):
        doc = expand_document("eulerian", 3)
        assert [entry["value"] for entry in doc.results] == ["1", "1", "1+t", "1+4t+t^2"]
        assert document_values(doc)[3] == 1 + 4 * T + T ** 2

    def test_pole(self):
        with pytest.raises(PoleEncountered):
            expand_document("frobenius-euler", 1, {"u": 1})


class TestReports:
    def test_verify_document(self):
        doc = verify_document([verify("EQ09_WORPITZKY", 4)], {"n_max": 4})
        payload = json.loads(render_document(doc))
        assert payload["params"]["passed"] is True
        assert payload["results"][0]["report"]["status"] == "pass"
        assert "EQ09_WORPITZKY" in render_text(doc)

    def test_failed_report_csv(self, eulerian_corrupted_ctx):
        doc = verify_document([verify("EQ02_VS_EQ04", 4, ctx=eulerian_corrupted_ctx)], {"n_max": 4})
        assert parse_csv_rows(render_csv(doc)) == [["EQ02_VS_EQ04", "fail", "6", "n=3;m=1"]]

    def test_list_document(self):
        doc = list_document(list_identities())
        assert doc.params["count"] == len(doc.results)
        assert "EQ09_WORPITZKY" in render_document(doc, "text")

    def test_report_and_identity_entries_are_numbered(self):
        reports = [verify("EQ09_WORPITZKY", 3), verify("EQ10_RECURSION", 3)]
        assert [entry["n"] for entry in verify_document(reports, {"n_max": 3}).results] == [0, 1]
        listed = list_document(list_identities()).results
        assert [entry["n"] for entry in listed] == list(range(len(listed)))
