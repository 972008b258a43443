import json

import pytest
from hypothesis import given, settings

from conftest import colourings
from kcolour.constructions import ConstructionSpec, hypercube_colouring
from kcolour.kcol_io import (
    Assertion,
    KcolParseError,
    RunReport,
    emit_report,
    format_colouring,
    parse_colouring,
    read_colouring,
    stable_json,
    write_colouring,
)
from kcolour.search import M_value, Query

CONSTRUCTIONS = [
    ("hypercube", 8, 3, None, None), ("hypercube", 32, 15, None, None), ("hypercube", 13, 7, None, None),
    ("blowup", 12, 8, None, None), ("blowup", 31, 18, None, None),
    ("subset-partition", 20, 5, 2, None), ("subset-partition", 32, 7, 2, None),
    ("triangle-large", 12, None, None, 2), ("triangle-small", 3, None, None, 2),
    ("triangle-large", 32, None, None, 3), ("bg-family", 14, None, 2, 2), ("bg-family", 30, None, 2, 3),
]


class TestKcolFormat:
    @pytest.mark.parametrize("kind,n,r,s,k", CONSTRUCTIONS)
    def test_round_trip_constructions(self, tmp_path, kind, n, r, s, k):
        f = ConstructionSpec(kind, n, r, s, k).build()
        path = tmp_path / "f.kcol"
        write_colouring(f, path)
        assert read_colouring(path) == f

    @given(colourings(max_n=12, max_r=6))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, f):
        assert parse_colouring(format_colouring(f)) == f

    def test_layout(self):
        f = hypercube_colouring(4, 3)
        assert format_colouring(f) == "4 3\n" + "\n".join(
            " ".join(str(f.colour(i, j)) for j in range(i + 1, 5)) for i in range(1, 4)) + "\n"

    def test_comments_before_header(self):
        f = parse_colouring("# a comment\n\n# another\n3 2\n1 2\n1\n")
        assert f.colours == (1, 2, 1)

    def test_whitespace_is_free_form(self):
        assert parse_colouring("3 2\n1 2 1").colours == (1, 2, 1)

    @pytest.mark.parametrize("text,line,fragment", [
        ("4 2\n1 1 1\n1 1\n", 3, "expected 6"),
        ("4 2\n1 1 1\n1 1\n1\n2\n", 5, "expected 6"),
        ("3 2\n0 1\n1\n", 2, "colour 0"),
        ("3 2\n1 3\n1\n", 2, "colour 3"),
        ("# c\n3\n1 1 1\n", 2, "header"),
        ("3 x\n1 1 1\n", 1, "header"),
        ("1 2\n", 1, "n >= 2"),
        ("3 2\n1 a 1\n", 2, "not an integer"),
        ("# only a comment\n", 1, "missing header"),
    ])
    def test_parse_errors(self, text, line, fragment):
        with pytest.raises(KcolParseError, match=fragment) as exc:
            parse_colouring(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")


def one_result_report():
    f = hypercube_colouring(16, 7)
    rep = M_value(f, Query(2, 1))
    report = RunReport(config={"command": "evaluate", "s": 2})
    report.results.append({"name": "M", **rep.stable_dict()})
    report.timings["search"] = rep.elapsed
    report.check("M(f,16,7,2,1) = 8", rep.value == 8)
    return report


class TestReports:
    def test_empty_report(self):
        doc = json.loads(emit_report(RunReport()))
        assert doc["stable"]["results"] == [] and doc["stable"]["assertions"] == []
        assert doc["stable"]["passed"] is True
        assert "0/0 assertions passed" in emit_report(RunReport(), "text")

    def test_json_carries_bound_report(self):
        doc = json.loads(emit_report(one_result_report()))
        res = doc["stable"]["results"][0]
        assert res["value"] == 8
        assert res["witness_vertices"] == list(range(1, 9))
        assert set(res["witness_colours"]) <= {1, 2}
        assert "search" in doc["volatile"]["timings"]
        assert "elapsed" not in res and "nodes_explored" not in res

    def test_json_keys_sorted(self):
        text = emit_report(one_result_report())
        assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"

    def test_text_lists_witness(self):
        text = emit_report(one_result_report(), "text")
        assert "witness_vertices: {1, 2, 3, 4, 5, 6, 7, 8}" in text
        assert "[PASS] M(f,16,7,2,1) = 8" in text

    def test_stable_section_is_deterministic(self):
        a, b = one_result_report(), one_result_report()
        b.timings["search"] += 1.0
        assert stable_json(a) == stable_json(b)
        assert emit_report(a) != emit_report(b)

    def test_round_trip(self):
        report = one_result_report()
        again = RunReport.from_dict(json.loads(emit_report(report)))
        assert again == report

    def test_passed_tracks_assertions(self):
        report = RunReport()
        report.check("ok", True)
        assert report.passed
        report.check("bad", False, "detail")
        assert not report.passed
        assert report.assertions[-1] == Assertion("bad", False, "detail")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(RunReport(), "xml")
