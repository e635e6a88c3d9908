import json

import pytest

from dynkin_io import (
    DiagramParseError,
    DiagramSemanticError,
    build_table_rows,
    cmd_classify,
    cmd_info,
    cmd_kostant,
    cmd_nested,
    cmd_oracle,
    cmd_tables,
    emit_table,
    format_diagram,
    load_fixtures,
    maximal_node,
    parse_diagram,
    report_passed,
    resolve_node,
    table_mismatches,
)
from rootsys import LieType, build_root_system


def make_rs(label):
    return build_root_system(LieType(label[0], int(label[1:])))


def test_parse_mask():
    diagram = parse_diagram("B4:**x*")
    assert diagram.lie_type == LieType("B", 4)
    assert diagram.sigma == frozenset({3})
    assert format_diagram(diagram) == "B4:**x*"
    assert maximal_node(diagram) == 3


def test_parse_cross_list():
    assert parse_diagram("E7", "7").sigma == frozenset({7})
    assert parse_diagram("A5", [2, 3]).sigma == frozenset({2, 3})
    assert format_diagram(parse_diagram("D5", "1,3")) == "D5:x*x**"


@pytest.mark.parametrize(
    "text, column",
    [
        ("A3:xx", 4),
        ("B4:**y*", 6),
        ("H3:x**", 1),
        ("Aq:x", 2),
        ("B1:x", 2),
        ("A3 :x**", 3),
        ("", 1),
    ],
)
def test_parse_errors_report_columns(text, column):
    with pytest.raises(DiagramParseError) as info:
        parse_diagram(text)
    assert info.value.column == column


def test_mask_and_cross_list_conflict():
    with pytest.raises(DiagramParseError) as info:
        parse_diagram("A3:x**", "1")
    assert info.value.column == 3


def test_semantic_errors():
    with pytest.raises(DiagramSemanticError):
        parse_diagram("A3", "5")
    with pytest.raises(DiagramSemanticError):
        parse_diagram("A3:***", require_cross=True)
    with pytest.raises(DiagramSemanticError):
        maximal_node(parse_diagram("A3:xx*"))


def test_round_trip():
    for text in ["A1:x", "C3:**x", "E8:*******x", "G2:x*", "F4:*x*x"]:
        assert format_diagram(parse_diagram(text)) == text


def test_resolve_node():
    assert resolve_node(make_rs("D5"), "n") == 5
    assert resolve_node(make_rs("D5"), "n-1") == 4
    assert resolve_node(make_rs("D5"), "3") == 3
    assert resolve_node(make_rs("E8"), "adjoint") == 8
    assert resolve_node(make_rs("F4"), "adjoint") == 1
    assert resolve_node(make_rs("B4"), "adjoint") == 2
    assert resolve_node(make_rs("E7"), "cominuscule") == 7
    with pytest.raises(DiagramSemanticError):
        resolve_node(make_rs("A3"), "adjoint")
    with pytest.raises(DiagramSemanticError):
        resolve_node(make_rs("G2"), "cominuscule")
    with pytest.raises(DiagramSemanticError):
        resolve_node(make_rs("A3"), "middle")


@pytest.mark.parametrize("which", [1, 2, 3])
def test_tables_match_fixtures(which):
    assert table_mismatches(which, load_fixtures()) == []


def test_table_rows():
    rows = build_table_rows(2, load_fixtures())
    b4 = next(row for row in rows if row.g == "B4")
    assert b4.p == "B4:**x*"
    assert b4.q == "B4:*xxx"
    assert b4.levi_ss == "A2×B1"


def test_table_output_is_deterministic():
    assert emit_table(3, "json") == emit_table(3, "json")
    document = json.loads(emit_table(1, "json"))
    assert document["table"] == 1 and document["rows"]


def test_table_formats():
    assert "|" in emit_table(2, "text")
    assert "\\begin{tabular}" in emit_table(2, "latex")
    with pytest.raises(DiagramSemanticError):
        emit_table(2, "csv")


def test_cmd_info():
    report = cmd_info(parse_diagram("B4:**x*"))
    assert report["classification"] == "BD3"
    assert report["case"]["dims"]["-2"] == 3
    assert report["case"]["levi_ss"] == "A2×B1"
    assert report_passed(report)
    assert cmd_info(parse_diagram("A3:x*x"))["classification"] is None


def test_cmd_nested():
    report = cmd_nested(LieType("B", 4), 3)
    assert report["classification"] == "BD3"
    assert report["case"]["q"] == "B4:*xxx"
    assert report_passed(report)
    short = cmd_nested(LieType("G", 2), 1)
    assert short["checks"]["short_root_failure"]["status"] == "pass"


def test_cmd_kostant():
    report = cmd_kostant(LieType("A", 2), 1)
    assert report["classification"]["positive_homogeneities"] == [3]
    (component,) = report["predictions"]
    assert component["word"] == "s1s2"
    assert component["levi_dim"] == 2


def test_cmd_classify():
    report = cmd_classify(max_rank=5)
    assert report_passed(report)
    assert report["classification"]["positive_families"] == ["BD3", "Contact", "Symmetric"]
    entry = next(p for p in report["predictions"] if p["lie_type"] == "D3" and p["node"] == 1)
    assert entry["positive_homogeneities"] == [2, 2]
    assert not any(p["lie_type"] == "A1" for p in report["predictions"])


def test_cmd_oracle():
    report = cmd_oracle(LieType("A", 2), 1)
    assert report["oracle"]["passed"]
    assert report["checks"]["boundary_squared_zero"]["status"] == "pass"
    assert report["checks"]["jacobi"]["status"] == "pass"
    assert report_passed(report)


def test_cmd_tables():
    documents, mismatches = cmd_tables([2, 3], "text")
    assert len(documents) == 2
    assert mismatches == []
