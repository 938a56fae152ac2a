import json

import pytest

from controllers.quiver_controller import QuiverController
from errors import InvalidInputError
from services.classification_service import ClassificationService
from utils.render import ARQuiverLayout, to_ascii, to_dot, to_json_dict


def test_cta2_marks_six_points():
    report = QuiverController(ClassificationService()).emit("A", 3, marked="cta2", fmt="ascii")
    assert report.inputs["window"] == 6
    assert len(report.results[0]["marked_points"]) == 6
    assert report.results[0]["content"].count("#") == 6


def test_d4_derived_marked_points():
    report = QuiverController(ClassificationService()).emit("D", 4, marked="d4-derived", fmt="json")
    assert report.results[0]["marked_points"] == [[1, 0], [1, 5], [4, 0], [4, 5]]
    payload = json.loads(report.results[0]["content"])
    assert sum(node["marked"] for node in payload["nodes"]) == 4


def test_marked_certificate_must_match_diagram():
    with pytest.raises(InvalidInputError):
        QuiverController(ClassificationService()).emit("A", 4, marked="cta2")


def test_unknown_marked_id():
    with pytest.raises(InvalidInputError):
        QuiverController(ClassificationService()).emit("A", 3, marked="A3-d2-0")


def test_bad_window():
    with pytest.raises(InvalidInputError):
        QuiverController(ClassificationService()).emit("A", 3, window=0)


def test_every_irreducible_map_moves_one_column_right(d4):
    layout = ARQuiverLayout(d4, 5)
    for source, target in layout.arrows():
        assert layout.column(target) == layout.column(source) + 1
    for source, target in layout.tau_edges():
        assert layout.column(target) == layout.column(source) - 2


def test_dot_output(a3):
    layout = ARQuiverLayout(a3, 4, marked=[(1, 0), (9, 9)])
    text = to_dot(layout, 'A3 "strip"')
    assert text.startswith('digraph "A3 \\"strip\\"" {\n')
    assert text.endswith("}\n")
    assert text.count("fillcolor=black") == 1
    assert "style=dotted" in text
    assert to_dot(layout, "x") == to_dot(ARQuiverLayout(a3, 4, marked=[(1, 0)]), "x")


def test_ascii_rows(e6):
    layout = ARQuiverLayout(e6, 3, marked=[(4, 1)])
    lines = to_ascii(layout).splitlines()
    assert len(lines) == 6
    assert sum(line.count("o") for line in lines) == 17
    assert lines[3].startswith(" 4") and "#" in lines[3]


def test_json_layout(a2):
    data = to_json_dict(ARQuiverLayout(a2, 2))
    assert data["window"] == 2
    assert len(data["nodes"]) == 4
    assert data["arrows"] == [[[1, 1], [2, 0]], [[2, 0], [1, 0]], [[2, 1], [1, 1]]]
    assert data["tau"] == [[[1, 0], [1, 1]], [[2, 0], [2, 1]]]


def marked_points(family, rank, name):
    return QuiverController(ClassificationService()).emit(family, rank, marked=name, fmt="json").results[0]["marked_points"]


def test_ctd_marked_pattern():
    assert marked_points("D", 4, "ctd") == [[1, 0], [1, 5], [3, 0], [3, 5]]


@pytest.mark.parametrize("n", range(2, 7))
def test_cta1_marked_pattern(n):
    assert marked_points("A", n, f"cta1:{n}") == [[n, 0], [n, n]]


def test_cta3_marked_pattern():
    rows = {1: [1, 4, 7, 10], 2: [0, 3, 6, 9], 5: [0, 3, 6, 9], 6: [0, 3, 6, 9]}
    expected = [[i, l] for i, twists in sorted(rows.items()) for l in twists]
    assert marked_points("A", 6, "cta3") == expected


A2_DOT = (
    'digraph "A2 window 2" {\n'
    "  rankdir=LR;\n"
    '  node [shape=plaintext fontname="Helvetica"];\n'
    '  v1_0 [label="t^0P1" pos="3,-1!"];\n'
    '  v1_1 [label="t^1P1" pos="1,-1!"];\n'
    '  v2_0 [label="t^0P2" pos="2,-2!" shape=circle style=filled fillcolor=black fontcolor=white];\n'
    '  v2_1 [label="t^1P2" pos="0,-2!"];\n'
    "  v1_1 -> v2_0;\n"
    "  v2_0 -> v1_0;\n"
    "  v2_1 -> v1_1;\n"
    "  v1_0 -> v1_1 [style=dotted constraint=false];\n"
    "  v2_0 -> v2_1 [style=dotted constraint=false];\n"
    "}\n"
)


def test_dot_bytes_are_stable():
    report = QuiverController(ClassificationService()).emit("A", 2, window=2, marked="cta1:2", fmt="dot")
    assert report.results[0]["marked_points"] == [[2, 0]]
    assert report.results[0]["content"] == A2_DOT
