import pytest

from toricgit.cones import polytope_from_points
from toricgit.quotient import make_action, polytope_chart
from toricgit.render import polytope_svg


def test_svg_contains_edges_dots_labels():
    action = make_action([[1, 1, 2]], "XYZ", [2])
    chart = polytope_chart(action)
    svg = polytope_svg(chart.polytope, chart.labels(action.variables))
    assert svg.startswith("<svg")
    assert svg.count("<line") == 3
    assert svg.count("<circle") == 4
    for label in ("X^2", "XY", "Y^2", ">Z<"):
        assert label in svg


def test_svg_deterministic():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    assert polytope_svg(tri, {(0, 0): "a"}) == polytope_svg(tri, {(0, 0): "a"})


def test_svg_rejects_other_dimensions():
    seg = polytope_from_points(1, [(0,), (1,)])
    with pytest.raises(ValueError):
        polytope_svg(seg, {})
