import re

from kochdual.render import render_arrangement, render_chain


class TestChainRender:
    def test_deterministic(self, chains):
        assert render_chain(chains(2)) == render_chain(chains(2))

    def test_s2_has_points_and_shaded_children(self, chains):
        svg = render_chain(chains(2))
        assert svg.count("<circle") == 5
        assert svg.count('fill="#d7def0"') == 2

    def test_s1_no_shading(self, chains):
        svg = render_chain(chains(1))
        assert svg.count("<circle") == 3
        assert svg.count('fill="#d7def0"') == 0

    def test_coordinates_are_plain_floats(self, chains):
        svg = render_chain(chains(3))
        assert "Fraction" not in svg
        coords = re.findall(r'(?:x1|y1|x2|y2|cx|cy|r)="([^"]+)"', svg)
        assert coords and all(float(value) is not None for value in coords)


class TestArrangementRender:
    def test_lines_and_labels(self, arrangements):
        svg = render_arrangement(arrangements(1))
        assert svg.count("<line") == 3
        assert svg.count("<text") == 7  # one size label per face

    def test_large_arrangements_skip_labels(self, arrangements):
        svg = render_arrangement(arrangements(4))
        assert svg.count("<line") == 17
        assert svg.count("<text") == 0

    def test_deterministic(self, arrangements):
        assert render_arrangement(arrangements(2)) == render_arrangement(arrangements(2))

    def test_valid_svg_skeleton(self, arrangements):
        svg = render_arrangement(arrangements(2))
        assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
