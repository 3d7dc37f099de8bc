import json

import pytest

from gridcover.errors import UnsupportedSpecError
from gridcover.grid import GridSpec
from gridcover.report import (
    CSV_HEADER,
    bounds_range,
    csv_row,
    from_payload,
    render_csv,
    render_json,
    render_text,
    sweep_rows,
    sweep_table,
)


class TestBoundsRange:
    def test_flagship_interval(self):
        br = bounds_range(GridSpec((10, 13, 15)))
        assert br.upper.value == 253
        assert br.lower.value == 152
        assert br.lower_relaxed.value == 147
        assert br.best_lower == 152
        assert br.exact is None
        assert br.headline() == "147 <= h <= 253"

    def test_tall_box(self):
        br = bounds_range(GridSpec((10, 21, 174)))
        assert br.headline() == "378 <= h <= 419"
        assert br.lower.value == 378

    def test_four_dims(self):
        br = bounds_range(GridSpec((10, 16, 18, 48)))
        assert br.headline() == "4257 <= h <= 5759"
        assert br.upper.base3d == 575

    def test_terminal_is_exact(self):
        br = bounds_range(GridSpec((3, 3, 27)))
        assert br.exact == 17
        assert br.lower.value == br.upper.value == 17
        assert br.headline() == "17 <= h <= 17"

    def test_planar_has_no_lower(self):
        br = bounds_range(GridSpec((6, 9)))
        assert br.lower is None and br.lower_relaxed is None
        assert br.headline() == "h <= 11"
        assert any("2 effective dimensions" in n for n in br.notes)

    def test_degenerate_is_exact(self):
        br = bounds_range(GridSpec((1, 7)))
        assert br.exact == 1
        assert br.headline() == "h = 1"
        point = bounds_range(GridSpec((1, 1)))
        assert point.exact == 0

    def test_literature_attached_for_cubes_only(self):
        assert bounds_range(GridSpec((3, 3, 3))).literature is not None
        assert bounds_range(GridSpec((3, 3, 4))).literature is None
        assert bounds_range(GridSpec((3, 3))).literature is None


class TestRenderText:
    def test_flagship_sections(self):
        text = render_text(bounds_range(GridSpec((10, 13, 15))))
        assert "grid 10x13x15 (effective 10x13x15, 1950 points)" in text
        assert "147 <= h <= 253" in text
        assert "savings c=7" in text
        assert "shell depth jmax=0" in text
        assert "lower bound 152 (parity form, even side sum" in text
        assert "lower bound 147 (relaxed form" in text
        assert "best lower bound 152" in text

    def test_lift_trace(self):
        text = render_text(bounds_range(GridSpec((10, 16, 18, 48))))
        assert "3d block t=575" in text

    def test_cube_mentions_published_values(self):
        text = render_text(bounds_range(GridSpec((12, 12, 12))))
        assert "published values (unconstrained model" in text
        assert "cubic upper 227" in text

    def test_exact_line(self):
        text = render_text(bounds_range(GridSpec((2, 2, 2, 10))))
        assert "exact: h = 15" in text


class TestSerialization:
    def test_json_round_trip(self):
        for dims in [(10, 13, 15), (3, 3, 27), (6, 9), (1, 1), (12, 12, 12)]:
            br = bounds_range(GridSpec(dims))
            payload = json.loads(render_json(br))
            assert from_payload(payload) == br

    def test_payload_headline_matches(self):
        br = bounds_range(GridSpec((5, 6, 7)))
        payload = json.loads(render_json(br))
        assert payload["headline"] == br.headline()
        assert payload["upper"]["value"] == 58


class TestCsv:
    def test_header(self):
        assert CSV_HEADER == "dims,h_l_eq9,h_l_eq12,h_u,c,jmax,exact"

    def test_small_cube_row(self):
        assert csv_row(bounds_range(GridSpec((2, 2, 2)))) == "2x2x2,7,6,7,1,,7"

    def test_flagship_row(self):
        row = csv_row(bounds_range(GridSpec((10, 13, 15))))
        assert row == "10x13x15,152,147,253,7,0,"

    def test_row_without_lower_columns(self):
        row = csv_row(bounds_range(GridSpec((2, 2, 2))), include_lower=False)
        assert row == "2x2x2,,,7,1,,"

    def test_render_csv_document(self):
        doc = render_csv(bounds_range(GridSpec((2, 2, 2))))
        assert doc == CSV_HEADER + "\n2x2x2,7,6,7,1,,7\n"


class TestSweep:
    def test_rows_in_lexicographic_order(self):
        rows = list(sweep_rows(3, 2, 3))
        dims = [r.dims for r in rows]
        assert dims == [(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3)]

    def test_table_contents(self):
        table = sweep_table(3, 2, 3)
        lines = table.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[1] == "2x2x2,7,6,7,1,,7"
        assert lines[-1] == "3x3x3,13,12,16,2,,"

    def test_table_is_deterministic(self):
        assert sweep_table(4, 2, 3) == sweep_table(4, 2, 3)

    def test_large_sides_blank_lower_columns(self):
        table = sweep_table(3, 13, 13)
        assert table.strip().split("\n")[1] == "13x13x13,,,311,27,1,"

    def test_validation(self):
        with pytest.raises(UnsupportedSpecError):
            list(sweep_rows(2, 2, 3))
        with pytest.raises(UnsupportedSpecError):
            list(sweep_rows(6, 2, 3))
        with pytest.raises(UnsupportedSpecError):
            list(sweep_rows(3, 1, 3))
        with pytest.raises(UnsupportedSpecError):
            list(sweep_rows(3, 4, 3))

    def test_intervals_are_ordered(self):
        for br in sweep_rows(3, 2, 6):
            assert br.lower_relaxed.value <= br.lower.value <= br.upper.value
