from __future__ import annotations

import pytest
from hypothesis import given

from spartan.codec import (
    coord_field_width,
    from_canonical,
    from_tagged,
    to_canonical,
    to_tagged,
)
from spartan.errors import ParseError
from spartan.grid import Coord, Direction, GridSpec, Placement
from conftest import placements, typed


def diag_abcd() -> Placement:
    g = GridSpec(4, 4, alphabet="abcd")
    return Placement(g, tuple((Coord(i, i), ch) for i, ch in enumerate("abcd")))


class TestCanonical:
    def test_empty_grid_is_all_spaces(self):
        g = GridSpec(3, 3, alphabet="abcd")
        assert to_canonical(Placement(g, ())) == " " * 9

    def test_diagonal_layout(self):
        assert to_canonical(diag_abcd()) == "a    b    c    d"

    def test_moving_a_char_moves_bytes(self):
        g = GridSpec(4, 4, alphabet="abcd")
        a = Placement(g, ((Coord(0, 0), "a"),))
        b = Placement(g, ((Coord(0, 1), "a"),))
        assert to_canonical(a) != to_canonical(b)

    def test_wrong_length_rejected_with_offset(self):
        g = GridSpec(3, 3, alphabet="abcd")
        with pytest.raises(ParseError) as exc:
            from_canonical(g, " " * 8)
        assert exc.value.offset == 8

    def test_bad_char_rejected_with_offset(self):
        g = GridSpec(3, 3, alphabet="abcd")
        with pytest.raises(ParseError) as exc:
            from_canonical(g, "    z    ")
        assert exc.value.offset == 4

    @given(placements())
    def test_round_trip(self, p):
        assert from_canonical(p.grid, to_canonical(p)) == p

    @given(placements())
    def test_canonical_length_is_cell_count(self, p):
        assert len(to_canonical(p)) == p.grid.cells


class TestTagged:
    def test_single_digit_grid_example(self):
        """An 8-char horizontal-then-shifted password on a 9x9 grid."""
        g = GridSpec(9, 9)
        cells = [(2, 3), (2, 4), (2, 5), (2, 6), (3, 6), (4, 6), (5, 6), (5, 7)]
        entries = tuple(
            (Coord(r - 1, c - 1), ch) for (r, c), ch in zip(cells, "Password")
        )
        assert to_tagged(Placement(g, entries)) == "23P24a25s26s36w46o56r57d"

    def test_field_width_tracks_largest_dimension(self):
        assert coord_field_width(GridSpec(9, 9)) == 1
        assert coord_field_width(GridSpec(12, 12)) == 2
        assert coord_field_width(GridSpec(9, 12)) == 2
        assert coord_field_width(GridSpec(12, 9)) == 2

    def test_two_digit_grid_pads_coordinates(self):
        g = GridSpec(12, 12)
        p = Placement(g, ((Coord(1, 2), "P"),))
        assert to_tagged(p) == "0203P"

    def test_entries_emitted_row_major(self):
        g = GridSpec(9, 9, alphabet="abcd")
        p = Placement(g, ((Coord(5, 5), "a"), (Coord(0, 0), "b")))
        assert to_tagged(p) == "11b66a"

    def test_parse_accepts_any_entry_order(self):
        g = GridSpec(9, 9, alphabet="abcd")
        assert to_tagged(from_tagged(g, "66a11b")) == "11b66a"

    def test_empty_tagged_form(self):
        g = GridSpec(9, 9, alphabet="abcd")
        assert to_tagged(Placement(g, ())) == ""
        assert len(from_tagged(g, "")) == 0

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("23", 0),        # truncated entry
            ("23a24", 3),     # second entry truncated
            ("2xP", 1),       # non-digit column
            ("03P", 0),       # row 0 out of range (1-based)
            ("90P", 1),       # column 0 out of range
            ("23 ", 2),       # space not in alphabet
            ("23P23Q", 3),    # duplicate coordinate
        ],
    )
    def test_parse_errors_carry_offsets(self, text, offset):
        g = GridSpec(9, 9)
        with pytest.raises(ParseError) as exc:
            from_tagged(g, text)
        assert exc.value.offset == offset

    def test_out_of_range_row_on_wide_grid(self):
        g = GridSpec(12, 12)
        with pytest.raises(ParseError) as exc:
            from_tagged(g, "1302P")
        assert exc.value.offset == 0

    def test_nonascii_digit_rejected(self):
        # Arabic-Indic digit four: isdigit() is true, int() would accept it
        g = GridSpec(9, 9)
        with pytest.raises(ParseError):
            from_tagged(g, "٤3P")

    @given(placements())
    def test_round_trip(self, p):
        assert from_tagged(p.grid, to_tagged(p)) == p

    @given(placements(min_size=1))
    def test_reversed_entry_order_parses_to_same_placement(self, p):
        width = coord_field_width(p.grid)
        unit = 2 * width + 1
        text = to_tagged(p)
        chunks = [text[i : i + unit] for i in range(0, len(text), unit)]
        assert from_tagged(p.grid, "".join(reversed(chunks))) == p


class TestBothFormsAgree:
    @given(placements())
    def test_tagged_and_canonical_describe_same_placement(self, p):
        assert from_tagged(p.grid, to_tagged(p)) == from_canonical(
            p.grid, to_canonical(p)
        )

    def test_typing_api_feeds_codec(self):
        g = GridSpec(4, 4, alphabet="abcd")
        p = typed(g, "abc", Coord(0, 1), Direction.S)
        assert to_tagged(p) == "12a22b32c"
        assert to_canonical(p) == " a   b   c      "
