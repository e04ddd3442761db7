"""The two canonical serializations of a placement.

Canonical form: all rows concatenated row-major, one character per cell,
space for empty cells. This is the form that gets hashed, so equal placements
have equal canonical forms and moving a character moves bytes.

Tagged form: the transport/debug encoding. Each entry is rendered as 1-based
row digits, 1-based column digits, then the character, in row-major order.
Coordinate fields are zero-padded to the digit count of max(rows, cols), so
"23P" on a 9x9 grid and "0203P" on a 12x12 grid both mean 'P' at row 2,
column 3.
"""

from __future__ import annotations

from .errors import ParseError
from .grid import Coord, GridSpec, Placement


def coord_field_width(grid: GridSpec) -> int:
    return len(str(max(grid.rows, grid.cols)))


def to_canonical(placement: Placement) -> str:
    cells = [" "] * placement.grid.cells
    for coord, char in placement.entries:
        cells[coord.row * placement.grid.cols + coord.col] = char
    return "".join(cells)


def from_canonical(grid: GridSpec, text: str) -> Placement:
    if len(text) != grid.cells:
        raise ParseError(
            f"canonical form must be exactly {grid.cells} characters, got {len(text)}",
            offset=min(len(text), grid.cells),
        )
    entries = []
    for i, char in enumerate(text):
        if char == " ":
            continue
        if char not in grid.alphabet:
            raise ParseError(f"character {char!r} not in grid alphabet", offset=i)
        entries.append((Coord(i // grid.cols, i % grid.cols), char))
    return Placement(grid, tuple(entries))


def to_tagged(placement: Placement) -> str:
    width = coord_field_width(placement.grid)
    return "".join(
        f"{coord.row + 1:0{width}d}{coord.col + 1:0{width}d}{char}"
        for coord, char in placement.entries
    )


def from_tagged(grid: GridSpec, text: str) -> Placement:
    """Parse a tagged form. Entries may arrive in any order; duplicates,
    out-of-range coordinates, and non-alphabet characters are rejected with
    the offending character offset."""
    width = coord_field_width(grid)
    unit = 2 * width + 1
    entries: list[tuple[Coord, str]] = []
    seen: set[Coord] = set()
    offset = 0
    while offset < len(text):
        if len(text) - offset < unit:
            raise ParseError("truncated entry", offset=offset)
        for i in range(2 * width):
            if not text[offset + i].isascii() or not text[offset + i].isdigit():
                raise ParseError("expected coordinate digit", offset=offset + i)
        row = int(text[offset : offset + width])
        col = int(text[offset + width : offset + 2 * width])
        if not 1 <= row <= grid.rows:
            raise ParseError(f"row {row} out of range 1..{grid.rows}", offset=offset)
        if not 1 <= col <= grid.cols:
            raise ParseError(
                f"column {col} out of range 1..{grid.cols}", offset=offset + width
            )
        char = text[offset + 2 * width]
        if char not in grid.alphabet:
            raise ParseError(
                f"character {char!r} not in grid alphabet", offset=offset + 2 * width
            )
        coord = Coord(row - 1, col - 1)
        if coord in seen:
            raise ParseError(f"duplicate coordinate {row},{col}", offset=offset)
        seen.add(coord)
        entries.append((coord, char))
        offset += unit
    return Placement(grid, tuple(entries))
