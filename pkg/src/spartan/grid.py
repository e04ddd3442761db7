"""Grid geometry, the interactive entry state machine, and block colorization.

A password here is a set of (cell, character) pairs on a rectangular grid.
Entry wraps toroidally: stepping off any edge re-enters on the opposite edge,
so diagonals wrap on both axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadCharError,
    EmptyUsernameError,
    NoCursorError,
    OutOfBoundsError,
)

# 94 printable ASCII characters, space excluded. Space is reserved as the
# empty-cell sentinel in the canonical serialization.
PRINTABLE_ALPHABET = "".join(chr(c) for c in range(0x21, 0x7F))

MAX_CELLS = 4096

MIN_BLOCK = 2
MAX_BLOCK = 4


class Direction(Enum):
    """One of the eight unit steps a password can travel in."""

    N = (-1, 0)
    NE = (-1, 1)
    E = (0, 1)
    SE = (1, 1)
    S = (1, 0)
    SW = (1, -1)
    W = (0, -1)
    NW = (-1, -1)

    @property
    def step(self) -> tuple[int, int]:
        return self.value


@dataclass(frozen=True, order=True)
class Coord:
    """0-based (row, col) cell address. Ordering is row-major."""

    row: int
    col: int


@dataclass(frozen=True)
class GridSpec:
    """Immutable grid configuration shared by every password on it."""

    rows: int
    cols: int
    alphabet: str = PRINTABLE_ALPHABET
    palette_size: int = 6
    color_seed: int = 0

    def __post_init__(self) -> None:
        if self.rows < 2 or self.cols < 2:
            raise ValueError("grid must be at least 2x2")
        if self.rows * self.cols > MAX_CELLS:
            raise ValueError(f"grid must not exceed {MAX_CELLS} cells")
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if " " in self.alphabet:
            raise ValueError("alphabet must not contain the space character")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet must not contain duplicate characters")
        if self.palette_size < 1:
            raise ValueError("palette_size must be positive")
        if not 0 <= self.color_seed < 1 << 64:
            raise ValueError("color_seed must be a 64-bit unsigned integer")

    @property
    def cells(self) -> int:
        return self.rows * self.cols

    def in_bounds(self, coord: Coord) -> bool:
        return 0 <= coord.row < self.rows and 0 <= coord.col < self.cols

    def require_in_bounds(self, coord: Coord) -> None:
        if not self.in_bounds(coord):
            raise OutOfBoundsError(
                f"{(coord.row, coord.col)} outside {self.rows}x{self.cols} grid"
            )


def advance(grid: GridSpec, coord: Coord, direction: Direction) -> Coord:
    """Step one cell in ``direction``, wrapping each axis modulo its dimension."""
    dr, dc = direction.step
    return Coord((coord.row + dr) % grid.rows, (coord.col + dc) % grid.cols)


@dataclass(frozen=True)
class Placement:
    """A password: (cell, character) entries, canonically ordered row-major."""

    grid: GridSpec
    entries: tuple[tuple[Coord, str], ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.entries, key=lambda e: e[0]))
        object.__setattr__(self, "entries", ordered)
        seen: set[Coord] = set()
        for coord, char in ordered:
            self.grid.require_in_bounds(coord)
            if coord in seen:
                raise ValueError(f"duplicate coordinate {(coord.row, coord.col)}")
            seen.add(coord)
            if len(char) != 1 or char not in self.grid.alphabet:
                raise ValueError(f"character {char!r} not in grid alphabet")
        if len(ordered) > self.grid.cells:
            raise ValueError("more entries than grid cells")

    def __len__(self) -> int:
        return len(self.entries)

    def coords(self) -> tuple[Coord, ...]:
        return tuple(coord for coord, _ in self.entries)

    def char_at(self, coord: Coord) -> str | None:
        for c, char in self.entries:
            if c == coord:
                return char
        return None

    def translate(self, dr: int, dc: int) -> Placement:
        """Rigid translation; raises if any cell leaves the grid."""
        moved = tuple(
            (Coord(coord.row + dr, coord.col + dc), char) for coord, char in self.entries
        )
        return Placement(self.grid, moved)


class EntrySession:
    """Mutable, single-owner state for typing one password attempt.

    Typing writes at the cursor (overwriting anything there) and advances the
    cursor one step in the current direction. Typing with no cursor set is an
    error, never a silent placement.
    """

    def __init__(
        self,
        grid: GridSpec,
        cursor: Coord | None = None,
        direction: Direction = Direction.E,
    ):
        if cursor is not None:
            grid.require_in_bounds(cursor)
        self.grid = grid
        self.cursor = cursor
        self.direction = direction
        self._cells: list[list[str | None]] = [
            [None] * grid.cols for _ in range(grid.rows)
        ]

    def set_cursor(self, coord: Coord) -> None:
        self.grid.require_in_bounds(coord)
        self.cursor = coord

    def set_direction(self, direction: Direction) -> None:
        self.direction = direction

    def input_char(self, char: str) -> None:
        if self.cursor is None:
            raise NoCursorError("no cell selected")
        if len(char) != 1 or char not in self.grid.alphabet:
            raise BadCharError(f"character {char!r} not in grid alphabet")
        self._cells[self.cursor.row][self.cursor.col] = char
        self.cursor = advance(self.grid, self.cursor, self.direction)

    def type_string(self, text: str) -> None:
        for char in text:
            self.input_char(char)

    def erase_at(self, coord: Coord) -> None:
        """Clear one cell; the cursor stays where it is. No-op when empty."""
        self.grid.require_in_bounds(coord)
        self._cells[coord.row][coord.col] = None

    def char_at(self, coord: Coord) -> str | None:
        self.grid.require_in_bounds(coord)
        return self._cells[coord.row][coord.col]

    def clear(self) -> None:
        for row in self._cells:
            for col in range(self.grid.cols):
                row[col] = None

    def placement(self) -> Placement:
        entries = tuple(
            (Coord(r, c), char)
            for r, row in enumerate(self._cells)
            for c, char in enumerate(row)
            if char is not None
        )
        return Placement(self.grid, entries)


# -- username-seeded colorization --------------------------------------------

_FNV64_OFFSET = 0xCBF29CE484222325
_FNV64_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def seed_from_username(username: str, rows: int, cols: int) -> int:
    """64-bit FNV-1a over the UTF-8 username bytes, then rows and cols as
    single bytes. Stable across runs and platforms by construction."""
    if not username:
        raise EmptyUsernameError("username must not be empty")
    h = _FNV64_OFFSET
    for byte in username.encode("utf-8") + bytes([rows & 0xFF, cols & 0xFF]):
        h ^= byte
        h = (h * _FNV64_PRIME) & _MASK64
    return h


class _SplitMix64:
    """Tiny deterministic PRNG so colorization is byte-identical everywhere."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


@dataclass(frozen=True)
class Colorization:
    """Per-cell palette indices, a pure function of the GridSpec."""

    cell_colors: tuple[tuple[int, ...], ...]

    def color_at(self, coord: Coord) -> int:
        return self.cell_colors[coord.row][coord.col]

    def flat(self) -> list[int]:
        return [color for row in self.cell_colors for color in row]


_Rect = tuple[int, int, int, int]  # (row0, col0, height, width)


def _subdivide(rng: _SplitMix64, r0: int, c0: int, h: int, w: int, out: list[_Rect]) -> None:
    # Guillotine cuts until every block is between MIN_BLOCK and MAX_BLOCK on
    # each axis. A cut at k in [2, h-2] leaves both halves >= MIN_BLOCK.
    split_rows = h > MAX_BLOCK
    split_cols = w > MAX_BLOCK
    if not split_rows and not split_cols:
        out.append((r0, c0, h, w))
        return
    if split_rows and split_cols:
        split_rows = rng.below(2) == 0
    if split_rows:
        cut = MIN_BLOCK + rng.below(h - 2 * MIN_BLOCK + 1)
        _subdivide(rng, r0, c0, cut, w, out)
        _subdivide(rng, r0 + cut, c0, h - cut, w, out)
    else:
        cut = MIN_BLOCK + rng.below(w - 2 * MIN_BLOCK + 1)
        _subdivide(rng, r0, c0, h, cut, out)
        _subdivide(rng, r0, c0 + cut, h, w - cut, out)


def _touching(a: _Rect, b: _Rect) -> bool:
    ar, ac, ah, aw = a
    br, bc, bh, bw = b
    rows_overlap = ar < br + bh and br < ar + ah
    cols_overlap = ac < bc + bw and bc < ac + aw
    if (ac + aw == bc or bc + bw == ac) and rows_overlap:
        return True
    if (ar + ah == br or br + bh == ar) and cols_overlap:
        return True
    return False


def _color_blocks(blocks: list[_Rect], prefs: list[int], palette_size: int) -> list[int]:
    n = len(blocks)
    adjacent: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _touching(blocks[i], blocks[j]):
                adjacent[i].add(j)
                adjacent[j].add(i)

    # Smallest-last ordering: the block adjacency graph is planar, so each
    # block sees at most 5 already-colored neighbors, and any palette of 6 or
    # more always properly colors it. Ties break on block index to stay
    # deterministic.
    degree = [len(adjacent[i]) for i in range(n)]
    removed = [False] * n
    order: list[int] = []
    for _ in range(n):
        v = min(
            (i for i in range(n) if not removed[i]),
            key=lambda i: (degree[i], i),
        )
        removed[v] = True
        order.append(v)
        for u in adjacent[v]:
            if not removed[u]:
                degree[u] -= 1

    colors = [-1] * n
    for v in reversed(order):
        used = {colors[u] for u in adjacent[v] if colors[u] >= 0}
        pick = prefs[v]
        for k in range(palette_size):
            candidate = (prefs[v] + k) % palette_size
            if candidate not in used:
                pick = candidate
                break
        colors[v] = pick
    return colors


def colorize(grid: GridSpec) -> Colorization:
    """Deterministic rectangular-block pattern seeded by grid.color_seed.

    Blocks are 2x2 to 4x4; with a palette of at least 6 colors, orthogonally
    adjacent blocks always receive different colors, so every maximal
    monochromatic region is one rectangular block.
    """
    rng = _SplitMix64(grid.color_seed)
    blocks: list[_Rect] = []
    _subdivide(rng, 0, 0, grid.rows, grid.cols, blocks)
    prefs = [(i + rng.below(grid.palette_size)) % grid.palette_size for i in range(len(blocks))]
    block_colors = _color_blocks(blocks, prefs, grid.palette_size)

    cells = [[0] * grid.cols for _ in range(grid.rows)]
    for (r0, c0, h, w), color in zip(blocks, block_colors):
        for r in range(r0, r0 + h):
            for c in range(c0, c0 + w):
                cells[r][c] = color
    return Colorization(tuple(tuple(row) for row in cells))


def grid_for_user(
    username: str,
    rows: int = 12,
    cols: int = 12,
    alphabet: str = PRINTABLE_ALPHABET,
    palette_size: int = 6,
) -> GridSpec:
    """The per-account grid: dimensions plus a username-derived color seed."""
    seed = seed_from_username(username, rows, cols)
    return GridSpec(rows, cols, alphabet, palette_size, seed)
