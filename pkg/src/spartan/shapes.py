"""Geometric classification of placements and corpus-level statistics.

Every placement with at least two cells falls into exactly one of five
classes, checked in a fixed precedence order:

    StraightLine -> Block -> Snake -> Segments -> Points

Block outranks Snake because a filled rectangle is also traversable as a
path; it is its own category, not a degenerate snake. Adjacency everywhere
here is 8-directional and wraps at the grid edges, matching how the cursor
moves during entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .codec import from_tagged
from .errors import (
    BadCorpusError,
    EmptyCorpusError,
    NotAPathError,
    TooShortError,
)
from .grid import Coord, Direction, GridSpec, Placement, advance


class ShapeKind(Enum):
    STRAIGHT_LINE = "StraightLine"
    BLOCK = "Block"
    SNAKE = "Snake"
    SEGMENTS = "Segments"
    POINTS = "Points"


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class ShapeClass:
    kind: ShapeKind
    orientation: Orientation | None = None
    direction_changes: int | None = None
    segment_count: int | None = None


# Axis directions first so a two-cell line reports horizontal/vertical
# rather than matching a diagonal on a pathological tiny grid.
_DIR_ORDER = (
    Direction.E,
    Direction.W,
    Direction.S,
    Direction.N,
    Direction.SE,
    Direction.NE,
    Direction.SW,
    Direction.NW,
)

_ORIENTATION = {
    Direction.E: Orientation.HORIZONTAL,
    Direction.W: Orientation.HORIZONTAL,
    Direction.S: Orientation.VERTICAL,
    Direction.N: Orientation.VERTICAL,
}


def _neighbors(grid: GridSpec, coord: Coord, cells: frozenset[Coord]) -> set[Coord]:
    out = set()
    for d in Direction:
        n = advance(grid, coord, d)
        if n != coord and n in cells:
            out.add(n)
    return out


def _walk_line(
    grid: GridSpec, cells: frozenset[Coord], start: Coord, d: Direction
) -> list[Coord] | None:
    """Walk |cells|-1 steps from start; the walk is the whole set iff every
    step stays inside it without revisiting."""
    seq = [start]
    seen = {start}
    cur = start
    for _ in range(len(cells) - 1):
        cur = advance(grid, cur, d)
        if cur not in cells or cur in seen:
            return None
        seq.append(cur)
        seen.add(cur)
    return seq


def _find_line(
    grid: GridSpec, cells: frozenset[Coord]
) -> tuple[list[Coord], Direction] | None:
    ordered = sorted(cells)
    for d in _DIR_ORDER:
        dr, dc = d.step
        heads = [
            c
            for c in ordered
            if Coord((c.row - dr) % grid.rows, (c.col - dc) % grid.cols) not in cells
        ]
        # no head means the set closes on itself around the torus; any start
        # will do, so take the topmost-leftmost.
        for start in heads or ordered[:1]:
            seq = _walk_line(grid, cells, start, d)
            if seq is not None:
                return seq, d
    return None


def _cyclic_interval(values: set[int], modulus: int) -> bool:
    if len(values) == modulus:
        return True
    # an interval on the cycle has exactly one element whose successor is absent
    return sum(1 for v in values if (v + 1) % modulus not in values) == 1


def _is_block(grid: GridSpec, cells: frozenset[Coord]) -> bool:
    rows_used = {c.row for c in cells}
    cols_used = {c.col for c in cells}
    if len(rows_used) < 2 or len(cols_used) < 2:
        return False
    if len(cells) != len(rows_used) * len(cols_used):
        return False
    if not _cyclic_interval(rows_used, grid.rows):
        return False
    if not _cyclic_interval(cols_used, grid.cols):
        return False
    # with the count matching, containment in the row/col product means the
    # rectangle is completely filled
    return True


def _unit_delta(grid: GridSpec, a: Coord, b: Coord) -> tuple[int, int]:
    dr = (b.row - a.row) % grid.rows
    dc = (b.col - a.col) % grid.cols
    if dr > 1:
        dr -= grid.rows
    if dc > 1:
        dc -= grid.cols
    return dr, dc


def direction_changes(grid: GridSpec, path: list[Coord]) -> int:
    changes = 0
    prev: tuple[int, int] | None = None
    for a, b in zip(path, path[1:]):
        step = _unit_delta(grid, a, b)
        if prev is not None and step != prev:
            changes += 1
        prev = step
    return changes


# Snake detection looks for ANY ordering of the cells that forms a simple
# 8-adjacent path. Degree counting cannot decide this: every right-angle
# turn makes the cell before the turn diagonally adjacent to the cell after
# it, so even a plain L shows vertices of degree 3. The search below finds a
# covering path with the fewest direction changes (the count a typist would
# experience), by deepening on the allowed turn budget.

_SEARCH_NODE_BUDGET = 2_000_000


class _SearchBudget(Exception):
    pass


def _neighbor_steps(
    grid: GridSpec, coord: Coord, cells: frozenset[Coord]
) -> list[tuple[Coord, tuple[int, int]]]:
    out = {}
    for d in Direction:
        n = advance(grid, coord, d)
        if n != coord and n in cells:
            out[n] = _unit_delta(grid, coord, n)
    return sorted(out.items())


def _covering_path(
    grid: GridSpec, cells: frozenset[Coord]
) -> tuple[list[Coord], int] | None:
    """A simple path through every cell with the minimum number of direction
    changes, or None when no such path exists (or the search budget trips,
    which only very large dense shapes can manage)."""
    n = len(cells)
    if n < 2 or len(_components(grid, cells)) != 1:
        return None
    degree_one = sorted(c for c in cells if len(_neighbors(grid, c, cells)) == 1)
    if len(degree_one) > 2:
        return None
    # a degree-1 cell can only be a path endpoint, so starting there loses
    # nothing; otherwise any cell might be an endpoint
    starts = degree_one or sorted(cells)
    nodes = 0

    def dfs(
        path: list[Coord],
        visited: set[Coord],
        last_delta: tuple[int, int] | None,
        turns_left: int,
    ) -> list[Coord] | None:
        nonlocal nodes
        nodes += 1
        if nodes > _SEARCH_NODE_BUDGET:
            raise _SearchBudget
        if len(path) == n:
            return list(path)
        for cell, delta in _neighbor_steps(grid, path[-1], cells):
            if cell in visited:
                continue
            cost = 1 if last_delta is not None and delta != last_delta else 0
            if cost > turns_left:
                continue
            path.append(cell)
            visited.add(cell)
            found = dfs(path, visited, delta, turns_left - cost)
            if found is not None:
                return found
            path.pop()
            visited.discard(cell)
        return None

    try:
        for turns in range(n - 1):
            for start in starts:
                found = dfs([start], {start}, None, turns)
                if found is not None:
                    return found, turns
    except _SearchBudget:
        return None
    return None


def _components(grid: GridSpec, cells: frozenset[Coord]) -> list[frozenset[Coord]]:
    remaining = set(cells)
    out = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for n in _neighbors(grid, cur, cells):
                if n not in comp:
                    comp.add(n)
                    remaining.discard(n)
                    frontier.append(n)
        out.append(frozenset(comp))
    return out


def classify(placement: Placement) -> ShapeClass:
    if len(placement) < 2:
        raise TooShortError("classification needs at least 2 placed cells")
    grid = placement.grid
    cells = frozenset(placement.coords())

    line = _find_line(grid, cells)
    if line is not None:
        _, d = line
        return ShapeClass(
            kind=ShapeKind.STRAIGHT_LINE,
            orientation=_ORIENTATION.get(d, Orientation.DIAGONAL),
        )

    if _is_block(grid, cells):
        return ShapeClass(kind=ShapeKind.BLOCK)

    covering = _covering_path(grid, cells)
    if covering is not None:
        _, turns = covering
        if turns >= 1:
            return ShapeClass(kind=ShapeKind.SNAKE, direction_changes=turns)

    comps = _components(grid, cells)
    if len(comps) >= 2 and all(
        len(c) >= 2 and _find_line(grid, c) is not None for c in comps
    ):
        return ShapeClass(kind=ShapeKind.SEGMENTS, segment_count=len(comps))

    return ShapeClass(kind=ShapeKind.POINTS)


def infer_start(placement: Placement, cls: ShapeClass) -> Coord:
    """The likely entry point of a line or snake: the topmost of the path's
    two endpoints, leftmost on ties."""
    grid = placement.grid
    cells = frozenset(placement.coords())
    if cls.kind is ShapeKind.STRAIGHT_LINE:
        line = _find_line(grid, cells)
        assert line is not None
        seq, _ = line
        return min(seq[0], seq[-1])
    if cls.kind is ShapeKind.SNAKE:
        covering = _covering_path(grid, cells)
        assert covering is not None
        path, _ = covering
        return min(path[0], path[-1])
    raise NotAPathError(f"no start point defined for {cls.kind.value}")


@dataclass(frozen=True)
class CorpusStats:
    rows: int
    cols: int
    placement_count: int
    heatmap: tuple[tuple[int, ...], ...]
    class_histogram: dict[str, int]
    start_quadrant_fractions: tuple[float, float, float, float]
    edge_vs_center_fractions: tuple[float, float]
    mean_direction_changes: float
    mean_segment_count: float

    def heatmap_total(self) -> int:
        return sum(sum(row) for row in self.heatmap)

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "placement_count": self.placement_count,
            "heatmap": [list(row) for row in self.heatmap],
            "class_histogram": dict(self.class_histogram),
            "start_quadrant_fractions": {
                "top_left": self.start_quadrant_fractions[0],
                "top_right": self.start_quadrant_fractions[1],
                "bottom_left": self.start_quadrant_fractions[2],
                "bottom_right": self.start_quadrant_fractions[3],
            },
            "edge_vs_center_fractions": {
                "edge": self.edge_vs_center_fractions[0],
                "center": self.edge_vs_center_fractions[1],
            },
            "mean_direction_changes": self.mean_direction_changes,
            "mean_segment_count": self.mean_segment_count,
        }

    def heatmap_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.heatmap) + "\n"


def _quadrant(coord: Coord, rows: int, cols: int) -> int:
    top = coord.row < rows / 2
    left = coord.col < cols / 2
    if top:
        return 0 if left else 1
    return 2 if left else 3


def _on_edge(coord: Coord, rows: int, cols: int) -> bool:
    return coord.row in (0, rows - 1) or coord.col in (0, cols - 1)


def corpus_stats(corpus: list[Placement]) -> CorpusStats:
    if not corpus:
        raise EmptyCorpusError("no placements to analyze")
    rows = corpus[0].grid.rows
    cols = corpus[0].grid.cols
    for p in corpus:
        if p.grid.rows != rows or p.grid.cols != cols:
            raise BadCorpusError(
                "statistics need a uniform grid geometry across the corpus"
            )

    heat = [[0] * cols for _ in range(rows)]
    hist = {kind.value: 0 for kind in ShapeKind}
    quad = [0, 0, 0, 0]
    edge = [0, 0]
    turn_values: list[int] = []
    segment_values: list[int] = []

    for p in corpus:
        for coord in p.coords():
            heat[coord.row][coord.col] += 1
        cls = classify(p)
        hist[cls.kind.value] += 1
        if cls.kind in (ShapeKind.STRAIGHT_LINE, ShapeKind.SNAKE):
            start = infer_start(p, cls)
            quad[_quadrant(start, rows, cols)] += 1
            edge[0 if _on_edge(start, rows, cols) else 1] += 1
        if cls.kind is ShapeKind.SNAKE:
            turn_values.append(cls.direction_changes or 0)
        if cls.kind is ShapeKind.SEGMENTS:
            segment_values.append(cls.segment_count or 0)

    starts = sum(quad)
    quad_fracs = tuple(q / starts if starts else 0.0 for q in quad)
    edge_fracs = tuple(e / starts if starts else 0.0 for e in edge)
    return CorpusStats(
        rows=rows,
        cols=cols,
        placement_count=len(corpus),
        heatmap=tuple(tuple(row) for row in heat),
        class_histogram=hist,
        start_quadrant_fractions=quad_fracs,  # type: ignore[arg-type]
        edge_vs_center_fractions=edge_fracs,  # type: ignore[arg-type]
        mean_direction_changes=(
            sum(turn_values) / len(turn_values) if turn_values else 0.0
        ),
        mean_segment_count=(
            sum(segment_values) / len(segment_values) if segment_values else 0.0
        ),
    )


def load_corpus(path: str | Path, alphabet: str | None = None) -> list[Placement]:
    """Read a corpus file: one JSON object per line with the record's grid
    geometry and the placement in tagged form."""
    placements = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            rows = record["grid"]["rows"]
            cols = record["grid"]["cols"]
            tagged = record["tagged"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise BadCorpusError(f"line {lineno}: {exc}") from None
        kwargs = {} if alphabet is None else {"alphabet": alphabet}
        grid = GridSpec(rows=rows, cols=cols, **kwargs)
        placements.append(from_tagged(grid, tagged))
    if not placements:
        raise EmptyCorpusError(f"no placement records in {path}")
    return placements


def dump_corpus(path: str | Path, placements: list[Placement]) -> None:
    from .codec import to_tagged

    with open(path, "w", encoding="utf-8") as fh:
        for p in placements:
            fh.write(
                json.dumps(
                    {
                        "grid": {"rows": p.grid.rows, "cols": p.grid.cols},
                        "tagged": to_tagged(p),
                    }
                )
                + "\n"
            )
