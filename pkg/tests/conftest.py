from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from spartan import store
from spartan.grid import Coord, EntrySession, Direction, GridSpec, Placement

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def grids(draw, max_side: int = 8, alphabet: str | None = None) -> GridSpec:
    rows = draw(st.integers(2, max_side))
    cols = draw(st.integers(2, max_side))
    if alphabet is None:
        return GridSpec(rows, cols)
    return GridSpec(rows, cols, alphabet=alphabet)


@st.composite
def placements(
    draw,
    min_size: int = 0,
    max_size: int = 10,
    max_side: int = 8,
    alphabet: str | None = None,
) -> Placement:
    grid = draw(grids(max_side=max_side, alphabet=alphabet))
    cells = [Coord(r, c) for r in range(grid.rows) for c in range(grid.cols)]
    n = draw(st.integers(min_size, min(max_size, len(cells))))
    chosen = draw(st.lists(st.sampled_from(cells), unique=True, min_size=n, max_size=n))
    chars = draw(st.lists(st.sampled_from(grid.alphabet), min_size=n, max_size=n))
    return Placement(grid, tuple(zip(chosen, chars)))


def typed(grid: GridSpec, word: str, start: Coord, direction: Direction) -> Placement:
    session = EntrySession(grid)
    session.set_cursor(start)
    session.set_direction(direction)
    session.type_string(word)
    return session.placement()


# Attack fixture: a 4x4 grid over a 4-letter alphabet, ten dictionary words,
# five of them planted as horizontal passwords (one at the top-left), plus
# two accounts no horizontal strategy can reach.

FIXTURE_GRID = GridSpec(4, 4, alphabet="abcd")

FIXTURE_WORDS = [
    "abcd",
    "bcad",
    "dcba",
    "acbd",
    "badc",
    "cabd",
    "dabc",
    "bdca",
    "cdab",
    "abab",
]


@dataclass(frozen=True)
class PlantedStore:
    path: Path
    records: dict[str, store.CredentialRecord]
    placements: dict[str, Placement]
    horizontal_users: tuple[str, ...]
    top_left_users: tuple[str, ...]


def build_planted_store(path: Path) -> PlantedStore:
    grid = FIXTURE_GRID
    plan = {
        "u-topleft": typed(grid, FIXTURE_WORDS[0], Coord(0, 0), Direction.E),
        "u-mid": typed(grid, FIXTURE_WORDS[1], Coord(1, 1), Direction.E),
        "u-row2": typed(grid, FIXTURE_WORDS[2], Coord(2, 0), Direction.E),
        "u-wrap": typed(grid, FIXTURE_WORDS[3], Coord(3, 2), Direction.E),
        "u-row1": typed(grid, FIXTURE_WORDS[4], Coord(1, 0), Direction.E),
        # vertical dictionary word: consistent with straight-all, not horizontal
        "u-vertical": typed(grid, FIXTURE_WORDS[5], Coord(0, 2), Direction.S),
        # not in the dictionary at all
        "u-offlist": typed(grid, "ddda", Coord(0, 1), Direction.E),
    }
    records = {}
    for username, placement in plan.items():
        record = store.create_record(username, placement, profile="test")
        store.append(path, record)
        records[username] = record
    return PlantedStore(
        path=path,
        records=records,
        placements=plan,
        horizontal_users=("u-topleft", "u-mid", "u-row2", "u-wrap", "u-row1"),
        top_left_users=("u-topleft",),
    )


@pytest.fixture
def planted(tmp_path: Path) -> PlantedStore:
    return build_planted_store(tmp_path / "creds.txt")


def path_placement(grid: GridSpec, word: str, cells: list[tuple[int, int]]) -> Placement:
    return Placement(grid, tuple((Coord(r, c), ch) for (r, c), ch in zip(cells, word)))


def scatter_placement(grid: GridSpec, mapping: dict[tuple[int, int], str]) -> Placement:
    return Placement(grid, tuple((Coord(r, c), ch) for (r, c), ch in mapping.items()))


def build_tradeoff_corpus() -> tuple[list[Placement], list[str], dict[str, float]]:
    """Twenty placements over the fixture dictionary, planted so each rung of
    the strategy ladder recovers exactly two or four more than the one below:
    0.2 / 0.4 / 0.5 / 0.7 / 0.8 / 0.9 / 1.0."""
    g = FIXTURE_GRID
    w = FIXTURE_WORDS
    corpus: list[Placement] = []

    for word in w[:4]:
        corpus.append(typed(g, word, Coord(0, 0), Direction.E))
    # horizontal at other starts (two of them wrap)
    corpus.append(typed(g, w[4], Coord(1, 1), Direction.E))
    corpus.append(typed(g, w[6], Coord(2, 0), Direction.E))
    corpus.append(typed(g, w[8], Coord(3, 3), Direction.E))
    corpus.append(typed(g, w[9], Coord(1, 2), Direction.E))
    # right-to-left; no rotation of the reversed text is a dictionary word,
    # so only the bidirectional rung catches these
    corpus.append(typed(g, w[5], Coord(2, 3), Direction.W))
    corpus.append(typed(g, w[7], Coord(3, 2), Direction.W))
    # vertical and diagonal
    corpus.append(typed(g, w[0], Coord(1, 1), Direction.S))
    corpus.append(typed(g, w[2], Coord(0, 3), Direction.S))
    corpus.append(typed(g, w[1], Coord(0, 0), Direction.SE))
    corpus.append(typed(g, w[3], Coord(3, 0), Direction.NE))
    # one-turn paths
    corpus.append(path_placement(g, "cabd", [(0, 0), (0, 1), (1, 1), (2, 1)]))
    corpus.append(path_placement(g, "dabc", [(1, 3), (2, 3), (3, 3), (3, 0)]))
    # two-turn paths (no one-turn typing of any dictionary word reaches these)
    corpus.append(path_placement(g, "abab", [(1, 0), (1, 1), (2, 1), (2, 2)]))
    corpus.append(path_placement(g, "cdab", [(2, 0), (2, 1), (1, 1), (1, 2)]))
    # scattered cells, dictionary character multisets, no adjacent pair
    corpus.append(scatter_placement(g, {(0, 0): "a", (0, 2): "b", (2, 0): "c", (2, 2): "d"}))
    corpus.append(scatter_placement(g, {(0, 1): "a", (2, 3): "a", (0, 3): "b", (2, 1): "b"}))

    expected = {
        "fixed-top-left": 0.2,
        "horizontal-lr": 0.4,
        "horizontal-bidi": 0.5,
        "straight-all": 0.7,
        "snake-1": 0.8,
        "snake-2": 0.9,
        "points-count": 1.0,
    }
    return corpus, list(w), expected
