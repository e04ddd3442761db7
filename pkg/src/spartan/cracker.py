"""Dictionary-expansion attack engine.

A linear-password dictionary does not apply directly to grid passwords: the
same text can be typed at any start cell and in any direction. Each
AttackStrategy here expands one base word into the placements an attacker
would try under an assumption about user behavior, from "top-left, typed
east" (factor 1) up through arbitrary straight lines and bounded-turn snakes.
PointsCountOnly is the far end of the ladder: it only counts the candidate
space (an ordered arrangement per cell choice), because enumerating it is the
attack the scheme is designed to make impractical.

Two consumption modes, kept separate on purpose: crack() attacks a stolen
credential file (hashes only); tradeoff_curve() measures coverage against a
plaintext research corpus and never touches hashes.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .codec import to_canonical, to_tagged
from .entropy import perm_count
from .errors import (
    CandidateBudgetError,
    EmptyCorpusError,
    EmptyDictionaryError,
    NonEnumerableStrategyError,
    TooLongError,
)
from .grid import Coord, Direction, EntrySession, GridSpec, Placement, advance
from .store import CredentialRecord, verify_password


def _typed_placement(grid: GridSpec, word: str, start: Coord, direction: Direction) -> Placement:
    """Simulate actually typing the word, so wrap and overwrite behave
    exactly as they would for a user."""
    session = EntrySession(grid)
    session.set_cursor(start)
    session.set_direction(direction)
    session.type_string(word)
    return session.placement()


def _all_cells(grid: GridSpec) -> list[Coord]:
    return [Coord(r, c) for r in range(grid.rows) for c in range(grid.cols)]


def _unit_delta(grid: GridSpec, a: Coord, b: Coord) -> tuple[int, int]:
    dr = (b.row - a.row) % grid.rows
    dc = (b.col - a.col) % grid.cols
    if dr > 1:
        dr -= grid.rows
    if dc > 1:
        dc -= grid.cols
    return dr, dc


class Strategy(ABC):
    """One rule for expanding a dictionary word into grid placements."""

    name: str
    enumerable: bool = True
    budget: int | None = None

    @abstractmethod
    def factor(self, grid: GridSpec, word_length: int) -> int:
        """Raw candidate count for one word, before symmetry deduplication."""

    def starts(self, grid: GridSpec) -> list[Coord]:
        return _all_cells(grid)

    @abstractmethod
    def candidates_at(self, grid: GridSpec, word: str, start: Coord) -> Iterator[Placement]:
        """All raw candidates beginning at one start cell."""


class _DirectionalStrategy(Strategy):
    _dirs: tuple[Direction, ...]

    def factor(self, grid: GridSpec, word_length: int) -> int:
        return len(self.starts(grid)) * len(self._dirs)

    def candidates_at(self, grid: GridSpec, word: str, start: Coord) -> Iterator[Placement]:
        for d in self._dirs:
            yield _typed_placement(grid, word, start, d)


class FixedTopLeftHorizontal(_DirectionalStrategy):
    """The word typed once, at the top-left cell, heading east."""

    name = "fixed-top-left"
    _dirs = (Direction.E,)

    def starts(self, grid: GridSpec) -> list[Coord]:
        return [Coord(0, 0)]


class HorizontalAnyStartLR(_DirectionalStrategy):
    """Left-to-right at every start cell: rows*cols raw candidates."""

    name = "horizontal-lr"
    _dirs = (Direction.E,)


class HorizontalAnyStartBothDir(_DirectionalStrategy):
    """Either horizontal direction at every start cell: 2*rows*cols."""

    name = "horizontal-bidi"
    _dirs = (Direction.E, Direction.W)


class StraightAnyDirection(_DirectionalStrategy):
    """All eight directions at every start cell: 8*rows*cols raw; symmetric
    words collapse under dedup."""

    name = "straight-all"
    _dirs = tuple(Direction)


class SnakeBounded(Strategy):
    """Every simple path (no cell revisited) whose step direction changes at
    most max_turns times. Includes zero-turn paths, so successive bounds nest.

    Enumeration cost explodes with turns and length; the budget caps the raw
    candidates per word and overrunning it raises instead of truncating.
    """

    def __init__(self, max_turns: int, budget: int = 10_000_000):
        if max_turns < 0:
            raise ValueError("max_turns must be >= 0")
        if budget < 1:
            raise ValueError("budget must be >= 1")
        self.max_turns = max_turns
        self.budget = budget
        self.name = f"snake-{max_turns}"

    def _neighbor_steps(self, grid: GridSpec, coord: Coord) -> list[tuple[Coord, tuple[int, int]]]:
        # distinct neighbor cells; two directions can reach the same cell on
        # 2-wide grids, and the path cares about cells, not keystrokes
        out: dict[Coord, tuple[int, int]] = {}
        for d in Direction:
            n = advance(grid, coord, d)
            if n != coord:
                out[n] = _unit_delta(grid, coord, n)
        return sorted(out.items())

    def _paths(self, grid: GridSpec, length: int, start: Coord) -> Iterator[list[Coord]]:
        path = [start]
        visited = {start}

        def extend(last_delta: tuple[int, int] | None, turns: int) -> Iterator[list[Coord]]:
            if len(path) == length:
                yield list(path)
                return
            for cell, delta in self._neighbor_steps(grid, path[-1]):
                if cell in visited:
                    continue
                t = turns + (1 if last_delta is not None and delta != last_delta else 0)
                if t > self.max_turns:
                    continue
                path.append(cell)
                visited.add(cell)
                yield from extend(delta, t)
                path.pop()
                visited.discard(cell)

        yield from extend(None, 0)

    def factor(self, grid: GridSpec, word_length: int) -> int:
        count = 0
        for start in self.starts(grid):
            for _ in self._paths(grid, word_length, start):
                count += 1
                if count > self.budget:
                    raise CandidateBudgetError(
                        f"{self.name} exceeds its candidate budget of {self.budget}"
                    )
        return count

    def candidates_at(self, grid: GridSpec, word: str, start: Coord) -> Iterator[Placement]:
        for path in self._paths(grid, len(word), start):
            yield Placement(grid, tuple(zip(path, word)))


class PointsCountOnly(Strategy):
    """Counting-only endpoint of the ladder: any word character on any
    distinct cell, in typing order. perm(cells, length) raw candidates."""

    name = "points-count"
    enumerable = False

    def factor(self, grid: GridSpec, word_length: int) -> int:
        return perm_count(grid.cells, word_length)

    def candidates_at(self, grid: GridSpec, word: str, start: Coord) -> Iterator[Placement]:
        raise NonEnumerableStrategyError(
            f"{self.name} is a counting strategy; it never enumerates"
        )

    @staticmethod
    def covers(word: str, placement: Placement) -> bool:
        """A placement is reachable from a word iff it uses exactly the
        word's characters (typing order is not stored)."""
        placed = sorted(char for _, char in placement.entries)
        return placed == sorted(word)


def parse_strategy(token: str) -> Strategy:
    """Strategy names as used on the command line: fixed-top-left,
    horizontal-lr, horizontal-bidi, straight-all, snake:TURNS, points."""
    token = token.strip()
    plain = {
        "fixed-top-left": FixedTopLeftHorizontal,
        "horizontal-lr": HorizontalAnyStartLR,
        "horizontal-bidi": HorizontalAnyStartBothDir,
        "straight-all": StraightAnyDirection,
        "points": PointsCountOnly,
    }
    if token in plain:
        return plain[token]()
    if token.startswith("snake:"):
        try:
            turns = int(token.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad snake turn bound in {token!r}") from None
        return SnakeBounded(turns)
    raise ValueError(f"unknown strategy {token!r}")


def default_ladder() -> list[Strategy]:
    """Strategies ordered by increasing breadth; each candidate set contains
    the previous one's (for words that fit without wrapping), so tradeoff
    curves over this ladder are monotone."""
    return [
        FixedTopLeftHorizontal(),
        HorizontalAnyStartLR(),
        HorizontalAnyStartBothDir(),
        StraightAnyDirection(),
        SnakeBounded(1),
        SnakeBounded(2),
        PointsCountOnly(),
    ]


def _check_word(grid: GridSpec, word: str) -> None:
    if not word:
        raise EmptyDictionaryError("dictionary words must be non-empty")
    if len(word) > grid.cells:
        raise TooLongError(
            f"word of length {len(word)} cannot fit a grid of {grid.cells} cells"
        )


def expansion_factor(strategy: Strategy, grid: GridSpec, word_length: int) -> int:
    if word_length < 1:
        raise EmptyDictionaryError("word length must be >= 1")
    if word_length > grid.cells:
        raise TooLongError(
            f"word of length {word_length} cannot fit a grid of {grid.cells} cells"
        )
    return strategy.factor(grid, word_length)


def generate_candidates(
    strategy: Strategy,
    grid: GridSpec,
    word: str,
    starts: Sequence[Coord] | None = None,
) -> Iterator[Placement]:
    """Stream each distinct placement of the word exactly once (canonical-form
    dedup). Restricting `starts` yields the partition owned by those cells."""
    if not strategy.enumerable:
        raise NonEnumerableStrategyError(
            f"{strategy.name} is a counting strategy; it never enumerates"
        )
    _check_word(grid, word)
    raw = 0
    seen: set[str] = set()
    for start in strategy.starts(grid) if starts is None else starts:
        for placement in strategy.candidates_at(grid, word, start):
            raw += 1
            if strategy.budget is not None and raw > strategy.budget:
                raise CandidateBudgetError(
                    f"{strategy.name} exceeds its candidate budget of {strategy.budget}"
                )
            canon = to_canonical(placement)
            if canon not in seen:
                seen.add(canon)
                yield placement


def _expanded_partitions(
    strategy: Strategy, grid: GridSpec, word: str
) -> tuple[int, list[tuple[Coord, list[Placement]]]]:
    """Full expansion of one word: raw count plus deduplicated candidates
    grouped by owning start cell, in deterministic order."""
    _check_word(grid, word)
    raw = 0
    seen: set[str] = set()
    parts: dict[Coord, list[Placement]] = {}
    for start in strategy.starts(grid):
        for placement in strategy.candidates_at(grid, word, start):
            raw += 1
            if strategy.budget is not None and raw > strategy.budget:
                raise CandidateBudgetError(
                    f"{strategy.name} exceeds its candidate budget of {strategy.budget}"
                )
            canon = to_canonical(placement)
            if canon in seen:
                continue
            seen.add(canon)
            parts.setdefault(start, []).append(placement)
    return raw, list(parts.items())


@dataclass(frozen=True)
class Recovery:
    username: str
    word: str
    strategy: str
    placement: Placement

    @property
    def tagged(self) -> str:
        return to_tagged(self.placement)


@dataclass
class CrackReport:
    candidates_generated: int
    hashes_computed: int
    recovered: list[Recovery]
    elapsed: float
    recovery_fraction: float

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "candidates_generated": self.candidates_generated,
            "hashes_computed": self.hashes_computed,
            "recovered": [
                {
                    "username": r.username,
                    "word": r.word,
                    "strategy": r.strategy,
                    "tagged": r.tagged,
                }
                for r in self.recovered
            ],
            "recovery_fraction": self.recovery_fraction,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def _checkpoint_key(username: str, strategy: str, word: str, start: Coord) -> str:
    return "\t".join((username, strategy, word, f"{start.row},{start.col}"))


def _load_checkpoint(path: str | Path | None) -> set[str]:
    if path is None or not Path(path).exists():
        return set()
    return {line for line in Path(path).read_text(encoding="utf-8").splitlines() if line}


def crack(
    records: Sequence[CredentialRecord],
    words: Sequence[str],
    strategies: Sequence[Strategy],
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    alphabet: str | None = None,
) -> CrackReport:
    """Try every (record, strategy, word) expansion against the stored
    hashes. Work is partitioned by candidate start cell; with a checkpoint
    file, completed partitions are skipped on re-runs (counters then reflect
    only the work this invocation performed hashing for).
    """
    if not words:
        raise EmptyDictionaryError("the attack dictionary contains no words")
    started = time.perf_counter()
    done = _load_checkpoint(checkpoint_path)
    ckpt = open(checkpoint_path, "a", encoding="utf-8") if checkpoint_path else None

    raw_total = 0
    hashes = 0
    recovered: list[Recovery] = []
    hit_users: set[str] = set()

    def hash_partition(
        record: CredentialRecord, placements: list[Placement]
    ) -> tuple[int, list[Placement]]:
        hits = [p for p in placements if verify_password(record, p)]
        return len(placements), hits

    try:
        with ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
            for record in records:
                grid = record.grid(alphabet)
                for strategy in strategies:
                    for word in words:
                        raw, parts = _expanded_partitions(strategy, grid, word)
                        raw_total += raw
                        todo = [
                            (start, placements)
                            for start, placements in parts
                            if _checkpoint_key(record.username, strategy.name, word, start)
                            not in done
                        ]
                        futures = [
                            pool.submit(hash_partition, record, placements)
                            for _, placements in todo
                        ]
                        for (start, _), future in zip(todo, futures):
                            count, hits = future.result()
                            hashes += count
                            for placement in hits:
                                recovered.append(
                                    Recovery(record.username, word, strategy.name, placement)
                                )
                                hit_users.add(record.username)
                            if ckpt is not None:
                                ckpt.write(
                                    _checkpoint_key(
                                        record.username, strategy.name, word, start
                                    )
                                    + "\n"
                                )
                                ckpt.flush()
    finally:
        if ckpt is not None:
            ckpt.close()

    fraction = len(hit_users) / len(records) if records else 0.0
    return CrackReport(
        candidates_generated=raw_total,
        hashes_computed=hashes,
        recovered=recovered,
        elapsed=time.perf_counter() - started,
        recovery_fraction=fraction,
    )


@dataclass(frozen=True)
class TradeoffPoint:
    strategy: str
    dictionary_size: int
    recovery_fraction: float


TRADEOFF_HEADER = "strategy,dictionary_size,recovery_fraction"


def tradeoff_curve(
    corpus: Sequence[Placement],
    words: Sequence[str],
    strategies: Sequence[Strategy],
) -> list[TradeoffPoint]:
    """For each strategy: the expanded dictionary size (summed per-word raw
    factors) and the fraction of corpus placements it would recover. Research
    mode only: the corpus is plaintext placements, and nothing is hashed."""
    if not corpus:
        raise EmptyCorpusError("tradeoff analysis needs a non-empty corpus")
    if not words:
        raise EmptyDictionaryError("the attack dictionary contains no words")
    grid = corpus[0].grid
    for p in corpus:
        if p.grid != grid:
            raise EmptyCorpusError("corpus placements must share one grid")

    canon_index: dict[str, list[int]] = {}
    for i, p in enumerate(corpus):
        canon_index.setdefault(to_canonical(p), []).append(i)

    points = []
    for strategy in strategies:
        size = 0
        matched: set[int] = set()
        if not strategy.enumerable:
            for word in words:
                size += expansion_factor(strategy, grid, len(word))
            for i, p in enumerate(corpus):
                if any(PointsCountOnly.covers(word, p) for word in words):
                    matched.add(i)
        else:
            for word in words:
                size += expansion_factor(strategy, grid, len(word))
                for candidate in generate_candidates(strategy, grid, word):
                    canon = to_canonical(candidate)
                    if canon in canon_index:
                        matched.update(canon_index[canon])
        points.append(
            TradeoffPoint(strategy.name, size, len(matched) / len(corpus))
        )
    return sorted(points, key=lambda pt: (pt.dictionary_size, pt.strategy))


def tradeoff_csv(points: Sequence[TradeoffPoint]) -> str:
    lines = [TRADEOFF_HEADER]
    for pt in points:
        lines.append(f"{pt.strategy},{pt.dictionary_size},{pt.recovery_fraction:.6f}")
    return "\n".join(lines) + "\n"


def load_dictionary(path: str | Path) -> list[str]:
    """Newline-delimited word list; blank lines and exact duplicates dropped."""
    words = []
    seen = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word and word not in seen:
            seen.add(word)
            words.append(word)
    if not words:
        raise EmptyDictionaryError(f"no words in {path}")
    return words
