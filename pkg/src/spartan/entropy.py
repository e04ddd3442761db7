"""Security arithmetic: password-space sizes and entropy estimates.

Two families of numbers live here. Space sizes are combinatorial facts
(alphabet^length, times the ordered cell arrangements for grid passwords).
Entropy estimates follow the composition-based schedules: the per-character
schedule used for user-chosen text, and the per-cell schedule for the entropy
contributed by choosing where on the grid each character lands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import KExceedsNError, LengthExceedsCellsError


def perm_count(n: int, k: int) -> int:
    """Ordered selections of k items from n, exact: n!/(n-k)!."""
    if k > n:
        raise KExceedsNError(f"cannot arrange {k} items in {n} slots")
    if k < 0 or n < 0:
        raise KExceedsNError("counts must be nonnegative")
    return math.perm(n, k)


def _log2_big(n: int) -> float:
    # math.log2 overflows converting ints beyond ~1e308; rescale by bit length.
    if n <= 0:
        raise ValueError("log2 of nonpositive value")
    shift = max(n.bit_length() - 512, 0)
    return math.log2(n >> shift) + shift


def linear_space_bits(alphabet_size: int, length: int) -> float:
    if alphabet_size < 2:
        raise ValueError(f"alphabet size must be >= 2, got {alphabet_size}")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    return length * math.log2(alphabet_size)


def spartan_space_bits(alphabet_size: int, length: int, cells: int) -> float:
    if length > cells:
        raise LengthExceedsCellsError(
            f"length {length} exceeds cell count {cells}"
        )
    if length == 0:
        return 0.0
    return linear_space_bits(alphabet_size, length) + _log2_big(perm_count(cells, length))


# Cumulative per-character schedule for user-chosen text: 4 bits for the
# first character, 2 for each of characters 2-8, 1.5 for 9-20, 1 beyond.
def char_schedule_bits(length: int) -> float:
    if length < 0:
        raise ValueError("length must be >= 0")
    bits = 0.0
    bits += 4.0 * min(length, 1)
    bits += 2.0 * max(min(length, 8) - 1, 0)
    bits += 1.5 * max(min(length, 20) - 8, 0)
    bits += 1.0 * max(length - 20, 0)
    return bits


# Cumulative per-cell schedule: 5 bits for the first placed cell, 2.5 for the
# second, 1 for each of cells 3-12, nothing after that (17.5-bit cap).
def cell_schedule_bits(count: int) -> float:
    if count < 0:
        raise ValueError("count must be >= 0")
    bits = 0.0
    bits += 5.0 * min(count, 1)
    bits += 2.5 * max(min(count, 2) - 1, 0)
    bits += 1.0 * max(min(count, 12) - 2, 0)
    return bits


def user_linear_entropy(length: int) -> float:
    if length < 1:
        raise ValueError("length must be >= 1")
    return char_schedule_bits(length)


def user_spartan_entropy(length: int) -> float:
    """User-chosen grid password: text entropy plus placement entropy for the
    same number of cells."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return char_schedule_bits(length) + cell_schedule_bits(length)


def random_entropy(alphabet_size: int, length: int, cells: int | None = None) -> float:
    if cells is None:
        return linear_space_bits(alphabet_size, length)
    return spartan_space_bits(alphabet_size, length, cells)


@dataclass(frozen=True)
class AttackModel:
    """Dictionary attack parameters: S candidate passwords, of which the
    target's password is one with likelihood L."""

    space: float
    likelihood: float

    def __post_init__(self) -> None:
        if self.space < 1:
            raise ValueError(f"space must be >= 1, got {self.space}")
        if not 0 < self.likelihood <= 1:
            raise ValueError(f"likelihood must be in (0, 1], got {self.likelihood}")


def eq1_entropy(model: AttackModel) -> float:
    # Expected guesses to hit a password known to be among S candidates with
    # probability L is S/(2L); the estimate is the bit cost of that search.
    return math.log2(model.space / (2.0 * model.likelihood))


def paper_round(bits: float) -> int:
    """Round half away from zero (the convention behind the headline integer
    bit counts). Not built-in round(), which rounds halves to even."""
    return math.floor(bits + 0.5)


def sci_format(n: int) -> str:
    """Truncating three-significant-digit scientific notation, e.g. 2.78E+21.

    The mantissa keeps the first three digits unrounded, so values agree with
    eyeballing the leading digits of the integer.
    """
    if n < 1:
        raise ValueError("value must be a positive integer")
    digits = str(n)
    exponent = len(digits) - 1
    mantissa = (digits + "00")[:3]
    return f"{mantissa[0]}.{mantissa[1:]}E+{exponent}"


@dataclass(frozen=True)
class EntropyPoint:
    length: int
    user_linear: float
    user_spartan: float
    random_linear: float
    random_spartan: float


CURVE_HEADER = "length,user_linear,user_spartan,random_linear,random_spartan"


def entropy_curve(
    max_length: int, alphabet_size: int = 95, cells: int = 144
) -> list[EntropyPoint]:
    """The four entropy-versus-length series: user-chosen and random, each in
    linear and grid form. Random series default to the 95-symbol printable
    alphabet."""
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    points = []
    for length in range(1, max_length + 1):
        points.append(
            EntropyPoint(
                length=length,
                user_linear=user_linear_entropy(length),
                user_spartan=user_spartan_entropy(length),
                random_linear=random_entropy(alphabet_size, length),
                random_spartan=random_entropy(alphabet_size, length, cells),
            )
        )
    return points


def curve_csv(points: list[EntropyPoint]) -> str:
    lines = [CURVE_HEADER]
    for p in points:
        lines.append(
            f"{p.length},{p.user_linear:.2f},{p.user_spartan:.2f},"
            f"{p.random_linear:.2f},{p.random_spartan:.2f}"
        )
    return "\n".join(lines) + "\n"
