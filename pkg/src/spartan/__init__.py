"""Two-dimensional password toolkit.

A password here is a set of (cell, character) placements on a small grid
rather than a string. The package covers the full lifecycle: entry mechanics
and per-account grid colorization (`grid`), the canonical and tagged
serializations plus salted hashing (`codec`, `kdf`, `store`), security
arithmetic (`entropy`), shape classification of real passwords (`shapes`),
a dictionary-expansion attack engine (`cracker`), and an HTTP authentication
service (`service`). The `spartan` command exposes all of it for scripting.
"""

from __future__ import annotations

from . import errors
from .codec import from_canonical, from_tagged, to_canonical, to_tagged
from .cracker import (
    CrackReport,
    FixedTopLeftHorizontal,
    HorizontalAnyStartBothDir,
    HorizontalAnyStartLR,
    PointsCountOnly,
    SnakeBounded,
    StraightAnyDirection,
    Strategy,
    TradeoffPoint,
    crack,
    default_ladder,
    expansion_factor,
    generate_candidates,
    tradeoff_curve,
)
from .entropy import (
    AttackModel,
    entropy_curve,
    eq1_entropy,
    linear_space_bits,
    paper_round,
    perm_count,
    random_entropy,
    sci_format,
    spartan_space_bits,
    user_linear_entropy,
    user_spartan_entropy,
)
from .grid import (
    PRINTABLE_ALPHABET,
    Colorization,
    Coord,
    Direction,
    EntrySession,
    GridSpec,
    Placement,
    advance,
    colorize,
    grid_for_user,
    seed_from_username,
)
from .shapes import (
    CorpusStats,
    Orientation,
    ShapeClass,
    ShapeKind,
    classify,
    corpus_stats,
    infer_start,
    load_corpus,
)
from .store import CredentialRecord, create_record, verify_password

__version__ = "0.1.0"

__all__ = [
    "AttackModel",
    "Colorization",
    "Coord",
    "CorpusStats",
    "CrackReport",
    "CredentialRecord",
    "Direction",
    "EntrySession",
    "FixedTopLeftHorizontal",
    "GridSpec",
    "HorizontalAnyStartBothDir",
    "HorizontalAnyStartLR",
    "Orientation",
    "PRINTABLE_ALPHABET",
    "Placement",
    "PointsCountOnly",
    "ShapeClass",
    "ShapeKind",
    "SnakeBounded",
    "StraightAnyDirection",
    "Strategy",
    "TradeoffPoint",
    "advance",
    "classify",
    "colorize",
    "corpus_stats",
    "crack",
    "create_record",
    "default_ladder",
    "entropy_curve",
    "eq1_entropy",
    "errors",
    "expansion_factor",
    "from_canonical",
    "from_tagged",
    "generate_candidates",
    "grid_for_user",
    "infer_start",
    "linear_space_bits",
    "load_corpus",
    "paper_round",
    "perm_count",
    "random_entropy",
    "sci_format",
    "seed_from_username",
    "spartan_space_bits",
    "to_canonical",
    "to_tagged",
    "tradeoff_curve",
    "user_linear_entropy",
    "user_spartan_entropy",
    "verify_password",
]
