"""Exception types shared across the package."""

from __future__ import annotations


class SpartanError(Exception):
    """Base class for all errors raised by this package."""


class OutOfBoundsError(SpartanError):
    """A coordinate lies outside its grid."""


class NoCursorError(SpartanError):
    """A character was typed before any cell was selected."""


class BadCharError(SpartanError):
    """A character outside the grid's alphabet (space included) was typed."""


class EmptyUsernameError(SpartanError):
    """A username-derived value was requested for an empty username."""


class ParseError(SpartanError):
    """A serialized form failed to parse.

    ``offset`` is the character offset into the input at which parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class KdfParamError(SpartanError):
    """Invalid key-derivation parameters."""


class BadCredFileError(SpartanError):
    """A credential store file is malformed."""


class LengthExceedsCellsError(SpartanError):
    """A password length exceeds the number of grid cells."""


class KExceedsNError(SpartanError):
    """perm(n, k) requested with k > n."""


class TooShortError(SpartanError):
    """A placement is too small to classify."""


class NotAPathError(SpartanError):
    """Start inference requested for a shape class without a path."""


class EmptyCorpusError(SpartanError):
    """An operation over a placement corpus received no placements."""


class BadCorpusError(SpartanError):
    """A corpus file line is not a valid placement record."""


class TooLongError(SpartanError):
    """A dictionary word cannot fit the attack grid."""


class NonEnumerableStrategyError(SpartanError):
    """Candidate generation requested for a counting-only strategy."""


class CandidateBudgetError(SpartanError):
    """A path enumeration exceeded its hard candidate budget."""


class EmptyDictionaryError(SpartanError):
    """The attack dictionary contains no words."""
