"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations


class ThompsonError(ValueError):
    """Base class for all domain errors raised by the toolkit."""


class ShapeError(ThompsonError):
    """A prefix code does not have the expected bit/endmarker shape."""


class PinConflict(ThompsonError):
    """Pinned words handed to a code completion are prefix-comparable."""


class SizeError(ThompsonError):
    """A requested code or table size cannot be reached."""


class HypothesisFail(ThompsonError):
    """A leaf rearrangement was requested that the tree cannot support."""


class NotACode(ThompsonError):
    """A table column is not a maximal prefix code."""


class NotBijective(ThompsonError):
    """A table does not describe a bijection between its columns."""


class KappaPresent(ThompsonError):
    """A generator word still contains kappa letters where none are allowed."""


class NotInSubgroup(ThompsonError):
    """An element lies outside the subgroup an operation is defined on."""


class PreconditionError(ThompsonError):
    """Inputs violate a documented precondition."""


class ComparableInput(PreconditionError):
    """Two words expected to be prefix-incomparable are comparable."""


class EmptyRange(ThompsonError):
    """An index range is empty or inverted."""


class ParseError(ThompsonError):
    """Text input could not be parsed."""


class CycleError(ThompsonError):
    """A circuit contains a directed cycle."""


class FanoutError(ThompsonError):
    """A circuit source is used a number of times other than once."""


class ArityError(ThompsonError):
    """A circuit is evaluated on an input of the wrong length."""


class NotDepthOne(ThompsonError):
    """A slice handed to the slice compiler is not of depth one."""


class UnsupportedTag(ThompsonError):
    """A group tag is not supported by the requested operation."""


class NotInGroup(ThompsonError):
    """An element handed to factorization is outside the generator group."""


class ArityMismatch(ThompsonError):
    """Two circuits with different interfaces were compared."""
