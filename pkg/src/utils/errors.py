#!/usr/bin/env python3
"""
Error types for PRISMA
Every failure the library raises derives from PrismaError and carries the CLI exit code.
"""

from typing import Optional


class PrismaError(Exception):
    """Base class for all PRISMA errors"""

    exit_code = 2


class InvalidInputError(PrismaError, ValueError):
    """Malformed or inconsistent input"""


class ParseError(InvalidInputError):
    """Text that could not be decoded; position is a character offset"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotSurjectiveError(InvalidInputError):
    """Some value of {1..r} does not occur in the word"""


class DegenerateError(InvalidInputError):
    """Adjacent repetition in a word or a simplex"""


class OutOfRangeError(InvalidInputError):
    """Letter outside {1..r}"""


class NoSuchOccurrenceError(InvalidInputError):
    """Occurrence index beyond the multiplicity of a value"""


class ArityMismatchError(InvalidInputError):
    """Objects of different arities combined"""


class DegreeMismatchError(InvalidInputError):
    """Chains of different degrees combined, or a map that does not preserve degree"""


class IndexOutOfRangeError(InvalidInputError):
    """Face or degeneracy index outside 0..n"""


class CoordOutOfRangeError(InvalidInputError):
    """Prism vertex coordinate outside 0..d_k-1"""


class PathInvalidError(InvalidInputError):
    """Step sequence whose value counts do not match the prism factors"""


class FactorIsPointError(InvalidInputError):
    """Face requested on a zero-dimensional prism factor"""


class UnknownSuiteError(InvalidInputError):
    """Verification suite name not in the registry"""


class ConfigError(InvalidInputError):
    """Configuration file or sweep bounds are invalid"""


class ResourceExceededError(PrismaError):
    """An enumeration would exceed the configured basis-size guard"""

    def __init__(self, what: str, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{what}: {count} elements exceeds the limit of {limit}")
