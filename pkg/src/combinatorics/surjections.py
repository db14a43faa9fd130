#!/usr/bin/env python3
"""
Surjections for PRISMA
Nondegenerate surjective words, occurrence bookkeeping and caesuras.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from src.combinatorics.permutations import Permutation
from src.utils.errors import (
    DegenerateError,
    InvalidInputError,
    NoSuchOccurrenceError,
    NotSurjectiveError,
    OutOfRangeError,
)

# d_k for k = 1..r, stored at index k-1
Multiplicities = Tuple[int, ...]


class WordKind(Enum):
    VALID = "valid"
    DEGENERATE = "degenerate"
    NOT_SURJECTIVE = "not_surjective"
    OUT_OF_RANGE = "out_of_range"


def classify_word(word: Sequence[int], arity: int) -> WordKind:
    """Classify a raw word over {1..arity}"""
    if any(v < 1 or v > arity for v in word):
        return WordKind.OUT_OF_RANGE
    if any(a == b for a, b in zip(word, word[1:])):
        return WordKind.DEGENERATE
    if len(set(word)) != arity:
        return WordKind.NOT_SURJECTIVE
    return WordKind.VALID


_KIND_ERRORS = {
    WordKind.OUT_OF_RANGE: (OutOfRangeError, "has a letter outside 1..{arity}"),
    WordKind.DEGENERATE: (DegenerateError, "has an adjacent repetition"),
    WordKind.NOT_SURJECTIVE: (NotSurjectiveError, "misses a value of 1..{arity}"),
}


@dataclass(frozen=True, order=True)
class Surjection:
    """Basis element of X(r)_d: a word of length r+d hitting every value, no adjacent repeats"""

    word: Tuple[int, ...]
    arity: int

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, 'word', word)
        if self.arity < 1:
            raise InvalidInputError(f"arity must be at least 1, got {self.arity}")
        if not word:
            raise InvalidInputError("a surjection word cannot be empty")
        kind = classify_word(word, self.arity)
        if kind is not WordKind.VALID:
            error, reason = _KIND_ERRORS[kind]
            raise error(f"word {word} " + reason.format(arity=self.arity))

    @classmethod
    def from_permutation(cls, w: Permutation) -> 'Surjection':
        return cls(w.word, w.arity)

    @property
    def degree(self) -> int:
        return len(self.word) - self.arity

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return '(' + ','.join(map(str, self.word)) + ')'

    def as_permutation(self) -> Permutation:
        if self.degree != 0:
            raise InvalidInputError(f"{self} has degree {self.degree}, not a permutation")
        return Permutation(self.word)

    def relabeled(self, w: Permutation) -> 'Surjection':
        return Surjection(tuple(w(v) for v in self.word), self.arity)


def validate_surjection(word: Sequence[int], arity: int) -> Surjection:
    """Build a Surjection, raising NotSurjective / Degenerate / OutOfRange errors"""
    return Surjection(tuple(word), arity)


@lru_cache(maxsize=65536)
def _positions(word: Tuple[int, ...], arity: int) -> Tuple[Tuple[int, ...], ...]:
    positions = [[] for _ in range(arity)]
    for index, value in enumerate(word):
        positions[value - 1].append(index)
    return tuple(tuple(p) for p in positions)


def occurrence_positions(u: Surjection) -> Tuple[Tuple[int, ...], ...]:
    """0-based positions of each value k = 1..r, indexed by k-1"""
    return _positions(u.word, u.arity)


def multiplicities(u: Surjection) -> Multiplicities:
    return tuple(len(p) for p in occurrence_positions(u))


def caesura_sequence(u: Surjection) -> Tuple[int, ...]:
    """The word with the last occurrence of every value removed"""
    last = {p[-1] for p in occurrence_positions(u)}
    return tuple(v for index, v in enumerate(u.word) if index not in last)


def delete_occurrence(u: Surjection, k: int, x: int) -> Tuple[int, ...]:
    """Remove the (x+1)-th occurrence of k; the raw word is left for the caller to classify"""
    if not 1 <= k <= u.arity:
        raise NoSuchOccurrenceError(f"value {k} does not occur in {u}")
    positions = occurrence_positions(u)[k - 1]
    if not 0 <= x < len(positions):
        raise NoSuchOccurrenceError(f"{u} has {len(positions)} occurrence(s) of {k}, no index {x}")
    cut = positions[x]
    return u.word[:cut] + u.word[cut + 1:]


def insert_occurrence(word: Sequence[int], position: int, value: int) -> Tuple[int, ...]:
    word = tuple(word)
    return word[:position] + (value,) + word[position:]


def iter_surjections(arity: int, degree: int,
                     max_multiplicity: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Lexicographic generator of the valid surjection words of X(arity)_degree"""
    if arity < 1 or degree < 0:
        return
    length = arity + degree
    counts = [0] * (arity + 1)
    word = []

    def extend():
        missing = sum(1 for v in range(1, arity + 1) if counts[v] == 0)
        remaining = length - len(word)
        if missing > remaining:
            return
        if remaining == 0:
            yield tuple(word)
            return
        for v in range(1, arity + 1):
            if word and word[-1] == v:
                continue
            if max_multiplicity is not None and counts[v] >= max_multiplicity:
                continue
            word.append(v)
            counts[v] += 1
            yield from extend()
            word.pop()
            counts[v] -= 1

    yield from extend()
