#!/usr/bin/env python3
"""
Permutations for PRISMA
Elements of the symmetric group stored as value words (w(1), ..., w(r)), 1-based.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Protocol, Tuple, TypeVar

from src.utils.errors import ArityMismatchError, InvalidInputError


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..r} as its value word"""

    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, 'word', word)
        if not word:
            raise InvalidInputError("a permutation needs arity at least 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInputError(f"{word} is not a permutation of 1..{len(word)}")

    @property
    def arity(self) -> int:
        return len(self.word)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.word

    def __call__(self, value: int) -> int:
        return self.word[value - 1]

    def __iter__(self):
        return iter(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return '(' + ','.join(map(str, self.word)) + ')'

    def relabeled(self, w: 'Permutation') -> 'Permutation':
        return Permutation(tuple(w(v) for v in self.word))

    def precedes(self, i: int, j: int) -> bool:
        """True when i is read before j"""
        return self.word.index(i) < self.word.index(j)

    def inverse(self) -> 'Permutation':
        inv = [0] * self.arity
        for position, value in enumerate(self.word, start=1):
            inv[value - 1] = position
        return Permutation(tuple(inv))


def identity(arity: int) -> Permutation:
    return Permutation(tuple(range(1, arity + 1)))


def compose(v: Permutation, w: Permutation) -> Permutation:
    """v∘w, the permutation a ↦ v(w(a))"""
    if v.arity != w.arity:
        raise ArityMismatchError(f"cannot compose arities {v.arity} and {w.arity}")
    return Permutation(tuple(v(a) for a in w.word))


@lru_cache(maxsize=None)
def _all_words(arity: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(1, arity + 1)))


def all_permutations(arity: int) -> List[Permutation]:
    """Σ_r in lexicographic order of value words"""
    if arity < 1:
        raise InvalidInputError(f"arity must be at least 1, got {arity}")
    return [Permutation(word) for word in _all_words(arity)]


class Relabelable(Protocol):
    arity: int

    def relabeled(self, w: Permutation): ...


T = TypeVar('T')


def relabel(w: Permutation, target: T) -> T:
    """Symmetric-group action replacing every letter v by w(v).

    Acts letterwise on permutations and surjections, and diagonally
    (vertex by vertex) on simplices and chains.
    """
    if w.arity != target.arity:
        raise ArityMismatchError(f"permutation of arity {w.arity} cannot act on arity {target.arity}")
    return target.relabeled(w)
