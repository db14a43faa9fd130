#!/usr/bin/env python3
"""
Complexity filtration for PRISMA
Pairwise complexity matrices, cell descriptors and the filtration F_1 ⊂ F_2 ⊂ ... on E(r) and X(r).
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

from src.combinatorics.surjections import Surjection
from src.simplicial.bar_construction import Simplex
from src.utils.errors import ArityMismatchError, InvalidInputError

Pair = Tuple[int, int]
Cellular = Union[Surjection, Simplex]


class Orientation(Enum):
    """Relative order of a pair (i, j), i < j"""
    I_BEFORE_J = "i-before-j"
    J_BEFORE_I = "j-before-i"


def pairs(arity: int) -> List[Pair]:
    return list(itertools.combinations(range(1, arity + 1), 2))


@dataclass(frozen=True)
class ComplexityMatrix:
    """c_ij for every pair i < j, stored in lexicographic pair order"""

    arity: int
    entries: Tuple[Tuple[Pair, int], ...]

    def __getitem__(self, pair: Pair) -> int:
        i, j = sorted(pair)
        return dict(self.entries)[(i, j)]

    def as_dict(self) -> Dict[Pair, int]:
        return dict(self.entries)

    def maximum(self) -> int:
        return max((c for _, c in self.entries), default=1)

    def records(self) -> List[Dict[str, int]]:
        return [{'i': i, 'j': j, 'c': c} for (i, j), c in self.entries]


@dataclass(frozen=True)
class CellDescriptor:
    mu: ComplexityMatrix
    last_orientation: Tuple[Tuple[Pair, Orientation], ...]

    @property
    def arity(self) -> int:
        return self.mu.arity

    def orientation(self, pair: Pair) -> Orientation:
        return dict(self.last_orientation)[tuple(sorted(pair))]


def _reduced_pair_word(word: Tuple[int, ...], i: int, j: int) -> List[int]:
    reduced = []
    for v in word:
        if v in (i, j) and (not reduced or reduced[-1] != v):
            reduced.append(v)
    return reduced


def _orientation(first: int, i: int) -> Orientation:
    return Orientation.I_BEFORE_J if first == i else Orientation.J_BEFORE_I


def complexity_surjection(u: Surjection) -> ComplexityMatrix:
    """c_ij = length of the pair word of u with repeats collapsed, minus one"""
    return ComplexityMatrix(u.arity, tuple(
        ((i, j), len(_reduced_pair_word(u.word, i, j)) - 1) for i, j in pairs(u.arity)))


def complexity_simplex(s: Simplex) -> ComplexityMatrix:
    """c_ij = 1 + number of order changes of i, j along the vertices"""
    entries = []
    for i, j in pairs(s.arity):
        orders = [w.precedes(i, j) for w in s.vertices]
        changes = sum(1 for a, b in zip(orders, orders[1:]) if a != b)
        entries.append(((i, j), 1 + changes))
    return ComplexityMatrix(s.arity, tuple(entries))


def complexity(x: Cellular) -> ComplexityMatrix:
    if isinstance(x, Surjection):
        return complexity_surjection(x)
    if isinstance(x, Simplex):
        return complexity_simplex(x)
    raise InvalidInputError(f"no complexity for {type(x).__name__}")


def cell_descriptor(x: Cellular) -> CellDescriptor:
    mu = complexity(x)
    orientations = []
    for i, j in pairs(x.arity):
        if isinstance(x, Surjection):
            reduced = _reduced_pair_word(x.word, i, j)
            first = reduced[-2]
        else:
            first = i if x.last().precedes(i, j) else j
        orientations.append(((i, j), _orientation(first, i)))
    return CellDescriptor(mu, tuple(orientations))


def cell_leq(a: CellDescriptor, b: CellDescriptor) -> bool:
    """Cell containment: per pair, strictly smaller complexity or equal complexity and orientation"""
    if a.arity != b.arity:
        raise ArityMismatchError(f"cannot compare cells of arities {a.arity} and {b.arity}")
    b_mu, b_orientation = b.mu.as_dict(), dict(b.last_orientation)
    for (pair, c), (_, orientation) in zip(a.mu.entries, a.last_orientation):
        if c > b_mu[pair] or (c == b_mu[pair] and orientation is not b_orientation[pair]):
            return False
    return True


def in_filtration(x: Cellular, n: int) -> bool:
    if n < 1:
        raise InvalidInputError(f"filtration levels start at 1, got {n}")
    return max_complexity(x) <= n


def max_complexity(x: Cellular) -> int:
    """Smallest n with x in F_n"""
    return complexity(x).maximum()
