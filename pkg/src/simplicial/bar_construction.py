#!/usr/bin/env python3
"""
Bar construction for PRISMA
The simplicial sets W(r) (tuples of permutations) and their normalized chains E(r).
Face signs follow δ = Σ (-1)^i d_i; degenerate tuples are zero in E(r).
"""

import math
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from src.combinatorics.permutations import Permutation, all_permutations
from src.simplicial.chain import Chain
from src.utils.errors import (
    ArityMismatchError,
    DegenerateError,
    IndexOutOfRangeError,
    InvalidInputError,
    ResourceExceededError,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_BASIS = 250000


@dataclass(frozen=True)
class Simplex:
    """An n-simplex (w_0, ..., w_n) of W(r); may be degenerate"""

    vertices: Tuple[Permutation, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, 'vertices', vertices)
        if not vertices:
            raise InvalidInputError("a simplex needs at least one vertex")
        arities = {v.arity for v in vertices}
        if len(arities) != 1:
            raise ArityMismatchError(f"simplex vertices have mixed arities {sorted(arities)}")

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]]) -> 'Simplex':
        return cls(tuple(Permutation(tuple(w)) for w in words))

    @property
    def arity(self) -> int:
        return self.vertices[0].arity

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    # chains index basis elements by degree
    degree = dimension

    @property
    def is_degenerate(self) -> bool:
        return any(a == b for a, b in zip(self.vertices, self.vertices[1:]))

    @property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(v.word for v in self.vertices)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return tuple(value for v in self.vertices for value in v.word)

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return '(' + ','.join(str(v) for v in self.vertices) + ')'

    def relabeled(self, w: Permutation) -> 'Simplex':
        return Simplex(tuple(v.relabeled(w) for v in self.vertices))

    def prefix(self, i: int) -> 'Simplex':
        """(w_0, ..., w_i)"""
        return Simplex(self.vertices[:i + 1])

    def last(self) -> Permutation:
        return self.vertices[-1]


def require_nondegenerate(s: Simplex) -> Simplex:
    if s.is_degenerate:
        raise DegenerateError(f"simplex {s} has equal adjacent vertices")
    return s


def face(s: Simplex, i: int) -> Simplex:
    """d_i: omit vertex i; check `is_degenerate` on the result"""
    if s.dimension == 0:
        raise IndexOutOfRangeError(f"vertex {s} has no faces")
    if not 0 <= i <= s.dimension:
        raise IndexOutOfRangeError(f"face index {i} outside 0..{s.dimension}")
    return Simplex(s.vertices[:i] + s.vertices[i + 1:])


def degeneracy(s: Simplex, j: int) -> Simplex:
    """s_j: repeat vertex j (always degenerate)"""
    if not 0 <= j <= s.dimension:
        raise IndexOutOfRangeError(f"degeneracy index {j} outside 0..{s.dimension}")
    return Simplex(s.vertices[:j + 1] + s.vertices[j:])


class EChain(Chain):
    """Element of E(r)_n; degenerate simplices are dropped on construction"""

    __slots__ = ()

    @staticmethod
    def _vanishes(basis) -> bool:
        return basis.is_degenerate

    @classmethod
    def vertex(cls, w: Permutation) -> 'EChain':
        return cls.of(Simplex((w,)))


def simplex_boundary(s: Simplex) -> EChain:
    """Σ (-1)^i d_i s with degenerate faces dropped"""
    if s.dimension == 0:
        return EChain(s.arity, -1)
    vertices = s.vertices
    terms = [(Simplex(vertices[:i] + vertices[i + 1:]), -1 if i % 2 else 1)
             for i in range(len(vertices))]
    return EChain(s.arity, s.dimension - 1, terms)


def boundary_e(c: EChain) -> EChain:
    if c.degree <= 0:
        return EChain(c.arity, c.degree - 1)
    return c.map_linear(simplex_boundary, EChain, c.degree - 1)


def simplex_count(arity: int, dimension: int) -> int:
    """Number of nondegenerate n-simplices of W(r): r!(r!-1)^n"""
    order = math.factorial(arity)
    return order * (order - 1) ** dimension


def enumerate_simplices(arity: int, dimension: int,
                        limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[Simplex]:
    """Basis of E(r)_n in lexicographic order of flattened vertex words"""
    if arity < 1 or dimension < 0:
        raise InvalidInputError(f"need arity >= 1 and dimension >= 0, got ({arity}, {dimension})")
    count = simplex_count(arity, dimension)
    if limit is not None and count > limit:
        raise ResourceExceededError(f"basis of E({arity})_{dimension}", count, limit)

    perms = all_permutations(arity)
    simplices = []

    def extend(prefix: Tuple[Permutation, ...]):
        if len(prefix) == dimension + 1:
            simplices.append(Simplex(prefix))
            return
        for w in perms:
            if prefix and prefix[-1] == w:
                continue
            extend(prefix + (w,))

    extend(())
    logger.debug(f"Enumerated {len(simplices)} simplices of W({arity})_{dimension}")
    return simplices
