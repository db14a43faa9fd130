#!/usr/bin/env python3
"""
Integer homology for PRISMA
Boundary matrices of E(r) and X(r) (optionally restricted to a filtration stage),
Smith normal form through sympy and a rational rank cross-check through numpy.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from src.filtration.complexity import in_filtration
from src.simplicial.bar_construction import DEFAULT_MAX_BASIS, boundary_e, enumerate_simplices, EChain
from src.surjection_complex.differential import XChain, boundary_x, enumerate_surjections
from src.utils.errors import InvalidInputError, PrismaError

logger = logging.getLogger(__name__)

SPACES = ('e', 'x')


@dataclass(frozen=True)
class HomologyGroup:
    """Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m"""

    degree: int
    rank: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append('Z' if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return ' + '.join(parts) if parts else '0'

    def __str__(self) -> str:
        return f"H_{self.degree} = {self.describe()}"

    def to_record(self) -> Dict:
        return {'degree': self.degree, 'rank': self.rank, 'torsion': list(self.torsion),
                'group': self.describe()}


@dataclass
class BoundaryData:
    """Smith normal form summary of one boundary matrix"""

    rows: int
    cols: int
    rank: int
    torsion: Tuple[int, ...]


def _space_ops(space: str) -> Tuple[Callable, Callable, type]:
    if space == 'e':
        return enumerate_simplices, boundary_e, EChain
    if space == 'x':
        return enumerate_surjections, boundary_x, XChain
    raise InvalidInputError(f"unknown space '{space}' (choose from {', '.join(SPACES)})")


def chain_bases(space: str, arity: int, top_degree: int, level: Optional[int] = None,
                limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[List]:
    """Bases in degrees 0..top_degree, restricted to F_level when given"""
    enumerate_basis, _, _ = _space_ops(space)
    bases = []
    for degree in range(top_degree + 1):
        basis = enumerate_basis(arity, degree, limit)
        if level is not None:
            basis = [b for b in basis if in_filtration(b, level)]
        bases.append(basis)
    return bases


def boundary_matrix(space: str, source: Sequence, target: Sequence) -> np.ndarray:
    """Matrix of δ from span(source) to span(target); columns follow source order"""
    _, boundary, chain_type = _space_ops(space)
    index = {b: row for row, b in enumerate(target)}
    matrix = np.zeros((len(target), len(source)), dtype=np.int64)
    for col, b in enumerate(source):
        for term, coefficient in boundary(chain_type.of(b)):
            if term not in index:
                raise PrismaError(f"boundary of {b} leaves the sub-complex through {term}")
            matrix[index[term], col] = coefficient
    return matrix


def smith_data(matrix: np.ndarray) -> BoundaryData:
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return BoundaryData(rows, cols, 0, ())
    factors = invariant_factors(DM(matrix.tolist(), ZZ))
    nonzero = [abs(int(f)) for f in factors if f != 0]
    rank = len(nonzero)
    rational = int(np.linalg.matrix_rank(matrix.astype(float)))
    if rational != rank:
        raise PrismaError(f"Smith rank {rank} disagrees with rational rank {rational}")
    return BoundaryData(rows, cols, rank, tuple(t for t in nonzero if t > 1))


def homology(space: str, arity: int, max_degree: int, filtration_level: Optional[int] = None,
             limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[HomologyGroup]:
    """H_0..H_max_degree of E(r) or X(r), or of their F_n stage"""
    if max_degree < 0:
        raise InvalidInputError(f"max degree must be non-negative, got {max_degree}")
    if filtration_level is not None and filtration_level < 1:
        raise InvalidInputError(f"filtration levels start at 1, got {filtration_level}")

    bases = chain_bases(space, arity, max_degree + 1, filtration_level, limit)
    # boundaries[k] is δ: C_k → C_{k-1}; δ_0 is zero
    boundaries = [BoundaryData(0, len(bases[0]), 0, ())]
    for k in range(1, max_degree + 2):
        boundaries.append(smith_data(boundary_matrix(space, bases[k], bases[k - 1])))

    groups = []
    for k in range(max_degree + 1):
        cycles = len(bases[k]) - boundaries[k].rank
        rank = cycles - boundaries[k + 1].rank
        groups.append(HomologyGroup(k, rank, boundaries[k + 1].torsion))
    level = 'full' if filtration_level is None else f"F_{filtration_level}"
    logger.debug(f"Homology of {space.upper()}({arity}) {level}: {', '.join(map(str, groups))}")
    return groups
