#!/usr/bin/env python3
"""
Prisms for PRISMA
The prism τ_u : Δ^{d_1-1} × ... × Δ^{d_r-1} → W(r) attached to a surjection u:
vertex map, maximal simplices as lattice paths, the fundamental simplex,
shuffle and orientation signs, and prism faces.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from src.combinatorics.permutations import Permutation
from src.combinatorics.surjections import (
    Surjection,
    WordKind,
    caesura_sequence,
    classify_word,
    delete_occurrence,
    multiplicities,
    occurrence_positions,
)
from src.simplicial.bar_construction import DEFAULT_MAX_BASIS, Simplex
from src.utils.errors import (
    CoordOutOfRangeError,
    FactorIsPointError,
    NoSuchOccurrenceError,
    PathInvalidError,
    ResourceExceededError,
)

# (x_1, ..., x_r) with 0 <= x_k <= d_k - 1
VertexCoord = Tuple[int, ...]
# (k_0, ..., k_{d-1}); value k occurs d_k - 1 times
LatticePath = Tuple[int, ...]


def _check_coords(u: Surjection, x: Sequence[int]):
    counts = multiplicities(u)
    if len(x) != u.arity or any(not 0 <= xk < dk for xk, dk in zip(x, counts)):
        raise CoordOutOfRangeError(f"coordinates {tuple(x)} outside the prism of {u} (multiplicities {counts})")


def _vertex(u: Surjection, x: Sequence[int]) -> Permutation:
    positions = occurrence_positions(u)
    selected = sorted(positions[k][xk] for k, xk in enumerate(x))
    return Permutation(tuple(u.word[p] for p in selected))


def vertex_permutation(u: Surjection, x: Sequence[int]) -> Permutation:
    """Read the (x_k+1)-th occurrence of every value k in word order"""
    _check_coords(u, x)
    return _vertex(u, x)


def vertex_table(u: Surjection) -> List[Tuple[VertexCoord, Permutation]]:
    """Every prism vertex with its image, coordinates in lexicographic order"""
    ranges = [range(dk) for dk in multiplicities(u)]
    return [(coords, _vertex(u, coords)) for coords in itertools.product(*ranges)]


def maximal_path_count(u: Surjection) -> int:
    """d! / Π (d_k - 1)!"""
    count = math.factorial(u.degree)
    for dk in multiplicities(u):
        count //= math.factorial(dk - 1)
    return count


def enumerate_maximal_paths(u: Surjection, limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[LatticePath]:
    """Step sequences of the saturated monotone lattice paths of the prism"""
    count = maximal_path_count(u)
    if limit is not None and count > limit:
        raise ResourceExceededError(f"maximal simplices of the prism of {u}", count, limit)
    steps = [k for k, dk in enumerate(multiplicities(u), start=1) for _ in range(dk - 1)]
    return [tuple(p) for p in multiset_permutations(steps)]


def _check_path(u: Surjection, p: Sequence[int]):
    expected = {k: dk - 1 for k, dk in enumerate(multiplicities(u), start=1) if dk > 1}
    if any(not 1 <= k <= u.arity for k in p) or dict(Counter(p)) != expected:
        raise PathInvalidError(f"steps {tuple(p)} do not match the prism of {u}")


def path_vertices(p: Sequence[int], arity: int) -> List[VertexCoord]:
    """x^(0) = 0, x^(i+1) = x^(i) + e_{k_i}"""
    x = [0] * arity
    chain = [tuple(x)]
    for k in p:
        x[k - 1] += 1
        chain.append(tuple(x))
    return chain


def path_to_simplex(u: Surjection, p: Sequence[int]) -> Simplex:
    """Image of a maximal simplex; check `is_degenerate` on the result"""
    _check_path(u, p)
    return _path_simplex(u, tuple(p))


@lru_cache(maxsize=65536)
def _path_simplex(u: Surjection, p: LatticePath) -> Simplex:
    return Simplex(tuple(_vertex(u, x) for x in path_vertices(p, u.arity)))


def fundamental_simplex(u: Surjection) -> Simplex:
    """The maximal simplex whose steps are the caesuras of u"""
    return _path_simplex(u, caesura_sequence(u))


def path_sign(p: Sequence[int]) -> int:
    """(-1)^{inv(p)}, the Eilenberg-Zilber shuffle sign"""
    inversions = sum(1 for a, b in itertools.combinations(p, 2) if a > b)
    return -1 if inversions % 2 else 1


def orientation_sign(u: Surjection) -> int:
    """ε(u), the shuffle sign of the fundamental simplex"""
    return path_sign(caesura_sequence(u))


@dataclass(frozen=True)
class PrismFace:
    """Face of τ_u obtained by dropping occurrence x of value k"""

    k: int
    x: int
    word: Tuple[int, ...]
    kind: WordKind
    surjection: Optional[Surjection] = None

    @property
    def is_valid(self) -> bool:
        return self.kind is WordKind.VALID


def prism_face(u: Surjection, k: int, x: int) -> PrismFace:
    if not 1 <= k <= u.arity:
        raise NoSuchOccurrenceError(f"value {k} does not occur in {u}")
    if multiplicities(u)[k - 1] == 1:
        raise FactorIsPointError(f"value {k} occurs once in {u}; its prism factor is a point")
    word = delete_occurrence(u, k, x)
    kind = classify_word(word, u.arity)
    surjection = Surjection(word, u.arity) if kind is WordKind.VALID else None
    return PrismFace(k, x, word, kind, surjection)


def prism_faces(u: Surjection) -> List[PrismFace]:
    """All codimension-one faces, by value then occurrence"""
    return [prism_face(u, k, x)
            for k, dk in enumerate(multiplicities(u), start=1) if dk > 1
            for x in range(dk)]


def is_subsequence(v: Sequence[int], u: Sequence[int]) -> bool:
    remaining = iter(u)
    return all(letter in remaining for letter in v)


def simplex_in_prism(s: Simplex, u: Surjection) -> bool:
    """True iff the vertices of s are images of a componentwise weakly increasing chain of prism vertices"""
    if s.arity != u.arity:
        return False
    preimages = {}
    for coords, perm in vertex_table(u):
        preimages.setdefault(perm, []).append(coords)
    candidates = [preimages.get(v, []) for v in s.vertices]
    if not all(candidates):
        return False

    def extend(i: int, previous: Optional[VertexCoord]) -> bool:
        if i == len(candidates):
            return True
        return any(extend(i + 1, coords) for coords in candidates[i]
                   if previous is None or all(a <= b for a, b in zip(previous, coords)))

    return extend(0, None)


@lru_cache(maxsize=4096)
def prism_simplices(u: Surjection, limit: Optional[int] = DEFAULT_MAX_BASIS) -> Tuple[Simplex, ...]:
    """Every nondegenerate simplex in the image of τ_u, in canonical order"""
    found = set()
    for p in enumerate_maximal_paths(u, limit):
        chain = path_vertices(p, u.arity)
        for size in range(1, len(chain) + 1):
            for subset in itertools.combinations(chain, size):
                s = Simplex(tuple(_vertex(u, x) for x in subset))
                if not s.is_degenerate:
                    found.add(s)
    return tuple(sorted(found, key=lambda s: s.sort_key))


@dataclass(frozen=True)
class MaximalSimplex:
    path: LatticePath
    simplex: Simplex
    sign: int

    @property
    def is_degenerate(self) -> bool:
        return self.simplex.is_degenerate


def maximal_simplices(u: Surjection, limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[MaximalSimplex]:
    """Every maximal simplex of τ_u with its shuffle sign, in path order"""
    return [MaximalSimplex(p, _path_simplex(u, p), path_sign(p))
            for p in enumerate_maximal_paths(u, limit)]
