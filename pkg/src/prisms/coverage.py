#!/usr/bin/env python3
"""
Prism coverage for PRISMA
Search for a surjection whose prism contains a given simplex of W(r),
and the check that two prisms meet along common faces.
"""

import logging
from typing import List, Optional

from src.combinatorics.surjections import Surjection, iter_surjections, multiplicities
from src.prisms.prism import is_subsequence, prism_simplices, simplex_in_prism
from src.simplicial.bar_construction import DEFAULT_MAX_BASIS, Simplex, require_nondegenerate
from src.utils.errors import InvalidInputError, ResourceExceededError

logger = logging.getLogger(__name__)


def covering_surjection(s: Simplex, bound: int,
                        limit: Optional[int] = DEFAULT_MAX_BASIS) -> Optional[Surjection]:
    """First u (by length, then word) with every d_k <= bound whose prism contains s.

    Returns None when no candidate within the bound qualifies.
    """
    require_nondegenerate(s)
    if bound < 1:
        raise InvalidInputError(f"multiplicity bound must be at least 1, got {bound}")
    r = s.arity
    vertex_words = s.words
    examined = 0
    # a chain of n+1 distinct prism vertices needs a prism of dimension >= n
    for degree in range(s.dimension, r * (bound - 1) + 1):
        for word in iter_surjections(r, degree, max_multiplicity=bound):
            examined += 1
            if limit is not None and examined > limit:
                raise ResourceExceededError(f"coverage candidates for {s}", examined, limit)
            if not all(is_subsequence(v, word) for v in vertex_words):
                continue
            u = Surjection(word, r)
            if simplex_in_prism(s, u):
                logger.debug(f"{s} covered by {u} after {examined} candidates")
                return u
    logger.debug(f"No covering surjection for {s} within bound {bound} ({examined} candidates)")
    return None


def common_subsequences(u: Surjection, v: Surjection) -> List[Surjection]:
    """Surjections that are subsequences of both u and v, by degree then word"""
    if u.arity != v.arity:
        return []
    r = u.arity
    bound = max(min(a, b) for a, b in zip(multiplicities(u), multiplicities(v)))
    common = []
    for degree in range(min(u.degree, v.degree) + 1):
        for word in iter_surjections(r, degree, max_multiplicity=bound):
            if is_subsequence(word, u.word) and is_subsequence(word, v.word):
                common.append(Surjection(word, r))
    return common


def intersection_outside_faces(u: Surjection, v: Surjection,
                               limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[Simplex]:
    """Simplices of τ_u that also lie in τ_v but in no τ_w for a common subsequence w.

    Empty exactly when τ_u meets τ_v along a union of common faces.
    """
    shared = [s for s in prism_simplices(u, limit) if simplex_in_prism(s, v)]
    if not shared:
        return []
    faces = common_subsequences(u, v)
    stray = [s for s in shared if not any(simplex_in_prism(s, w) for w in faces)]
    if stray:
        logger.debug(f"Prisms of {u} and {v} share {len(stray)} simplices outside common faces")
    return stray
