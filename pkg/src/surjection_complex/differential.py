#!/usr/bin/env python3
"""
Surjection complex for PRISMA
X(r): the cellular differential of the prism decomposition and basis enumeration.
"""

import logging
from typing import Callable, Dict, List, Optional

from src.combinatorics.surjections import Surjection, iter_surjections, multiplicities
from src.prisms.prism import orientation_sign, prism_faces
from src.simplicial.bar_construction import DEFAULT_MAX_BASIS
from src.simplicial.chain import Chain
from src.utils.errors import InvalidInputError, ResourceExceededError

logger = logging.getLogger(__name__)

# (u, v, k, x) -> coefficient of v in δu, v = u with occurrence x of k removed
SignRule = Callable[[Surjection, Surjection, int, int], int]


class XChain(Chain):
    """Element of X(r)_d with surjection basis words"""

    __slots__ = ()


def cellular_sign(u: Surjection, v: Surjection, k: int, x: int) -> int:
    """ε(u)·ε(v)·(-1)^{x + Σ_{l<k}(d_l - 1)}"""
    shift = x + sum(d - 1 for d in multiplicities(u)[:k - 1])
    sign = orientation_sign(u) * orientation_sign(v)
    return -sign if shift % 2 else sign


def unsigned_sign(u: Surjection, v: Surjection, k: int, x: int) -> int:
    """Every face with coefficient +1; only useful as a broken rule for harness self-tests"""
    return 1


SIGN_RULES: Dict[str, SignRule] = {
    'cellular': cellular_sign,
    'unsigned': unsigned_sign,
}

DEFAULT_SIGN_RULE = 'cellular'


def get_sign_rule(name: str) -> SignRule:
    try:
        return SIGN_RULES[name]
    except KeyError:
        raise InvalidInputError(f"unknown sign rule '{name}' (choose from {', '.join(SIGN_RULES)})") from None


def surjection_boundary(u: Surjection, sign_rule: str = DEFAULT_SIGN_RULE) -> XChain:
    if u.degree == 0:
        return XChain(u.arity, -1)
    rule = get_sign_rule(sign_rule)
    terms = [(f.surjection, rule(u, f.surjection, f.k, f.x))
             for f in prism_faces(u) if f.is_valid]
    return XChain(u.arity, u.degree - 1, terms)


def boundary_x(c: XChain, sign_rule: str = DEFAULT_SIGN_RULE) -> XChain:
    """Differential of X(r), extended linearly; degree 0 maps to zero"""
    if c.degree <= 0:
        return XChain(c.arity, c.degree - 1)
    return c.map_linear(lambda u: surjection_boundary(u, sign_rule), XChain, c.degree - 1)


def enumerate_surjections(arity: int, degree: int,
                          limit: Optional[int] = DEFAULT_MAX_BASIS) -> List[Surjection]:
    """Basis of X(arity)_degree in lexicographic word order"""
    if arity < 1 or degree < 0:
        raise InvalidInputError(f"need arity >= 1 and degree >= 0, got ({arity}, {degree})")
    basis = []
    for word in iter_surjections(arity, degree):
        basis.append(Surjection(word, arity))
        if limit is not None and len(basis) > limit:
            raise ResourceExceededError(f"basis of X({arity})_{degree}", len(basis), limit)
    logger.debug(f"Enumerated {len(basis)} surjections of X({arity})_{degree}")
    return basis
