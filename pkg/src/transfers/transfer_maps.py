#!/usr/bin/env python3
"""
Transfer maps for PRISMA
TC : X(r) → E(r), the signed sum of maximal prism simplices, and
TR : E(r) → X(r), table reduction over compositions of r + d.
"""

from functools import lru_cache
from typing import Iterator, Tuple

from src.combinatorics.surjections import Surjection, classify_word, WordKind
from src.prisms.prism import maximal_simplices, orientation_sign
from src.simplicial.bar_construction import EChain, Simplex, require_nondegenerate
from src.surjection_complex.differential import XChain


@lru_cache(maxsize=65536)
def tc_surjection(u: Surjection) -> EChain:
    """ε(u) Σ_p sign(p) τ_u(p); the fundamental simplex gets coefficient +1"""
    epsilon = orientation_sign(u)
    terms = [(m.simplex, epsilon * m.sign) for m in maximal_simplices(u)]
    return EChain(u.arity, u.degree, terms)


def tc(c: XChain) -> EChain:
    return c.map_linear(tc_surjection, EChain, c.degree)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of `parts` positive integers summing to `total`, lexicographic"""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _fill_rows(s: Simplex, sizes: Tuple[int, ...]) -> Tuple[int, ...]:
    final = set()
    word = []
    last = len(sizes) - 1
    for i, (w, size) in enumerate(zip(s.vertices, sizes)):
        row = [v for v in w.word if v not in final][:size]
        word.extend(row)
        if i < last:
            # every value of the row except its caesura is spent
            final.update(row[:-1])
    return tuple(word)


@lru_cache(maxsize=65536)
def table_reduction(s: Simplex) -> XChain:
    """TR on a nondegenerate simplex: one +1 term per composition whose rows join without repetition"""
    require_nondegenerate(s)
    r, d = s.arity, s.dimension
    terms = []
    for sizes in compositions(r + d, d + 1):
        word = _fill_rows(s, sizes)
        if classify_word(word, r) is WordKind.VALID:
            terms.append((Surjection(word, r), 1))
    return XChain(r, d, terms)


def tr(c: EChain) -> XChain:
    return c.map_linear(table_reduction, XChain, c.degree)


def tc_tr(s: Simplex) -> EChain:
    """T = TC∘TR on a basis simplex"""
    return tc(table_reduction(s))
