#!/usr/bin/env python3
"""
Chain homotopy for PRISMA
Prefix coning H with T = Id + δH + Hδ for any degree-preserving T that is the identity in degree 0.
"""

from typing import Callable, Dict

from src.simplicial.bar_construction import EChain, Simplex
from src.transfers.transfer_maps import tc_tr
from src.utils.errors import DegreeMismatchError, InvalidInputError

SimplexMap = Callable[[Simplex], EChain]


def identity_map(s: Simplex) -> EChain:
    return EChain.of(s)


HOMOTOPY_MAPS: Dict[str, SimplexMap] = {
    'tc-tr': tc_tr,
    'identity': identity_map,
}


def get_simplex_map(name: str) -> SimplexMap:
    try:
        return HOMOTOPY_MAPS[name]
    except KeyError:
        raise InvalidInputError(f"unknown map '{name}' (choose from {', '.join(HOMOTOPY_MAPS)})") from None


def homotopy_h(s: Simplex, T: SimplexMap = tc_tr) -> EChain:
    """Σ_i (-1)^{i+1} (T(w_0..w_i), w_i, ..., w_d), degenerate tuples dropped"""
    terms = []
    tail = s.vertices
    for i in range(s.dimension + 1):
        image = T(s.prefix(i))
        if image.degree != i:
            raise DegreeMismatchError(f"map sends {s.prefix(i)} to degree {image.degree}, expected {i}")
        sign = 1 if i % 2 else -1
        for v, coefficient in image:
            terms.append((Simplex(v.vertices + tail[i:]), sign * coefficient))
    return EChain(s.arity, s.dimension + 1, terms)


def homotopy_chain(c: EChain, T: SimplexMap = tc_tr) -> EChain:
    return c.map_linear(lambda s: homotopy_h(s, T), EChain, c.degree + 1)
