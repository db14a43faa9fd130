#!/usr/bin/env python3
"""
Verification suites for PRISMA
Each suite enumerates small bases into a list of items and checks every item independently.
Items and check functions are module level so they can be shipped to worker processes.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from src.combinatorics.permutations import all_permutations, compose, relabel
from src.combinatorics.surjections import Surjection
from src.filtration.complexity import cell_descriptor, cell_leq, in_filtration, max_complexity
from src.prisms.coverage import covering_surjection, intersection_outside_faces
from src.prisms.prism import (
    enumerate_maximal_paths,
    fundamental_simplex,
    maximal_path_count,
    maximal_simplices,
    path_to_simplex,
    prism_faces,
    simplex_in_prism,
    vertex_permutation,
    vertex_table,
)
from src.simplicial.bar_construction import EChain, Simplex, boundary_e, enumerate_simplices
from src.surjection_complex.differential import XChain, boundary_x, enumerate_surjections
from src.transfers.homotopy import homotopy_chain, homotopy_h, identity_map
from src.transfers.transfer_maps import tc, tc_surjection, tc_tr, table_reduction, tr
from src.workbench.homology import homology

Failure = Dict[str, str]


@dataclass(frozen=True)
class CheckContext:
    """Per-run settings every check receives"""

    sign_rule: str = 'cellular'
    limit: Optional[int] = None


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    items: Callable[[Any], List]
    check: Callable[[Any, CheckContext], List[Failure]]


def failure(item: Any, expected: Any, actual: Any) -> Failure:
    return {'input': str(item), 'expected': str(expected), 'actual': str(actual)}


def _compare(item: Any, expected: Any, actual: Any) -> List[Failure]:
    return [] if expected == actual else [failure(item, expected, actual)]


def _e_range(config, capped: bool, extra: int = 0) -> List:
    simplices = []
    for r in range(1, config.max_arity + 1):
        top = config.max_degree + extra
        if capped and r >= 4:
            top = min(top, 2)
        for n in range(top + 1):
            simplices.extend(enumerate_simplices(r, n, config.max_basis_size))
    return simplices


def _x_range(config, max_arity: int, top: int) -> List:
    surjections = []
    for r in range(1, max_arity + 1):
        for d in range(top + 1):
            surjections.extend(enumerate_surjections(r, d, config.max_basis_size))
    return surjections


# δ∘δ = 0

def d2_e_items(config) -> List:
    return _e_range(config, capped=True, extra=1)


def d2_e_check(s, context: CheckContext) -> List[Failure]:
    twice = boundary_e(boundary_e(EChain.of(s)))
    return [] if twice.is_zero else [failure(s, 0, twice)]


def d2_x_items(config) -> List:
    return _x_range(config, config.max_arity, config.max_degree + 1)


def d2_x_check(u, context: CheckContext) -> List[Failure]:
    twice = boundary_x(boundary_x(XChain.of(u), context.sign_rule), context.sign_rule)
    return [] if twice.is_zero else [failure(u, 0, twice)]


# chain maps and retraction

def chainmap_tc_items(config) -> List:
    return _x_range(config, config.max_arity, config.max_degree)


def chainmap_tc_check(u, context: CheckContext) -> List[Failure]:
    c = XChain.of(u)
    return _compare(u, boundary_e(tc(c)), tc(boundary_x(c, context.sign_rule)))


def chainmap_tr_items(config) -> List:
    return _e_range(config, capped=True)


def chainmap_tr_check(s, context: CheckContext) -> List[Failure]:
    c = EChain.of(s)
    return _compare(s, tr(boundary_e(c)), boundary_x(tr(c), context.sign_rule))


def retraction_items(config) -> List:
    return _x_range(config, config.max_arity, config.max_degree)


def retraction_check(u, context: CheckContext) -> List[Failure]:
    return _compare(u, XChain.of(u), tr(tc_surjection(u)))


# homotopy

def homotopy_items(config) -> List:
    simplices = []
    for r in range(1, min(config.max_arity, 3) + 1):
        top = config.max_degree + 1 if r <= 2 else config.max_degree - 1
        for n in range(top + 1):
            simplices.extend(enumerate_simplices(r, n, config.max_basis_size))
    return simplices


def homotopy_check(s, context: CheckContext) -> List[Failure]:
    c = EChain.of(s)
    failures = []
    for T in (tc_tr, identity_map):
        expected = T(s)
        actual = c + boundary_e(homotopy_h(s, T)) + homotopy_chain(boundary_e(c), T)
        failures.extend(_compare(s, expected, actual))
    return failures


# table reduction on prisms

def characterization_items(config) -> List:
    return _x_range(config, min(config.max_arity, 3), config.max_degree)


def characterization_check(u, context: CheckContext) -> List[Failure]:
    fundamental = fundamental_simplex(u)
    failures = []
    for m in maximal_simplices(u, context.limit):
        if m.is_degenerate:
            continue
        expected = XChain.of(u) if m.simplex == fundamental else XChain.zero(u.arity, u.degree)
        failures.extend(_compare(f"{u} on {m.simplex}", expected, table_reduction(m.simplex)))
    return failures


# symmetric group action

def equivariance_items(config) -> List:
    """('x', u, transfers) / ('e', s, transfers) / ('identity', w); transfers only below the top degree"""
    r_max = min(config.max_arity, 3)
    items = [('x', u, u.degree < config.max_degree) for u in _x_range(config, r_max, config.max_degree)]
    for r in range(1, r_max + 1):
        for n in range(config.max_degree + 1):
            items.extend(('e', s, n < config.max_degree)
                         for s in enumerate_simplices(r, n, config.max_basis_size))
    for r in range(1, config.max_arity + 2):
        items.extend(('identity', w, True) for w in all_permutations(r))
    return items


def _coords_after(w, coords):
    """Coordinates of the same prism vertex once value k is renamed w(k)"""
    moved = [0] * len(coords)
    for k, xk in enumerate(coords, start=1):
        moved[w(k) - 1] = xk
    return tuple(moved)


def _degree_zero_check(w) -> List[Failure]:
    u = Surjection.from_permutation(w)
    vertex = Simplex((w,))
    return (_compare(('tc', w), EChain.of(vertex), tc_surjection(u))
            + _compare(('tr', w), XChain.of(u), table_reduction(vertex)))


def equivariance_check(item, context: CheckContext) -> List[Failure]:
    kind, obj, transfers = item
    if kind == 'identity':
        return _degree_zero_check(obj)

    if kind == 'e':
        chain = EChain.of(obj)
        boundary = boundary_e
    else:
        chain = XChain.of(obj)
        boundary = lambda c: boundary_x(c, context.sign_rule)  # noqa: E731
    group = all_permutations(obj.arity)
    image = boundary(chain)
    failures = []
    for w in group:
        moved = relabel(w, obj)
        failures.extend(_compare(('boundary', w, obj), relabel(w, image), boundary(chain.relabeled(w))))
        for v in group:
            failures.extend(_compare(('action', v, w, obj), relabel(compose(v, w), obj), relabel(v, moved)))
        if kind == 'x':
            for coords, vertex in vertex_table(obj):
                failures.extend(_compare(('vertex', w, obj, coords), vertex.relabeled(w),
                                         vertex_permutation(moved, _coords_after(w, coords))))
            if transfers:
                failures.extend(_compare(('tc', w, obj), relabel(w, tc_surjection(obj)), tc_surjection(moved)))
        elif transfers:
            failures.extend(_compare(('tr', w, obj), relabel(w, table_reduction(obj)), table_reduction(moved)))
    return failures


# complexity filtration

def filtration_items(config) -> List:
    r_max = min(config.max_arity, 3)
    items = [('x', u) for u in _x_range(config, r_max, config.max_degree)]
    for r in range(1, r_max + 1):
        for n in range(config.max_degree + 1):
            items.extend(('e', s) for s in enumerate_simplices(r, n, config.max_basis_size))
    return items


def _cell_failures(label: str, source, chain) -> List[Failure]:
    bound = cell_descriptor(source)
    return [failure((label, source), f"cell <= cell{source}", term)
            for term, _ in chain if not cell_leq(cell_descriptor(term), bound)]


def _nesting_failures(x) -> List[Failure]:
    level = max_complexity(x)
    failures = []
    if not in_filtration(x, level) or not in_filtration(x, level + 1):
        failures.append(failure(('exhaustive', x), f"in F_{level} and F_{level + 1}", 'missing'))
    if level > 1 and in_filtration(x, level - 1):
        failures.append(failure(('exhaustive', x), f"not in F_{level - 1}", 'present'))
    return failures


def filtration_check(item, context: CheckContext) -> List[Failure]:
    kind, obj = item
    failures = _nesting_failures(obj)
    if kind == 'x':
        c = XChain.of(obj)
        failures += _cell_failures('boundary_x', obj, boundary_x(c, context.sign_rule))
        failures += _cell_failures('tc', obj, tc(c))
        failures += _compare(('fundamental', obj), cell_descriptor(obj), cell_descriptor(fundamental_simplex(obj)))
    else:
        c = EChain.of(obj)
        failures += _cell_failures('boundary_e', obj, boundary_e(c))
        failures += _cell_failures('tr', obj, tr(c))
        failures += _cell_failures('homotopy', obj, homotopy_h(obj, tc_tr))
    return failures


# prism coverage and faces

def coverage_items(config) -> List:
    r = min(config.max_arity, 3)
    items = []
    for n in range(config.max_degree):
        items.extend(('cover', s, config.coverage_bound)
                     for s in enumerate_simplices(r, n, config.max_basis_size))
    items.extend(('prism', u, None) for u in _x_range(config, r, config.max_degree))
    meet_degree = min(config.max_degree, 2)
    items.extend(('meet', u, meet_degree) for u in _x_range(config, r, meet_degree) if u.arity >= 2)
    return items


def _prism_check(u, context: CheckContext) -> List[Failure]:
    failures = []
    fundamental = fundamental_simplex(u)
    if fundamental.is_degenerate:
        failures.append(failure(('fundamental', u), 'nondegenerate', fundamental))
    paths = enumerate_maximal_paths(u, context.limit)
    failures += _compare(('paths', u), maximal_path_count(u), len(paths))
    for face in prism_faces(u):
        if not face.is_valid:
            continue
        for p in enumerate_maximal_paths(face.surjection, context.limit):
            s = path_to_simplex(face.surjection, p)
            if not simplex_in_prism(s, u):
                failures.append(failure(('face', u, face.k, face.x), f"{s} inside the prism", 'outside'))
    return failures


def _meet_check(u, top: int, context: CheckContext) -> List[Failure]:
    failures = []
    for degree in range(top + 1):
        for v in enumerate_surjections(u.arity, degree, context.limit):
            for s in intersection_outside_faces(u, v, context.limit):
                failures.append(failure(('meet', u, v), f"{s} inside a common face", 'outside'))
    return failures


def coverage_check(item, context: CheckContext) -> List[Failure]:
    kind, obj, extra = item
    if kind == 'prism':
        return _prism_check(obj, context)
    if kind == 'meet':
        return _meet_check(obj, extra, context)
    u = covering_surjection(obj, extra, context.limit)
    return [] if u is not None else [failure(('cover', obj), f"a prism with multiplicities <= {extra}", None)]


# homology of filtration stages

def homology_items(config) -> List:
    items = []
    if config.max_arity >= 2:
        items.extend((2, config.max_degree, n) for n in list(range(1, config.max_degree + 2)) + [None])
    if config.max_arity >= 3:
        degree = min(config.max_degree, 1)
        items.extend((3, degree, n) for n in [1, 2, None])
    return items


def homology_check(item, context: CheckContext) -> List[Failure]:
    arity, max_degree, level = item
    x_groups = homology('x', arity, max_degree, level, context.limit)
    e_groups = homology('e', arity, max_degree, level, context.limit)
    failures = _compare(('homology', item), [str(g) for g in e_groups], [str(g) for g in x_groups])
    if level is None:
        acyclic = ['H_0 = Z'] + [f"H_{k} = 0" for k in range(1, max_degree + 1)]
        failures += _compare(('acyclic', 'x', item), acyclic, [str(g) for g in x_groups])
        failures += _compare(('acyclic', 'e', item), acyclic, [str(g) for g in e_groups])
    return failures


SUITES: Dict[str, Suite] = {suite.name: suite for suite in [
    Suite('d2_e', "δ∘δ = 0 on E(r)", d2_e_items, d2_e_check),
    Suite('d2_x', "δ∘δ = 0 on X(r)", d2_x_items, d2_x_check),
    Suite('chainmap_tc', "δ_E∘TC = TC∘δ_X", chainmap_tc_items, chainmap_tc_check),
    Suite('chainmap_tr', "δ_X∘TR = TR∘δ_E", chainmap_tr_items, chainmap_tr_check),
    Suite('retraction', "TR∘TC = Id", retraction_items, retraction_check),
    Suite('homotopy', "T = Id + δH + Hδ", homotopy_items, homotopy_check),
    Suite('characterization', "TR on maximal prism simplices", characterization_items, characterization_check),
    Suite('equivariance', "Σ_r acts compatibly", equivariance_items, equivariance_check),
    Suite('filtration', "maps preserve cells", filtration_items, filtration_check),
    Suite('coverage', "prisms cover W(r) and meet along faces", coverage_items, coverage_check),
    Suite('homology', "H(F_n X) = H(F_n E)", homology_items, homology_check),
]}

SUITE_NAMES = list(SUITES)
