#!/usr/bin/env python3
"""Tests for TC, TR and the chain homotopy"""

import pytest
from hypothesis import given

from src.combinatorics.permutations import relabel
from src.combinatorics.surjections import Surjection
from src.prisms.prism import fundamental_simplex, maximal_simplices
from src.simplicial.bar_construction import EChain, Simplex, boundary_e, enumerate_simplices
from src.surjection_complex.differential import XChain, boundary_x, enumerate_surjections
from src.transfers.homotopy import get_simplex_map, homotopy_chain, homotopy_h, identity_map
from src.transfers.transfer_maps import compositions, table_reduction, tc, tc_surjection, tc_tr, tr
from src.utils.errors import DegenerateError, DegreeMismatchError, InvalidInputError
from tests.strategies import acting_on, simplices, surjections


def echain(*terms):
    """echain((coefficient, (word, ...)), ...)"""
    simplices_ = [(Simplex.from_words(words), c) for c, words in terms]
    first = simplices_[0][0]
    return EChain(first.arity, first.dimension, simplices_)


def xchain(arity, *terms):
    words = [(Surjection(word, arity), c) for c, word in terms]
    return XChain(arity, words[0][0].degree, words)


class TestTC:
    def test_worked_example(self, u12312):
        expected = echain((1, ((1, 2, 3), (2, 3, 1), (3, 1, 2))), (-1, ((1, 2, 3), (1, 3, 2), (3, 1, 2))))
        assert tc_surjection(u12312) == expected

    def test_degree_zero_is_identity(self, surj, simplex):
        assert tc_surjection(surj(3, 1, 2)) == EChain.of(simplex((3, 1, 2)))

    def test_degenerate_path_dropped(self, surj):
        assert tc_surjection(surj(2, 1, 2, 1)) == echain((1, ((2, 1), (1, 2), (2, 1))))

    def test_fundamental_simplex_has_coefficient_one(self):
        for d in range(4):
            for u in enumerate_surjections(3, d):
                assert tc_surjection(u).coefficient(fundamental_simplex(u)) == 1

    @pytest.mark.parametrize("arity, max_degree", [(2, 4), (3, 3)])
    def test_chain_map(self, arity, max_degree):
        for d in range(max_degree + 1):
            for u in enumerate_surjections(arity, d):
                c = XChain.of(u)
                assert tc(boundary_x(c)) == boundary_e(tc(c))

    @given(acting_on(surjections(max_degree=2)))
    def test_equivariance(self, pair):
        u, w = pair
        assert tc_surjection(relabel(w, u)) == relabel(w, tc_surjection(u))


class TestTR:
    def test_compositions(self):
        assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
        assert list(compositions(3, 3)) == [(1, 1, 1)]
        assert list(compositions(2, 3)) == []

    def test_fundamental_simplex(self, simplex, u12312):
        assert table_reduction(simplex((1, 2, 3), (2, 3, 1), (3, 1, 2))) == XChain.of(u12312)

    def test_other_maximal_simplex(self, simplex):
        assert table_reduction(simplex((1, 2, 3), (1, 3, 2), (3, 1, 2))).is_zero

    def test_diagonal_simplex(self, simplex):
        expected = xchain(3, (1, (1, 3, 2, 1)), (1, (1, 2, 3, 2)))
        assert table_reduction(simplex((1, 2, 3), (3, 2, 1))) == expected

    @pytest.mark.parametrize("words, image", [
        (((1, 2), (2, 1)), (1, 2, 1)),
        (((1, 2), (2, 1), (1, 2)), (1, 2, 1, 2)),
        (((2, 3, 1),), (2, 3, 1)),
    ])
    def test_single_term(self, simplex, words, image):
        assert table_reduction(simplex(*words)) == XChain.of(Surjection(image, max(image)))

    def test_rejects_degenerate(self, simplex):
        with pytest.raises(DegenerateError):
            table_reduction(simplex((1, 2), (1, 2)))

    @pytest.mark.parametrize("arity, max_dimension", [(2, 4), (3, 2)])
    def test_chain_map(self, arity, max_dimension):
        for n in range(max_dimension + 1):
            for s in enumerate_simplices(arity, n):
                c = EChain.of(s)
                assert boundary_x(tr(c)) == tr(boundary_e(c))

    @given(acting_on(simplices(max_dimension=2)))
    def test_equivariance(self, pair):
        s, w = pair
        assert table_reduction(relabel(w, s)) == relabel(w, table_reduction(s))


class TestRetraction:
    @pytest.mark.parametrize("arity, max_degree", [(1, 0), (2, 3), (3, 3)])
    def test_tr_after_tc_is_identity(self, arity, max_degree):
        for d in range(max_degree + 1):
            for u in enumerate_surjections(arity, d):
                assert tr(tc_surjection(u)) == XChain.of(u)

    @pytest.mark.parametrize("arity, degree", [(2, 2), (3, 1), (3, 2)])
    def test_characterization(self, arity, degree):
        for u in enumerate_surjections(arity, degree):
            fundamental = fundamental_simplex(u)
            for m in maximal_simplices(u):
                if m.is_degenerate:
                    continue
                expected = XChain.of(u) if m.simplex == fundamental else XChain.zero(arity, degree)
                assert table_reduction(m.simplex) == expected


class TestHomotopy:
    def test_vertex(self, simplex):
        assert homotopy_h(simplex((2, 1, 3))).is_zero

    def test_fixed_edge(self, simplex):
        assert homotopy_h(simplex((1, 2), (2, 1))).is_zero

    def test_diagonal_edge(self, simplex):
        expected = echain((1, ((1, 2, 3), (1, 3, 2), (3, 2, 1))))
        s = simplex((1, 2, 3), (3, 2, 1))
        assert homotopy_h(s) == expected
        c = EChain.of(s)
        assert c + boundary_e(homotopy_h(s)) + homotopy_chain(boundary_e(c)) == tc_tr(s)

    @pytest.mark.parametrize("arity, max_dimension", [(2, 4), (3, 1)])
    def test_homotopy_identity(self, arity, max_dimension):
        for n in range(max_dimension + 1):
            for s in enumerate_simplices(arity, n):
                c = EChain.of(s)
                assert tc_tr(s) == c + boundary_e(homotopy_h(s)) + homotopy_chain(boundary_e(c))

    def test_identity_map_gives_zero_homotopy(self):
        for s in enumerate_simplices(3, 2):
            assert homotopy_h(s, identity_map).is_zero

    def test_degree_mismatch(self, simplex):
        def collapse(s):
            return EChain.vertex(s.vertices[0])
        with pytest.raises(DegreeMismatchError):
            homotopy_h(simplex((1, 2), (2, 1)), collapse)

    def test_named_maps(self):
        assert get_simplex_map('tc-tr') is tc_tr
        assert get_simplex_map('identity') is identity_map
        with pytest.raises(InvalidInputError):
            get_simplex_map('shift')
