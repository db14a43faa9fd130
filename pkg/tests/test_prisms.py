#!/usr/bin/env python3
"""Tests for prisms, lattice paths and coverage"""

import pytest
from hypothesis import given

from src.combinatorics.permutations import Permutation
from src.combinatorics.surjections import Surjection, WordKind
from src.prisms.coverage import common_subsequences, covering_surjection, intersection_outside_faces
from src.prisms.prism import (
    enumerate_maximal_paths,
    fundamental_simplex,
    is_subsequence,
    maximal_path_count,
    maximal_simplices,
    orientation_sign,
    path_sign,
    path_to_simplex,
    path_vertices,
    prism_face,
    prism_faces,
    prism_simplices,
    simplex_in_prism,
    vertex_permutation,
    vertex_table,
)
from src.simplicial.bar_construction import enumerate_simplices
from src.surjection_complex.differential import enumerate_surjections
from src.utils.errors import (
    CoordOutOfRangeError,
    DegenerateError,
    FactorIsPointError,
    InvalidInputError,
    NoSuchOccurrenceError,
    PathInvalidError,
    ResourceExceededError,
)
from tests.strategies import surjections


class TestVertexMap:
    @pytest.mark.parametrize("coords, image", [
        ((0, 0, 0), (1, 2, 3)),
        ((1, 0, 0), (2, 3, 1)),
        ((0, 1, 0), (1, 3, 2)),
        ((1, 1, 0), (3, 1, 2)),
    ])
    def test_vertices_of_12312(self, u12312, coords, image):
        assert vertex_permutation(u12312, coords) == Permutation(image)

    def test_vertex_table_order(self, u12312):
        table = vertex_table(u12312)
        assert [coords for coords, _ in table] == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]

    @pytest.mark.parametrize("coords", [(0, 0, 1), (2, 0, 0), (0, 0)])
    def test_out_of_range(self, u12312, coords):
        with pytest.raises(CoordOutOfRangeError):
            vertex_permutation(u12312, coords)

    def test_permutation_prism_is_a_point(self):
        u = Surjection((2, 3, 1), 3)
        assert vertex_table(u) == [((0, 0, 0), Permutation((2, 3, 1)))]


class TestMaximalSimplices:
    def test_paths(self, u12312):
        assert enumerate_maximal_paths(u12312) == [(1, 2), (2, 1)]
        assert maximal_path_count(u12312) == 2
        assert path_vertices((2, 1), 3) == [(0, 0, 0), (0, 1, 0), (1, 1, 0)]

    def test_fundamental_simplex(self, u12312, simplex):
        assert fundamental_simplex(u12312) == simplex((1, 2, 3), (2, 3, 1), (3, 1, 2))
        assert path_to_simplex(u12312, (2, 1)) == simplex((1, 2, 3), (1, 3, 2), (3, 1, 2))

    def test_invalid_path(self, u12312):
        with pytest.raises(PathInvalidError):
            path_to_simplex(u12312, (1, 1))
        with pytest.raises(PathInvalidError):
            path_to_simplex(u12312, (1, 2, 3))

    def test_signs(self, surj):
        assert path_sign(()) == 1
        assert path_sign((2, 1)) == -1
        assert path_sign((1, 2, 1)) == -1
        assert orientation_sign(surj(1, 2, 3, 1, 2)) == 1
        assert orientation_sign(surj(2, 1, 2, 1)) == -1

    def test_records_flag_degenerate_images(self, surj):
        records = maximal_simplices(surj(2, 1, 2, 1))
        assert [(m.path, m.sign, m.is_degenerate) for m in records] == [((1, 2), 1, True), ((2, 1), -1, False)]

    def test_resource_guard(self, surj):
        with pytest.raises(ResourceExceededError):
            enumerate_maximal_paths(surj(1, 2, 1, 2, 1, 2, 3, 1, 2, 3), limit=5)

    @pytest.mark.parametrize("arity", [1, 2, 3])
    @pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
    def test_fundamental_simplex_nondegenerate(self, arity, degree):
        for u in enumerate_surjections(arity, degree):
            s = fundamental_simplex(u)
            assert not s.is_degenerate
            assert s.dimension == degree
            paths = enumerate_maximal_paths(u)
            assert len(paths) == maximal_path_count(u)
            assert all(path_to_simplex(u, p).dimension == degree for p in paths)


class TestFaces:
    def test_valid_face(self, u12312):
        f = prism_face(u12312, 1, 0)
        assert f.is_valid and f.surjection == Surjection((2, 3, 1, 2), 3)

    def test_degenerate_face(self, surj):
        f = prism_face(surj(1, 2, 1, 2), 2, 0)
        assert f.kind is WordKind.DEGENERATE and f.surjection is None

    def test_point_factor(self, u12312):
        with pytest.raises(FactorIsPointError):
            prism_face(u12312, 3, 0)

    def test_missing_occurrence(self, u12312):
        with pytest.raises(NoSuchOccurrenceError):
            prism_face(u12312, 1, 2)
        with pytest.raises(NoSuchOccurrenceError):
            prism_face(u12312, 4, 0)

    def test_all_faces(self, surj):
        faces = prism_faces(surj(1, 2, 1, 2))
        assert [(f.k, f.x) for f in faces] == [(1, 0), (1, 1), (2, 0), (2, 1)]
        assert [f.is_valid for f in faces] == [True, False, False, True]

    @given(surjections(max_degree=3))
    def test_face_prisms_lie_inside(self, u):
        for f in prism_faces(u):
            if f.is_valid:
                for p in enumerate_maximal_paths(f.surjection):
                    assert simplex_in_prism(path_to_simplex(f.surjection, p), u)


class TestContainment:
    def test_is_subsequence(self):
        assert is_subsequence((1, 2), (1, 3, 2))
        assert not is_subsequence((2, 1), (1, 2))
        assert is_subsequence((), (1,))

    def test_simplex_in_prism(self, simplex, surj):
        s = simplex((1, 2, 3), (3, 2, 1))
        assert simplex_in_prism(s, surj(1, 2, 3, 2, 1))
        assert not simplex_in_prism(s, surj(1, 2, 3, 1, 2))
        assert not simplex_in_prism(s, surj(1, 2, 1))

    def test_order_matters(self, simplex, surj):
        assert simplex_in_prism(simplex((1, 2), (2, 1)), surj(1, 2, 1))
        assert not simplex_in_prism(simplex((2, 1), (1, 2)), surj(1, 2, 1))

    @given(surjections(max_degree=2))
    def test_subword_prisms_lie_inside(self, u):
        # dropping an occurrence of a repeated letter keeps a subword
        for f in prism_faces(u):
            if f.is_valid:
                assert is_subsequence(f.surjection.word, u.word)


class TestCoverage:
    def test_known_cover(self, simplex, surj):
        assert covering_surjection(simplex((1, 2, 3), (3, 2, 1)), 3) == surj(1, 2, 3, 2, 1)

    def test_vertex_covers_itself(self, simplex, surj):
        assert covering_surjection(simplex((2, 1, 3)), 3) == surj(2, 1, 3)

    def test_fundamental_simplex_is_covered(self, u12312):
        assert simplex_in_prism(fundamental_simplex(u12312), covering_surjection(fundamental_simplex(u12312), 2))

    def test_not_found(self, simplex):
        assert covering_surjection(simplex((1, 2, 3), (3, 2, 1)), 1) is None

    def test_invalid(self, simplex):
        with pytest.raises(DegenerateError):
            covering_surjection(simplex((1, 2), (1, 2)), 3)
        with pytest.raises(InvalidInputError):
            covering_surjection(simplex((1, 2)), 0)

    def test_every_small_simplex_is_covered(self):
        for n in range(2):
            for s in enumerate_simplices(3, n):
                assert covering_surjection(s, 3) is not None


class TestIntersections:
    def test_prism_simplices(self, surj, simplex):
        assert prism_simplices(surj(1, 2, 1)) == (simplex((1, 2)), simplex((1, 2), (2, 1)), simplex((2, 1)))
        assert prism_simplices(surj(3, 1, 2)) == (simplex((3, 1, 2)),)

    def test_common_subsequences(self, surj):
        assert common_subsequences(surj(1, 2, 1), surj(2, 1, 2)) == [surj(1, 2), surj(2, 1)]
        assert common_subsequences(surj(1, 2, 1, 2), surj(2, 1, 2, 1)) == [
            surj(1, 2), surj(2, 1), surj(1, 2, 1), surj(2, 1, 2)]
        assert common_subsequences(surj(1, 2), surj(1, 2, 3)) == []

    def test_edges_meet_in_vertices(self, surj, simplex):
        u, v = surj(1, 2, 1), surj(2, 1, 2)
        assert not simplex_in_prism(simplex((1, 2), (2, 1)), v)
        assert intersection_outside_faces(u, v) == []

    def test_shared_edge_lies_in_a_common_face(self, surj, simplex):
        u, v = surj(1, 2, 1, 2), surj(2, 1, 2, 1)
        edge = simplex((1, 2), (2, 1))
        assert simplex_in_prism(edge, u) and simplex_in_prism(edge, v)
        assert simplex_in_prism(edge, surj(1, 2, 1))
        assert intersection_outside_faces(u, v) == []

    @pytest.mark.parametrize("arity, max_degree", [(2, 3), (3, 1)])
    def test_prisms_meet_along_faces(self, arity, max_degree):
        words = [u for d in range(max_degree + 1) for u in enumerate_surjections(arity, d)]
        for u in words:
            for v in words:
                assert intersection_outside_faces(u, v) == [], (u, v)

    @given(surjections(min_arity=3, max_degree=2), surjections(min_arity=3, max_degree=2))
    def test_arity_three_pairs(self, u, v):
        assert intersection_outside_faces(u, v) == []


class TestPathOrder:
    def test_paths_are_lexicographic(self, surj):
        assert enumerate_maximal_paths(surj(1, 2, 1, 2, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]

    def test_point_prism_has_the_empty_path(self, surj):
        assert enumerate_maximal_paths(surj(2, 3, 1)) == [()]
