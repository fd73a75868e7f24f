# -*- coding: utf-8 -*-
import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from rzk_index.exceptions import EmptyIndexSet, GhostVertex, VertexOutOfRange
from rzk_index.extended_nat import Finite, INFINITY
from rzk_index.simplicial_core import (
    SimplicialComplex,
    boundary_simplex,
    cone,
    full_simplex,
    restricted_delta,
    restricted_flag,
)
from rzk_index.vertex_set import VertexSet, compress

from tests import utils as tu


def test_facets_are_reduced_to_an_antichain():
    complex_ = SimplicialComplex.from_facets(3, [[1, 2], [1], [2, 3], [2]])
    assert complex_.sorted_facets() == [VertexSet.of(1, 2), VertexSet.of(2, 3)]
    assert complex_.dim == 1
    assert complex_.vertices == VertexSet.full(3)


def test_from_faces_keeps_maximal_members(boundary_triangle):
    complex_ = SimplicialComplex.from_faces(3, boundary_triangle.faces)
    assert complex_ == boundary_triangle
    assert hash(complex_) == hash(boundary_triangle)


def test_ghost_vertex_is_rejected():
    with pytest.raises(GhostVertex) as exc_info:
        SimplicialComplex.from_facets(4, [[1, 2], [2, 3]])
    assert exc_info.value.vertex == 4
    allowed = SimplicialComplex.from_facets(4, [[1, 2], [2, 3]], allow_ghosts=True)
    assert allowed.vertices == VertexSet.of(1, 2, 3)


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        SimplicialComplex.from_facets(2, [[1, 3]])


@pytest.mark.parametrize("m", [0, 64])
def test_vertex_count_out_of_range(m):
    with pytest.raises(ValueError):
        SimplicialComplex(m, [])


def test_boundary_of_the_one_simplex_has_a_ghost():
    with pytest.raises(GhostVertex):
        boundary_simplex(1)


def test_f_vector(boundary_triangle, four_cycle, glued_triangles):
    assert boundary_triangle.f_vector() == (1, 3, 3)
    assert four_cycle.f_vector() == (1, 4, 4)
    assert glued_triangles.f_vector() == (1, 4, 5, 2)
    assert full_simplex(3).f_vector() == (1, 3, 3, 1)


@pytest.mark.parametrize(
    "facets,minimal",
    [
        ([[1, 2], [2, 3], [1, 3]], [[1, 2, 3]]),
        ([[1, 2], [2, 3], [3, 4], [1, 4]], [[1, 3], [2, 4]]),
        ([[1, 2, 3], [2, 3, 4]], [[1, 4]]),
        ([[1], [2], [3]], [[1, 2], [1, 3], [2, 3]]),
    ],
)
def test_minimal_non_faces(facets, minimal):
    complex_ = SimplicialComplex.from_facets(
        max(max(f) for f in facets), facets
    )
    assert complex_.minimal_non_faces() == frozenset(
        VertexSet.from_vertices(face) for face in minimal
    )


def test_full_simplex_has_no_non_faces():
    simplex = full_simplex(4)
    assert simplex.is_full_simplex()
    assert simplex.minimal_non_faces() == frozenset()
    assert simplex.delta_number() == INFINITY
    assert simplex.flag_number() == INFINITY
    assert simplex.is_flag()
    assert simplex.is_q_neighborly(10)


def test_large_full_simplex_needs_no_face_walk():
    simplex = full_simplex(40)
    assert simplex.minimal_non_faces() == frozenset()
    assert simplex.delta_number() == INFINITY
    assert simplex.flag_number() == INFINITY
    assert simplex.is_q_neighborly(39)
    assert simplex.f_vector()[-1] == 1
    assert sum(simplex.f_vector()) == 2 ** 40


def test_mixed_orders(mixed_orders):
    orders = mixed_orders.minimal_non_face_orders()
    assert orders == frozenset([2, 3])
    assert len(mixed_orders.minimal_non_faces()) == 8
    assert mixed_orders.delta_number() == Finite(1)
    assert mixed_orders.flag_number() == Finite(2)
    assert not mixed_orders.is_flag()


@pytest.mark.parametrize(
    "fixture,delta,flag",
    [
        ("boundary_triangle", Finite(2), Finite(2)),
        ("four_cycle", Finite(1), Finite(1)),
        ("glued_triangles", Finite(1), Finite(1)),
        ("path4", Finite(1), Finite(1)),
    ],
)
def test_delta_and_flag(request, fixture, delta, flag):
    complex_ = request.getfixturevalue(fixture)
    assert complex_.delta_number() == delta
    assert complex_.flag_number() == flag
    assert complex_.delta_number() <= complex_.flag_number()


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_boundary_simplex_is_neighborly_up_to_its_dimension(m):
    sphere = boundary_simplex(m)
    assert sphere.delta_number() == Finite(m - 1)
    assert sphere.flag_number() == Finite(m - 1)
    assert sphere.is_q_neighborly(m - 2)
    assert not sphere.is_q_neighborly(m - 1)


def test_neighborly_rejects_negative_q(four_cycle):
    with pytest.raises(ValueError):
        four_cycle.is_q_neighborly(-1)


def test_full_subcomplex_relabels(glued_triangles):
    restricted = glued_triangles.full_subcomplex(VertexSet.of(1, 2, 4))
    assert restricted.vertices == (1, 2, 4)
    assert restricted.complex.m == 3
    # {1, 4} is missing, so only the edges {1, 2} and {2, 4} remain
    assert restricted.complex.sorted_facets() == [
        VertexSet.of(1, 2),
        VertexSet.of(2, 3),
    ]
    assert restricted.relabel(VertexSet.of(2, 3)) == VertexSet.of(2, 4)


def test_full_subcomplex_errors(four_cycle):
    with pytest.raises(EmptyIndexSet):
        four_cycle.full_subcomplex(VertexSet.empty())
    with pytest.raises(VertexOutOfRange):
        four_cycle.full_subcomplex(VertexSet.of(1, 5))


def test_restricted_numbers_are_memoized(four_cycle):
    diagonal_pair = VertexSet.of(1, 3)
    assert restricted_delta(four_cycle, diagonal_pair) == Finite(1)
    assert restricted_flag(four_cycle, diagonal_pair) == Finite(1)
    assert restricted_delta(four_cycle, VertexSet.of(1, 2)) == INFINITY


def test_cone_adds_an_apex(boundary_triangle):
    coned = cone(boundary_triangle)
    assert coned.m == 4
    assert coned.dim == 2
    assert VertexSet.of(1, 2, 4) in coned.facets
    assert coned.delta_number() == boundary_triangle.delta_number()


@st.composite
def complexes(draw, max_m=6):
    m = draw(st.integers(min_value=1, max_value=max_m))
    facets = draw(
        st.lists(
            st.sets(st.integers(min_value=1, max_value=m), min_size=1),
            max_size=6,
        )
    )
    facets = [sorted(f) for f in facets] + [[v] for v in range(1, m + 1)]
    return m, facets


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_numbers_match_brute_force(data):
    m, facets = data
    complex_ = SimplicialComplex.from_facets(m, facets)
    faces = tu.brute_faces(m, facets)
    assert complex_.faces == frozenset(faces)
    assert {face.bits for face in complex_.minimal_non_faces()} == (
        tu.brute_minimal_non_faces(m, faces)
    )
    assert complex_.delta_number() == tu.brute_delta(m, faces)
    assert complex_.flag_number() == tu.brute_flag(m, faces)


@settings(max_examples=60, deadline=None)
@given(complexes(), st.data())
def test_nested_full_subcomplexes_compose(data, choices):
    m, facets = data
    complex_ = SimplicialComplex.from_facets(m, facets)
    outer_set = choices.draw(
        st.sets(st.integers(min_value=1, max_value=m), min_size=1), label="I"
    )
    inner_set = choices.draw(
        st.sets(st.sampled_from(sorted(outer_set)), min_size=1), label="J"
    )
    outer_bits = VertexSet.from_vertices(outer_set).bits
    inner_bits = VertexSet.from_vertices(inner_set).bits

    outer = complex_.full_subcomplex(VertexSet(outer_bits))
    nested = outer.complex.full_subcomplex(VertexSet(compress(inner_bits, outer_bits)))
    direct = complex_.full_subcomplex(VertexSet(inner_bits))
    assert nested.complex == direct.complex
    assert tuple(outer.vertices[v - 1] for v in nested.vertices) == direct.vertices
