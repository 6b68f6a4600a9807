import pytest

from chirotrop.fan import check_two_determined, face_lattice
from chirotrop.subsets import PlueckerVector


def units(*subsets):
    return [PlueckerVector.unit(3, 6, s) for s in subsets]


def test_single_ray():
    fan = face_lattice([[0]], units((1, 2, 3)))
    assert fan.f_vector == (1,)
    assert fan.two_determined and check_two_determined(fan)


def test_single_simplicial_facet_has_only_itself():
    # faces come from intersections of facets, so one facet yields just itself
    rays = units((1, 2, 3), (1, 2, 4), (1, 3, 5))
    fan = face_lattice([[0, 1, 2]], rays)
    assert fan.f_vector == (0, 0, 1)
    assert fan.facet_dims == [3]


def test_two_triangles_sharing_an_edge():
    rays = units((1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 6))
    fan = face_lattice([[0, 1, 2], [0, 1, 3]], rays)
    assert fan.faces_by_dim == {2: [(0, 1)], 3: [(0, 1, 2), (0, 1, 3)]}
    assert fan.is_pure(3)
    assert check_two_determined(fan)


def test_pairwise_vertices_only():
    # four triangles meeting pairwise in single vertices
    rays = units((1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 6), (3, 5, 6), (1, 4, 6), (2, 5, 6))
    facets = [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 6]]
    fan = face_lattice(facets, rays)
    assert fan.faces_by_dim[1] == [(0,), (1,), (2,), (3,), (4,)]
    assert fan.two_determined and check_two_determined(fan)


def test_non_two_determined_detected():
    # pairwise intersections are {0,1}, {0,2}, {0,4}; the vertex {0} only
    # appears in the second round, as an intersection of three facets
    rays = units((1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 6), (3, 5, 6), (1, 4, 6), (2, 5, 6))
    facets = [[0, 1, 2, 3], [0, 1, 4, 5], [0, 2, 4, 6]]
    fan = face_lattice(facets, rays)
    assert (0,) in fan.faces_by_dim[1]
    assert not fan.two_determined
    assert not check_two_determined(fan)


def test_all_faces_and_dimension():
    rays = units((1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 6))
    fan = face_lattice([[0, 1, 2], [0, 1, 3]], rays)
    assert fan.dimension == 3
    assert fan.all_faces() == [(0, 1), (0, 1, 2), (0, 1, 3)]


def test_dependent_rays_counted_by_rank():
    # a, b and a + b span only a 2-dimensional cone
    a = PlueckerVector.unit(3, 6, (1, 2, 3))
    b = PlueckerVector.unit(3, 6, (1, 2, 4))
    fan = face_lattice([[0, 1, 2]], [a, b, a + b])
    assert fan.facet_dims == [2]
    assert fan.f_vector == (0, 1)
