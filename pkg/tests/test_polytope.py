import numpy as np
import pytest

from matroid_csm.services.catalog import octahedron_subdivisions
from matroid_csm.services.matroid import Matroid, bits
from matroid_csm.services.polytope import (
    MatroidPolytope,
    Subdivision,
    all_faces,
    check_beta_valuation,
    check_csm_valuation,
    contains_point,
    describe_face,
    f_vector,
    face_dimension,
    face_in_direction,
    interior_faces,
    product_subdivision,
    splits_along_components,
    validate_subdivision,
    valuation_defect,
)

SPLITS = sorted(octahedron_subdivisions().items())


def test_octahedron_and_triangle_f_vectors(u24):
    assert f_vector(u24) == (6, 12, 8, 1)
    assert f_vector(Matroid.uniform(2, 3)) == (3, 3, 1)


def test_polytope_arrays(u24):
    polytope = MatroidPolytope(u24)
    assert polytope.vertices.shape == (6, 4)
    assert polytope.dim == 3
    assert polytope.barycenter_numerator.tolist() == [3, 3, 3, 3]
    assert len(polytope.edges()) == 12
    for direction in polytope.edge_directions():
        assert sorted(direction.tolist()) == [-1, 0, 0, 1]


def test_face_dimension_counts_components():
    square = Matroid.uniform(1, 2).direct_sum(Matroid.uniform(1, 2))
    assert face_dimension(square) == 2
    assert face_dimension(Matroid.uniform(3, 3)) == 0


def test_face_in_direction(u24):
    face = face_in_direction(u24, (bits([0]),))
    assert len(face.bases) == 3
    assert face_dimension(face) == 2
    assert all_faces(u24)[0].matroid == u24


def test_contains_point(u24):
    assert contains_point(u24, np.array([1, 1, 1, 1]), 2)
    assert not contains_point(u24, np.array([2, 0, 0, 0]), 1)
    assert not contains_point(u24, np.array([1, 1, 1, 1]), 1)


@pytest.mark.parametrize("name,split", SPLITS)
def test_octahedron_splits_are_valid(name, split):
    assert validate_subdivision(split)
    faces = interior_faces(split)
    assert sorted(face.dim for face in faces) == [2, 3, 3]


@pytest.mark.parametrize("name,split", SPLITS)
def test_csm_is_valuative_on_octahedron_splits(name, split):
    assert check_csm_valuation(split, 0)
    assert check_csm_valuation(split, 1)
    assert check_beta_valuation(split)
    assert valuation_defect(split, 0).is_empty


def test_trivial_subdivision(k4):
    trivial = Subdivision.trivial(k4)
    assert validate_subdivision(trivial)
    assert [face.matroid for face in interior_faces(trivial)] == [k4]
    assert all(check_csm_valuation(trivial, k) for k in range(3))


def test_missing_vertex_breaks_coverage(u24):
    pyramid = Matroid(4, u24.bases - {bits([2, 3])})
    check = validate_subdivision(Subdivision(u24, (pyramid,)))
    assert not check
    assert check.clause == "coverage"


def test_nested_cells_break_intersection(u24):
    pyramid = Matroid(4, u24.bases - {bits([2, 3])})
    check = validate_subdivision(Subdivision(u24, (pyramid, u24)))
    assert not check
    assert check.clause == "intersection"


def test_cells_must_have_full_dimension(u24):
    square = Matroid(4, frozenset({bits([0, 2]), bits([0, 3]), bits([1, 2]), bits([1, 3])}))
    check = validate_subdivision(Subdivision(u24, (square,)))
    assert check.clause == "cells"


def test_cells_must_lie_in_parent(u24):
    triangle_and_loop = Matroid.uniform(2, 3).direct_sum(Matroid.uniform(0, 1))
    check = validate_subdivision(Subdivision(triangle_and_loop, (u24,)))
    assert not check
    assert check.clause == "cells"


def test_product_subdivision_splits_along_components(u24):
    split = SPLITS[0][1]
    product = product_subdivision(split, Subdivision.trivial(Matroid.uniform(1, 2)))
    assert len(product.cells) == 2
    assert splits_along_components(product)
    assert validate_subdivision(product)


def test_describe_face(u24):
    assert describe_face(all_faces(u24)[0]) == "dim 3, 6 vertices, components {0,1,2,3}"


@pytest.mark.parametrize("name,split", SPLITS)
def test_cell_faces_lie_in_parent_faces(name, split):
    parent = split.parent
    chains = [(subset,) for subset in range(1, parent.ground)]
    chains += [
        (lower, upper)
        for lower in range(1, parent.ground)
        for upper in range(1, parent.ground)
        if lower & upper == lower and lower != upper
    ]
    for cell in split.cells:
        for chain in chains:
            cell_face = face_in_direction(cell, chain).bases
            parent_face = face_in_direction(parent, chain).bases
            if cell_face & parent_face:
                assert cell_face <= parent_face, (name, chain)
