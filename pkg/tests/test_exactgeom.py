"""Unit tests for the exact rational geometry kernel."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gitloci.errors import ResourceGuardError
from gitloci.exactgeom import (
    arrangement_cells,
    arrangement_rays,
    dot,
    lp_feasible,
    primitive_vector,
    zero_in_relative_interior,
    _cell_witnesses_by_lp,
    _planar_cell_witnesses,
)
from _oracles import sign_vector, zero_in_relative_interior_oracle

QUADRANT = ((1, 0), (0, 1))

relaxed = settings(max_examples=60, deadline=None, derandomize=True)


def test_primitive_vector_reduces_integers():
    assert primitive_vector((2, 4)) == (1, 2)
    assert primitive_vector((-3, 6, -9)) == (-1, 2, -3)
    assert primitive_vector((5,)) == (1,)


def test_primitive_vector_clears_denominators():
    assert primitive_vector((Fraction(1), Fraction(1, 4), Fraction(-5, 4))) == (4, 1, -5)
    assert primitive_vector((Fraction(2, 3), Fraction(4, 3))) == (1, 2)


def test_primitive_vector_rejects_zero():
    with pytest.raises(ValueError):
        primitive_vector((0, 0))


@relaxed
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5), st.integers(1, 7))
def test_primitive_vector_is_scale_invariant(coords, scale):
    if all(c == 0 for c in coords):
        return
    assert primitive_vector(coords) == primitive_vector([scale * c for c in coords])


def test_lp_feasible_no_strict_constraints_is_trivially_feasible():
    point = lp_feasible([], [(1, 1)], [], 2)
    assert point == (0, 0)


def test_lp_feasible_single_strict_inequality():
    point = lp_feasible([], [], [(1,)], 1)
    assert point is not None and point[0] > 0


def test_lp_feasible_zero_strict_row_is_infeasible():
    assert lp_feasible([], [], [(0, 0)], 2) is None


def test_lp_feasible_contradictory_system():
    assert lp_feasible([], [], [(1, 0), (-1, 0)], 2) is None
    assert lp_feasible([(1,)], [], [(1,)], 1) is None
    assert lp_feasible([], [(-1, -1)], [(1, 0), (0, 1)], 2) is None


def test_lp_feasible_open_quadrant_sector():
    point = lp_feasible([], [], [(1, 0), (0, 1), (1, -1)], 2)
    assert point is not None
    assert point[0] > 0 and point[1] > 0 and point[0] > point[1]


constraint_row = st.lists(st.integers(-4, 4), min_size=2, max_size=2).map(tuple)


@relaxed
@given(
    st.lists(constraint_row, max_size=3),
    st.lists(constraint_row, max_size=3),
    st.lists(constraint_row, min_size=1, max_size=3),
)
def test_lp_feasible_witness_satisfies_every_constraint(eqs, weak, strict):
    point = lp_feasible(eqs, weak, strict, 2)
    if point is None:
        return
    assert all(dot(row, point) == 0 for row in eqs)
    assert all(dot(row, point) >= 0 for row in weak)
    assert all(dot(row, point) > 0 for row in strict)


def test_zero_in_relative_interior_known_cases():
    assert zero_in_relative_interior([(-1, 1, 0), (1, -1, 0), (0, 0, 0)]) is True
    assert zero_in_relative_interior([(0, 0)]) is True
    assert zero_in_relative_interior([(1, 0)]) is False
    assert zero_in_relative_interior([(1, 0), (-1, 0), (0, 1)]) is False
    assert zero_in_relative_interior([(1, 1), (-1, 1), (0, -1)]) is True


def test_zero_in_relative_interior_rejects_empty_input():
    with pytest.raises(ValueError):
        zero_in_relative_interior([])


rational = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@relaxed
@given(st.integers(1, 3).flatmap(
    lambda d: st.lists(st.lists(rational, min_size=d, max_size=d).map(tuple), min_size=1, max_size=8)
))
def test_zero_in_relative_interior_matches_brute_force(points):
    assert zero_in_relative_interior(points) == zero_in_relative_interior_oracle(points)


def test_arrangement_rays_single_diagonal_line_in_quadrant():
    rays = arrangement_rays(((1, 1),), QUADRANT, 2)
    assert [r.point for r in rays] == [(0, 1), (1, 0)]


def test_arrangement_rays_interior_line_contributes_its_ray():
    rays = arrangement_rays(((1, -1),), QUADRANT, 2)
    assert [r.point for r in rays] == [(0, 1), (1, 0), (1, 1)]
    by_point = {r.point: r.zero_set for r in rays}
    assert by_point[(1, 1)] == frozenset({0})
    assert by_point[(1, 0)] == frozenset()


def test_arrangement_rays_zero_sets_are_recomputable():
    normals = ((1, -1), (2, -1), (1, 1))
    for ray in arrangement_rays(normals, QUADRANT, 2):
        expected = frozenset(i for i, n in enumerate(normals) if dot(n, ray.point) == 0)
        assert ray.zero_set == expected


def test_arrangement_cells_empty_arrangement_is_single_chamber_cell():
    cells = arrangement_cells((), QUADRANT, 2)
    assert [c.point for c in cells] == [(1, 1)]


def test_arrangement_cells_one_interior_line_gives_two_cells():
    cells = arrangement_cells(((1, -1),), QUADRANT, 2)
    assert [c.point for c in cells] == [(1, 2), (2, 1)]


def test_arrangement_cells_line_outside_chamber_cuts_nothing():
    cells = arrangement_cells(((1, 1),), QUADRANT, 2)
    assert len(cells) == 1


def test_arrangement_dimension_one():
    assert [r.point for r in arrangement_rays((), ((1,),), 1)] == [(1,)]
    assert [c.point for c in arrangement_cells((), ((1,),), 1)] == [(1,)]


def test_arrangement_cells_guard_trips():
    with pytest.raises(ResourceGuardError):
        arrangement_cells(((1, -1),), QUADRANT, 2, guard=1)
    with pytest.raises(ResourceGuardError):
        arrangement_cells(((1, -1, 0), (0, 1, -1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)), 3, guard=1)


interior_line = st.tuples(st.integers(1, 7), st.integers(-7, -1)).map(primitive_vector)


@relaxed
@given(st.sets(interior_line, min_size=1, max_size=6))
def test_generic_interior_lines_cut_quadrant_into_one_more_cell(lines):
    # Every normal (a, b) with a > 0 > b vanishes on a line through the open
    # quadrant, and distinct primitives are distinct lines, so k lines make
    # k + 1 sectors.
    cells = arrangement_cells(tuple(lines), QUADRANT, 2)
    assert len(cells) == len(lines) + 1


normal_2d = st.lists(st.integers(-5, 5), min_size=2, max_size=2).map(tuple)


@relaxed
@given(st.lists(normal_2d, max_size=5))
def test_planar_sweep_agrees_with_lp_enumeration(normals):
    nonzero = [n for n in normals if n != (0, 0)]
    planar = _planar_cell_witnesses(nonzero, QUADRANT)
    by_lp = _cell_witnesses_by_lp(nonzero, QUADRANT, 2, 10**6)
    key = lambda pts: {sign_vector(p, nonzero) for p in pts}
    assert key(planar) == key(by_lp)
    assert len(planar) == len(by_lp)


def test_cell_witnesses_avoid_every_boundary():
    normals = ((1, -1), (3, -1), (1, -3))
    for cell in arrangement_cells(normals, QUADRANT, 2):
        assert all(dot(n, cell.point) != 0 for n in normals)
        assert all(dot(wall, cell.point) > 0 for wall in QUADRANT)


def test_three_dimensional_cells_have_unique_sign_vectors():
    normals = ((1, -1, 0), (0, 1, -1), (1, 0, -1))
    chamber = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    cells = arrangement_cells(normals, chamber, 3)
    signatures = {sign_vector(c.point, normals) for c in cells}
    assert len(signatures) == len(cells)
    # The three planes x=y, y=z, x=z slice the open octant into the 3! = 6
    # orderings of the coordinates.
    assert len(cells) == 6


def test_three_dimensional_rays_lie_on_plane_intersections():
    normals = ((1, -1, 0), (0, 1, -1))
    chamber = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    rays = arrangement_rays(normals, chamber, 3)
    points = {r.point for r in rays}
    assert (1, 1, 1) in points
    for ray in rays:
        assert all(dot(wall, ray.point) >= 0 for wall in chamber)
        assert any(x != 0 for x in ray.point)
        expected = frozenset(i for i, n in enumerate(normals) if dot(n, ray.point) == 0)
        assert ray.zero_set == expected
