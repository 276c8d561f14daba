"""Exact double-description conversions on known polytopes."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from occupoly.dd import facet_enumeration, primitive, vertex_enumeration


def satisfies(point, facets, equations):
    for a, b in facets:
        if sum(x * y for x, y in zip(a, point)) > b:
            return False
    for a, b in equations:
        if sum(x * y for x, y in zip(a, point)) != b:
            return False
    return True


def test_primitive_scaling():
    assert primitive((Fraction(2, 3), Fraction(-4, 3))) == (1, -2)
    assert primitive((Fraction(0), Fraction(5))) == (0, 1)
    assert primitive((Fraction(-2), Fraction(-4))) == (-1, -2)


def test_unit_square():
    pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    facets, equations = facet_enumeration(pts)
    assert equations == []
    assert len(facets) == 4
    expected = {
        ((-1, 0), 0),
        ((0, -1), 0),
        ((1, 0), 1),
        ((0, 1), 1),
    }
    assert {(a, b) for a, b in facets} == expected


def test_cube_roundtrip():
    pts = list(itertools.product((0, 1), repeat=3))
    facets, equations = facet_enumeration(pts)
    assert len(facets) == 6 and not equations
    A = [a for a, _ in facets]
    b = [rhs for _, rhs in facets]
    verts, rays = vertex_enumeration(A, b)
    assert not rays
    assert sorted(verts) == sorted(tuple(map(Fraction, p)) for p in pts)


def test_simplex_lower_dimensional():
    """The probability simplex in R^3 lives in a hyperplane: DD reports the
    equation and the three edge facets."""
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    facets, equations = facet_enumeration(pts)
    assert len(equations) == 1
    a, b = equations[0]
    scale = sum(a)
    assert all(x * 3 == scale for x in a) and b * 3 == scale * 1
    assert len(facets) == 3


def test_cross_polytope():
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    facets, equations = facet_enumeration(pts)
    assert not equations
    assert len(facets) == 8
    for signs in itertools.product((1, -1), repeat=3):
        assert (signs, 1) in facets or (tuple(signs), Fraction(1)) in facets


def test_interior_points_are_redundant():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1), (2, 1)]
    facets, _ = facet_enumeration(pts)
    assert len(facets) == 3


def test_cone_input():
    """A point plus two rays gives a wedge: two facets, no equations."""
    facets, equations = facet_enumeration([(0, 0)], rays=[(1, 0), (1, 1)])
    assert not equations
    assert len(facets) == 2
    # containment of a deep interior direction
    assert satisfies((5, 2), facets, equations)
    assert not satisfies((-1, 0), facets, equations)
    assert not satisfies((1, 2), facets, equations)


def test_vertex_enumeration_unbounded():
    # x >= 0, y >= 0, x + y >= 1: three extreme points is wrong, two plus rays
    A = [(-1, 0), (0, -1), (-1, -1)]
    b = [0, 0, -1]
    verts, rays = vertex_enumeration(A, b)
    assert sorted(verts) == [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))]
    assert sorted(rays) == [(0, 1), (1, 0)]


def test_vertex_enumeration_rejects_lines():
    with pytest.raises(ValueError):
        vertex_enumeration([(1, 0)], [1])  # y is free


@pytest.mark.parametrize("trial", range(12))
def test_random_hull_roundtrip(trial):
    """facet -> vertex roundtrip reproduces the extreme points of random
    integer point clouds (scipy's ConvexHull is the float oracle)."""
    from scipy.spatial import ConvexHull

    rng = np.random.default_rng(500 + trial)
    dim = int(rng.integers(2, 4))
    pts = rng.integers(-6, 7, size=(int(rng.integers(dim + 2, 12)), dim))
    pts = np.unique(pts, axis=0)
    try:
        hull = ConvexHull(pts.astype(float))
    except Exception:
        pytest.skip("degenerate float hull")
    facets, equations = facet_enumeration([tuple(map(int, p)) for p in pts])
    if equations:
        pytest.skip("point cloud not full-dimensional")
    A = [a for a, _ in facets]
    b = [rhs for _, rhs in facets]
    verts, rays = vertex_enumeration(A, b)
    assert not rays
    expected = sorted(
        tuple(Fraction(int(x)) for x in pts[i]) for i in hull.vertices
    )
    assert sorted(verts) == expected
    # every input point satisfies the H-form
    for p in pts:
        assert satisfies(tuple(int(x) for x in p), facets, equations)
