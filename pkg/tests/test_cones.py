from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgit.cones import (
    cone_contains,
    cone_intersection,
    dual_cone,
    faces,
    is_strongly_convex,
    lattice_equivalent,
    make_cone,
    make_fan,
    normal_fan,
    polytope_from_points,
    polytope_lattice_points,
    validate_fan,
)
from toricgit.errors import DimensionMismatch, NotStronglyConvex

gen2d = st.tuples(st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4))


def test_dual_cone_examples():
    orthant = make_cone(2, [(1, 0), (0, 1)])
    assert dual_cone(orthant) == orthant
    c = make_cone(2, [(1, 0), (1, 2)])
    assert set(dual_cone(c).generators) == {(0, 1), (2, -1)}
    ray = make_cone(2, [(1, 0)])
    assert set(dual_cone(ray).generators) == {(1, 0), (0, 1), (0, -1)}


def _same_cone(a, b):
    """Set equality through mutual generator containment (any cones)."""
    return all(cone_contains(b, g) for g in a.generators) and all(
        cone_contains(a, g) for g in b.generators
    )


@settings(max_examples=100, deadline=None)
@given(st.lists(gen2d, min_size=1, max_size=4))
def test_double_duality(gens):
    gens = [g for g in gens if g != (0, 0)]
    if not gens:
        return
    c = make_cone(2, gens)
    dd = dual_cone(dual_cone(c))
    assert _same_cone(dd, c)
    if is_strongly_convex(c):
        # extreme rays are unique for pointed cones: canonical equality
        assert dd == c


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=-3, max_value=3),
            st.integers(min_value=-3, max_value=3),
            st.integers(min_value=-3, max_value=3),
        ),
        min_size=1,
        max_size=4,
    )
)
def test_double_duality_3d(gens):
    gens = [g for g in gens if g != (0, 0, 0)]
    if not gens:
        return
    c = make_cone(3, gens)
    dd = dual_cone(dual_cone(c))
    assert _same_cone(dd, c)
    if is_strongly_convex(c):
        assert dd == c


def test_strong_convexity():
    assert is_strongly_convex(make_cone(2, [(1, 0), (0, 1)]))
    assert not is_strongly_convex(make_cone(2, [(1, 0), (-1, 0), (0, 1)], irredundant=True))
    assert is_strongly_convex(make_cone(2, [(1, 0), (1, 2)]))
    assert is_strongly_convex(make_cone(2, []))


def test_faces_counts_and_containment():
    zero = make_cone(2, [])
    assert [f.generators for f in faces(zero)] == [()]
    orthant = make_cone(2, [(1, 0), (0, 1)])
    fs = faces(orthant)
    assert len(fs) == 4
    for f in fs:
        assert is_strongly_convex(f)
        for g in f.generators:
            assert cone_contains(orthant, g)
    slanted = make_cone(2, [(1, 0), (1, 2)])
    assert len(faces(slanted)) == 4
    with pytest.raises(NotStronglyConvex):
        faces(make_cone(2, [(1, 0), (-1, 0)], irredundant=True))


def _fan_from_maximal(dim, maximal):
    cones = {}
    for c in maximal:
        for f in faces(c):
            cones[f.generators] = f
    return make_fan(dim, cones.values())


def test_validate_fan_p1():
    fan = _fan_from_maximal(1, [make_cone(1, [(1,)]), make_cone(1, [(-1,)])])
    assert validate_fan(fan) == []


def test_validate_fan_overlap_violation():
    fan = make_fan(
        2,
        [make_cone(2, [(1, 0), (0, 1)]), make_cone(2, [(1, 1), (-1, 1)])],
    )
    kinds = {v.kind for v in validate_fan(fan)}
    assert "intersection_not_common_face" in kinds or "missing_face" in kinds


def test_validate_fan_cp112():
    rays = [(1, 0), (0, 1), (-1, -2)]
    maximal = [make_cone(2, [rays[i], rays[(i + 1) % 3]]) for i in range(3)]
    fan = _fan_from_maximal(2, maximal)
    assert validate_fan(fan) == []


def test_normal_fan_examples():
    seg = polytope_from_points(1, [(0,), (2,)])
    assert set(normal_fan(seg).rays()) == {(1,), (-1,)}
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    nf = normal_fan(tri)
    assert set(nf.rays()) == {(1, 0), (0, 1), (-1, -2)}
    assert validate_fan(nf) == []
    square = polytope_from_points(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    nfs = normal_fan(square)
    assert set(nfs.rays()) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert validate_fan(nfs) == []


def test_cone_intersection_is_common_face_for_fans():
    a = make_cone(2, [(1, 0), (0, 1)])
    b = make_cone(2, [(0, 1), (-1, -2)])
    inter = cone_intersection(a, b)
    assert inter.generators == ((0, 1),)


def test_polytope_from_points_drops_non_vertices():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1), (1, 0)])
    assert len(tri.vertices) == 3
    assert polytope_lattice_points(tri) == [(0, 0), (0, 1), (1, 0), (2, 0)]


def test_lattice_equivalent_identity_and_translation():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    w = lattice_equivalent(tri, tri)
    assert w is not None and w.scale == 1
    shifted = polytope_from_points(2, [(5, 7), (7, 7), (5, 8)])
    w2 = lattice_equivalent(tri, shifted)
    assert w2 is not None
    assert w2.linear == ((1, 0), (0, 1)) and w2.translation == (5, 7)


def test_lattice_equivalent_symmetric_with_inverse_witness():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    image = polytope_from_points(2, [(0, 0), (2, 2), (-1, 0)])  # U=[[1,1],[-0,1]]-ish image
    w = lattice_equivalent(tri, image)
    back = lattice_equivalent(image, tri)
    assert (w is None) == (back is None)
    if w is not None:
        inv = w.inverse()
        for v in image.vertices:
            mapped = inv.apply(v)
            assert mapped in tri.vertices


def test_lattice_equivalent_preserves_point_count():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    sheared = polytope_from_points(2, [(0, 0), (2, 2), (0, 1)])
    w = lattice_equivalent(tri, sheared)
    if w is not None:
        assert len(polytope_lattice_points(tri)) == len(polytope_lattice_points(sheared))


def test_lattice_equivalent_rational_scaling():
    half = polytope_from_points(2, [(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2))])
    moved = polytope_from_points(2, [(3, 5), (Fraction(7, 2), 5), (3, Fraction(11, 2))])
    w = lattice_equivalent(half, moved)
    assert w is not None and w.scale == 2


def test_lattice_equivalent_dimension_mismatch():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    seg = polytope_from_points(1, [(0,), (1,)])
    with pytest.raises(DimensionMismatch):
        lattice_equivalent(tri, seg)


def test_inequivalent_polytopes():
    tri = polytope_from_points(2, [(0, 0), (2, 0), (0, 1)])
    square = polytope_from_points(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert lattice_equivalent(tri, square) is None
    simplex = polytope_from_points(2, [(0, 0), (1, 0), (0, 1)])
    assert lattice_equivalent(tri, simplex) is None
