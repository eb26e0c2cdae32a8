import pytest

from toricgit.cones import polytope_lattice_points
from toricgit.quotient import identify_wps, quotient_polytope
from toricgit.wps import (
    WeightVector,
    default_degree,
    is_well_formed,
    make_weights,
    wps_action,
    wps_polytope,
)


def test_weight_validation():
    with pytest.raises(ValueError):
        make_weights((2, 4))
    with pytest.raises(ValueError):
        make_weights((0, 1))
    with pytest.raises(ValueError):
        make_weights(())


def test_display_names():
    assert make_weights((1, 1)).display_name() == "CP_1"
    assert make_weights((1, 1, 1)).display_name() == "CP_2"
    assert make_weights((1, 1, 2)).display_name() == "CP_{1,1,2}"


def test_well_formedness():
    assert is_well_formed(make_weights((1, 1, 2)))
    assert not is_well_formed(make_weights((1, 2, 2)))
    assert not is_well_formed(make_weights((1, 2)))
    assert is_well_formed(make_weights((1, 2, 2, 3)))  # triples all coprime


def test_default_degrees():
    assert default_degree((1, 1, 2)) == 2
    assert default_degree((1, 1)) == 1
    assert default_degree((1, 1, 1)) == 1
    assert default_degree((1, 2, 3)) == 6


def test_wps_action_values():
    act = wps_action(make_weights((1, 1, 2)))
    assert act.matrix == ((1, 1, 2),)
    assert act.alpha == (2,)
    assert act.variables == ("X", "Y", "Z")
    p1 = wps_action(make_weights((1, 1)))
    assert p1.matrix == ((1, 1),) and p1.alpha == (1,)
    p2 = wps_action(make_weights((1, 1, 1)))
    assert p2.matrix == ((1, 1, 1),) and p2.alpha == (1,)


def test_wps_polytope_values():
    tri = wps_polytope(make_weights((1, 1, 2)))
    assert tri.is_full_dimensional() and tri.dim == 2
    assert len(polytope_lattice_points(tri)) == 4
    seg = wps_polytope(make_weights((1, 1)))
    assert seg.dim == 1 and len(polytope_lattice_points(seg)) == 2
    simplex = wps_polytope(make_weights((1, 1, 1)))
    assert len(polytope_lattice_points(simplex)) == 3


def test_wps_polytope_consistency_with_pipeline():
    for w in [(1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 3)]:
        wv = make_weights(w)
        assert wps_polytope(wv) == quotient_polytope(wps_action(wv))


def test_full_dimensionality_family():
    import itertools

    for k in (1, 2, 3):
        for w in itertools.combinations_with_replacement(range(1, 7), k + 1):
            from math import gcd

            g = 0
            for x in w:
                g = gcd(g, x)
            if g != 1:
                continue
            poly = wps_polytope(make_weights(w))
            assert poly.dim == k and poly.is_full_dimensional()


def test_reduction_isomorphisms_identified():
    """Non-well-formed weights identify as their reduced form."""
    seg = wps_polytope(make_weights((1, 2)))
    assert identify_wps(seg, max_weight=6)[0] == (1, 1)
    plane = wps_polytope(make_weights((1, 2, 2)))
    assert identify_wps(plane, max_weight=6)[0] == (1, 1, 1)
