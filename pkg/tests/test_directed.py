import random

import pytest

import oracles
from syslab import eplane, samples
from syslab.directed import (Layer, directed_geodesic, layers, map_geodesic,
                             thick_intervals)
from syslab.errors import (BoundaryUnsafe, ConstructionFailed, MalformedProfile)


def verts(geo):
    return [s.verts for s in geo]


def test_directed_geodesic_22(window42):
    assert verts(directed_geodesic(window42, (0, 0), (2, 2))) == [
        ((0, 0),), ((0, 1), (1, 0)), ((1, 1),), ((1, 2), (2, 1)), ((2, 2),)]


def test_directed_geodesic_collinear(window42):
    assert verts(directed_geodesic(window42, (0, 0), (3, 0))) == [
        ((0, 0),), ((1, 0),), ((2, 0),), ((3, 0),)]


def test_directed_geodesic_42(window42):
    assert verts(directed_geodesic(window42, (0, 0), (4, 2))) == [
        ((0, 0),), ((0, 1), (1, 0)), ((1, 1),), ((1, 2), (2, 1)), ((2, 2),),
        ((3, 2),), ((4, 2),)]


def test_uniqueness_oracle_sample(window42):
    rng = random.Random(9)
    for _ in range(12):
        x = (rng.randint(-2, 4), rng.randint(-2, 3))
        y = (rng.randint(-2, 4), rng.randint(-2, 3))
        if x == y or eplane.lattice_distance(x, y) > 5:
            continue
        found = oracles.enumerate_directed_geodesics(window42, x, y)
        assert len(found) == 1
        constructed = tuple(frozenset(s.verts)
                            for s in directed_geodesic(window42, x, y))
        assert found[0] == constructed


def test_construction_fails_on_octahedron():
    octa = samples.octahedron()
    # antipodal vertices: the projection is a non-clique 4-cycle
    with pytest.raises(ConstructionFailed):
        directed_geodesic(octa, 0, 1)


def test_margin_rule_blocks_boundary_pairs():
    c = eplane.window((0, 0), 4)
    with pytest.raises(BoundaryUnsafe):
        directed_geodesic(c, (-4, 0), (4, 0))


def test_any_selection_is_geodesic(window42):
    rng = random.Random(3)
    for _ in range(10):
        x = (rng.randint(-2, 4), rng.randint(-2, 3))
        y = (rng.randint(-2, 4), rng.randint(-2, 3))
        if eplane.lattice_distance(x, y) > 6:
            continue
        geo = directed_geodesic(window42, x, y)
        pick = [rng.choice(s.verts) for s in geo]
        assert oracles.is_geodesic(window42, pick)


def test_layers_42(window42):
    ls = layers(window42, (0, 0), (4, 2))
    assert ls.thickness_profile() == (0, 1, 1, 2, 1, 1, 0)
    assert [layer.thin for layer in ls] == [True, True, True, False, True, True, True]
    # sphere intersections contain the directed simplices
    for layer in ls:
        assert set(layer.sigma.verts) <= layer.vertices
        assert set(layer.tau.verts) <= layer.vertices


def test_layers_collinear_all_thin(window42):
    ls = layers(window42, (0, 0), (3, 0))
    assert all(layer.thickness == 0 for layer in ls)


def test_layers_diagonal_thin(window42):
    ls = layers(window42, (0, 0), (2, 2))
    assert all(layer.thin for layer in ls)


def test_layer_symmetry(window42):
    fwd = layers(window42, (0, 0), (4, 2))
    bwd = layers(window42, (4, 2), (0, 0))
    n = fwd.n
    for i in range(n + 1):
        assert fwd[i].vertices == bwd[n - i].vertices


def _profile(thicknesses):
    return [Layer(i, frozenset(), None, None, t) for i, t in enumerate(thicknesses)]


def test_thick_intervals_from_profiles():
    assert thick_intervals(_profile([0, 1, 1, 2, 1, 1, 0])) == \
        [type(thick_intervals(_profile([0, 1, 2, 1, 0]))[0])(2, 4)]
    assert thick_intervals(_profile([0, 1, 1, 1, 0])) == []
    got = thick_intervals(_profile([0, 1, 2, 2, 1, 0]))
    assert [(iv.j, iv.k) for iv in got] == [(1, 4)]


def test_thick_intervals_42(window42):
    ls = layers(window42, (0, 0), (4, 2))
    assert [(iv.j, iv.k) for iv in thick_intervals(ls)] == [(2, 4)]


def test_malformed_profile():
    with pytest.raises(MalformedProfile):
        thick_intervals(_profile([0, 2, 1, 0]))


def test_equivariance(window42):
    big = eplane.window((0, 0), 14)
    g = eplane.glide(1, 1)
    rot = eplane.rotation60(2)
    for iso in (g, rot, eplane.translation(-2, 3)):
        geo = directed_geodesic(big, (0, 0), (4, 2))
        mapped = map_geodesic(iso, geo)
        direct = directed_geodesic(big, iso((0, 0)), iso((4, 2)))
        assert verts(mapped) == verts(direct)


def test_fellow_traveller_bound(window42):
    big = eplane.window((0, 0), 14)
    rng = random.Random(13)
    isos = [eplane.glide(1, 1), eplane.translation(1, 0), eplane.rotation60(1),
            eplane.translation(2, -1)]
    for _ in range(25):
        h = rng.choice(isos)
        x = (rng.randint(-4, 4), rng.randint(-4, 4))
        y = (rng.randint(-4, 4), rng.randint(-4, 4))
        if x == y:
            continue
        bound = 3 * max(eplane.lattice_distance(x, h(x)),
                        eplane.lattice_distance(y, h(y))) + 1
        for simplex in directed_geodesic(big, x, y):
            for s in simplex:
                assert eplane.lattice_distance(s, h(s)) <= bound
