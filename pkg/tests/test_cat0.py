import math
from fractions import Fraction

import pytest

import oracles
from syslab import eplane
from syslab.cat0 import (ModifiedDisk, PolyPath, euclidean_diagonal,
                         modified_disk, nearest_simplex_on_segment, shortest_path)
from syslab.chardisk import CharDisk, boundary_cycle, extract_flat_disk
from syslab.directed import ThickInterval, layers, thick_intervals
from syslab.errors import NoCrossing, OutsideDomain
from syslab.exact import ExactScalar, PlanePoint, on_segment


def ES(p, q=0):
    return ExactScalar(Fraction(p)) + ExactScalar(0, 1) * ExactScalar(Fraction(q))


def P(x, y, qx=0, qy=0):
    return PlanePoint(ES(x, qx), ES(y, qy))


S = Fraction(1, 4)  # shorthand: y coordinates come in multiples of sqrt(3)/4


def pt(x, y_quarters):
    """Point with y = y_quarters * sqrt(3)/4."""
    return PlanePoint(ES(x), ES(0, y_quarters * S))


@pytest.fixture(scope="module")
def hexagon_disk():
    c = eplane.window((2, 1), 12)
    ls = layers(c, (0, 0), (4, 2))
    interval = thick_intervals(ls)[0]
    return c, extract_flat_disk(c, boundary_cycle(c, interval, ls))


@pytest.fixture(scope="module")
def strip_disk():
    c = eplane.window((3, 1), 14)
    ls = layers(c, (0, 0), (6, 2))
    intervals = thick_intervals(ls)
    assert [(iv.j, iv.k) for iv in intervals] == [(2, 6)]
    return c, extract_flat_disk(c, boundary_cycle(c, intervals[0], ls))


def test_modified_disk_hexagon(hexagon_disk):
    _, disk = hexagon_disk
    m = modified_disk(disk)
    assert m.start == pt(Fraction(7, 4), 1)          # midpoint of (1,1)-(2,0)
    assert m.goal == pt(Fraction(13, 4), 3)          # midpoint of (2,2)-(3,1)
    assert m.v_prime[1] == pt(Fraction(9, 4), 3)     # quarter of (1,2)-(3,0)
    assert m.w_prime[1] == pt(Fraction(11, 4), 1)
    assert len(m.polygon) == 4 and not m.degenerate


def test_modified_disk_strip(strip_disk):
    _, disk = strip_disk
    m = modified_disk(disk)
    assert m.start == pt(Fraction(7, 4), 1)
    assert m.goal == pt(Fraction(21, 4), 3)
    assert m.v_prime[1] == pt(Fraction(9, 4), 3)
    assert m.v_prime[2] == pt(Fraction(13, 4), 3)
    assert m.w_prime[2] == pt(Fraction(15, 4), 1)
    assert len(m.polygon) == 8


def test_modified_disk_translated(hexagon_disk):
    c = eplane.window((7, 6), 12)
    ls = layers(c, (5, 5), (9, 7))
    disk = extract_flat_disk(c, boundary_cycle(c, thick_intervals(ls)[0], ls))
    m = modified_disk(disk)
    shift = eplane.embed((5, 5)) - eplane.embed((0, 0))
    base = modified_disk(hexagon_disk[1])
    assert m.start == base.start + shift
    assert m.goal == base.goal + shift


def test_shortest_path_convex_is_straight(hexagon_disk):
    _, disk = hexagon_disk
    m = modified_disk(disk)
    path = shortest_path(m)
    assert len(path) == 2
    # the segment passes exactly through the disk center embed(2,1)
    assert on_segment(eplane.embed((2, 1)), path.points[0], path.points[1])
    assert path.length() == pytest.approx(math.sqrt(3.0), abs=1e-12)


def test_shortest_path_endpoints_validated(hexagon_disk):
    _, disk = hexagon_disk
    m = modified_disk(disk)
    with pytest.raises(OutsideDomain):
        shortest_path(m, start=pt(0, 0))


def _l_shaped_domain():
    polygon = (P(0, 0), P(3, 0), P(3, 1), P(1, 1), P(1, 3), P(0, 3))
    return ModifiedDisk(None, ThickInterval(0, 2), polygon,
                        P(3, Fraction(1, 2)), P(Fraction(1, 2), 3),
                        (), (), False)


def test_shortest_path_bends_at_reflex_vertex():
    m = _l_shaped_domain()
    path = shortest_path(m)
    assert [p for p in path.points] == [m.start, P(1, 1), m.goal]
    oracle = oracles.grid_dijkstra_path_length(m.polygon, m.start, m.goal, pitch=0.02)
    assert abs(path.length() - oracle) / oracle <= 1e-6


def test_shortest_path_degenerate_domain():
    seg = ModifiedDisk(None, ThickInterval(0, 2),
                       (P(0, 0), P(1, 0), P(2, 0)), P(0, 0), P(2, 0),
                       (), (), True)
    path = shortest_path(seg)
    assert path.points == (P(0, 0), P(2, 0))
    from syslab.errors import DegenerateDomain
    overhang = ModifiedDisk(None, ThickInterval(0, 2),
                            (P(0, 0), P(1, 0), P(3, 0)), P(0, 0), P(2, 0),
                            (), (), True)
    with pytest.raises(DegenerateDomain):
        shortest_path(overhang)


def test_diagonal_hexagon(hexagon_disk):
    _, disk = hexagon_disk
    m = modified_disk(disk)
    diag = euclidean_diagonal(disk, shortest_path(m))
    assert [s.verts for s in diag.simplices] == [((2, 1),)]


def test_diagonal_strip(strip_disk):
    _, disk = strip_disk
    m = modified_disk(disk)
    alpha = shortest_path(m)
    diag = euclidean_diagonal(disk, alpha)
    assert [s.verts for s in diag.simplices] == [((2, 1),), ((3, 1),), ((4, 1),)]


def test_diagonal_no_crossing(hexagon_disk):
    _, disk = hexagon_disk
    stub = PolyPath((pt(Fraction(7, 4), 1), pt(2, 1)))
    with pytest.raises(NoCrossing):
        euclidean_diagonal(disk, stub)


def _diamond_disk():
    """Hand-built flat disk with layer thickness up to 4 (profile 1,2,3,4,3,2,1)."""
    region = frozenset((a, b) for a in range(5) for b in range(5)
                       if 1 <= a + b <= 7)
    v_labels = ((0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4))
    w_labels = ((1, 0), (2, 0), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3))
    surface = {v: v for v in region}
    return CharDisk(ThickInterval(0, 6), region, {v: v for v in region},
                    v_labels, w_labels, (surface,), 0)


def test_diagonal_barycenter_hit_yields_edge():
    """A crossing exactly on an edge barycenter returns the edge itself."""
    disk = _diamond_disk()
    alpha = PolyPath((pt(Fraction(3, 4), 1),
                      pt(Fraction(13, 4), 3),     # exactly arc 5/2 on layer 3
                      pt(Fraction(21, 4), 7)))
    diag = euclidean_diagonal(disk, alpha)
    assert [s.verts for s in diag.simplices] == [
        ((1, 1),), ((2, 1),), ((2, 2), (3, 1)), ((3, 2),), ((3, 3),)]


def test_diagonal_symmetric_diamond():
    """The straight symmetric path meets even layers at vertices and the
    centers of odd-thickness layers exactly on their middle-edge barycenters."""
    disk = _diamond_disk()
    mid = modified_disk(disk)
    diag = euclidean_diagonal(disk, shortest_path(mid))
    assert [s.verts for s in diag.simplices] == [
        ((1, 1),), ((1, 2), (2, 1)), ((2, 2),), ((2, 3), (3, 2)), ((3, 3),)]


def test_nearest_decision_rule():
    assert nearest_simplex_on_segment(Fraction(3, 10), 2) == (0,)
    assert nearest_simplex_on_segment(Fraction(3, 2), 2) == (1, 2)
    assert nearest_simplex_on_segment(Fraction(1, 2), 2) == (0, 1)
    assert nearest_simplex_on_segment(Fraction(5, 4), 2) == (1,)
    assert nearest_simplex_on_segment(Fraction(2), 2) == (2,)
    assert nearest_simplex_on_segment(Fraction(17, 10), 2) == (2,)


def test_decisions_stable_under_float_reevaluation(strip_disk):
    """Exact crossing decisions agree with an extended-precision recomputation."""
    import numpy as np
    _, disk = strip_disk
    m = modified_disk(disk)
    alpha = shortest_path(m)
    assert len(alpha.points) == 2
    j, k = disk.interval.j, disk.interval.k
    long = np.longdouble
    ax, ay = (long(float(c)) for c in alpha.points[0])
    bx, by = (long(float(c)) for c in alpha.points[-1])
    diag = euclidean_diagonal(disk, alpha)
    for i in range(j + 1, k):
        v, w = disk.layer_segment(i)
        vx, vy = (long(float(c)) for c in eplane.embed(v))
        wx, wy = (long(float(c)) for c in eplane.embed(w))
        det = (bx - ax) * (wy - vy) - (by - ay) * (wx - vx)
        t = ((vx - ax) * (wy - vy) - (vy - ay) * (wx - vx)) / det
        px, py = ax + t * (bx - ax), ay + t * (by - ay)
        arc = np.hypot(px - vx, py - vy)
        seg_len = eplane.lattice_distance(v, w)
        # no edge-barycenter ambiguity on this instance: the arc is far from
        # every half-integer, so rounding reproduces the exact decision
        assert abs(arc - np.floor(arc) - 0.5) > 1e-6
        float_vertex = int(np.rint(arc))
        exact = diag.simplex_at(i)
        assert exact.verts == ((v[0] + (w[0] - v[0]) // seg_len * float_vertex,
                                v[1] + (w[1] - v[1]) // seg_len * float_vertex),)


def test_path_length_beats_random_polylines(hexagon_disk):
    import random
    _, disk = hexagon_disk
    m = modified_disk(disk)
    best = shortest_path(m).length()
    rng = random.Random(0)
    for _ in range(25):
        # random detour through a point of the domain boundary
        corner = m.polygon[rng.randrange(len(m.polygon))]
        detour = PolyPath((m.start, corner, m.goal)).length()
        assert best <= detour + 1e-9
