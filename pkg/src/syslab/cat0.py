"""The modified characteristic disk and exact shortest paths inside it.

The disk polygon is shrunk by half an edge along every layer segment; the
resulting domain carries the intrinsic (CAT(0)) path metric, and shortest
paths are computed on the visibility graph of the polygon with exact
side-of-line predicates. Only path-length comparisons use floating point,
at a declared tolerance far below the geometric feature size.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import eplane
from .chardisk import CharDisk
from .complexes import Simplex
from .directed import ThickInterval
from .errors import (DegenerateDomain, NoCrossing, OutsideDomain,
                     PreconditionViolated)
from .exact import (ExactScalar, PlanePoint, cross, dist_sq, dot, lerp,
                    on_segment, orient)

LENGTH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ModifiedDisk:
    """Polygonal domain obtained by shrinking each layer segment by 1/2.

    ``polygon`` walks the boundary loop without repeating the start point;
    the two shrunken endpoints coincide pairwise at the thin brackets, so
    the loop has 2*(k-j) - 2 corners. A degenerate domain (all corners
    collinear) is flagged and handled by reading paths off the segment.
    """

    disk: Optional[CharDisk]
    interval: ThickInterval
    polygon: Tuple[PlanePoint, ...]
    start: PlanePoint
    goal: PlanePoint
    v_prime: Tuple[PlanePoint, ...]   # per layer j..k
    w_prime: Tuple[PlanePoint, ...]
    degenerate: bool


@dataclass(frozen=True)
class PolyPath:
    """A polyline with exact vertices; its length is reported in floats."""

    points: Tuple[PlanePoint, ...]

    def length(self) -> float:
        total = 0.0
        for a, b in zip(self.points, self.points[1:]):
            total += math.sqrt(float(dist_sq(a, b)))
        return total

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class Diagonal:
    """Per-layer nearest simplices to the CAT(0) geodesic, in disk coordinates."""

    interval: ThickInterval
    simplices: Tuple[Simplex, ...]   # indices j+1 .. k-1

    def simplex_at(self, i: int) -> Simplex:
        return self.simplices[i - self.interval.j - 1]


def modified_disk(disk: CharDisk) -> ModifiedDisk:
    """Shrink every layer segment of the disk by 1/2 at both ends.

    End layers have unit segments, so their two shrunken points coincide at
    the midpoint, closing the polygon. All coordinates stay in Q[sqrt(3)].
    """
    j, k = disk.interval.j, disk.interval.k
    v_prime: List[PlanePoint] = []
    w_prime: List[PlanePoint] = []
    for i in range(j, k + 1):
        v, w = disk.layer_segment(i)
        t = eplane.lattice_distance(v, w)
        pv, pw = eplane.embed(v), eplane.embed(w)
        v_prime.append(lerp(pv, pw, Fraction(1, 2 * t)))
        w_prime.append(lerp(pw, pv, Fraction(1, 2 * t)))
    if v_prime[0] != w_prime[0] or v_prime[-1] != w_prime[-1]:
        raise PreconditionViolated("bracket layers of the interval are not unit edges")
    polygon = tuple(v_prime[:-1] + [v_prime[-1]] + list(reversed(w_prime[1:-1])))
    degenerate = _all_collinear(polygon)
    return ModifiedDisk(disk, disk.interval, polygon, v_prime[0], v_prime[-1],
                        tuple(v_prime), tuple(w_prime), degenerate)


def _all_collinear(points) -> bool:
    if len(points) < 3:
        return True
    a, b = points[0], points[1]
    return all(orient(a, b, p) == 0 for p in points[2:])


# -- point-in-polygon with exact predicates ------------------------------------


def _on_boundary(m: ModifiedDisk, p: PlanePoint) -> bool:
    poly = m.polygon
    return any(on_segment(p, poly[i], poly[(i + 1) % len(poly)])
               for i in range(len(poly)))


def _inside_or_on(m: ModifiedDisk, p: PlanePoint) -> bool:
    if _on_boundary(m, p):
        return True
    if m.degenerate:
        return False
    poly = m.polygon
    crossings = 0
    for i in range(len(poly)):
        a, b = poly[i], poly[(i + 1) % len(poly)]
        ay, by = a.y - p.y, b.y - p.y
        if (ay.sign() > 0) == (by.sign() > 0):
            continue
        # x coordinate of the crossing with the horizontal through p,
        # compared without division: sign of (x_int - p.x) * (b.y - a.y)^2
        dy = b.y - a.y
        xi_num = a.x * dy + (p.y - a.y) * (b.x - a.x) - p.x * dy
        if (xi_num * dy).sign() > 0:
            crossings += 1
    return crossings % 2 == 1


def _segment_inside(m: ModifiedDisk, p: PlanePoint, q: PlanePoint) -> bool:
    """Whether the closed segment pq stays inside the closed domain. Exact."""
    if p == q:
        return _inside_or_on(m, p)
    poly = m.polygon
    npoly = len(poly)
    for i in range(npoly):
        a, b = poly[i], poly[(i + 1) % npoly]
        o1, o2 = orient(p, q, a), orient(p, q, b)
        o3, o4 = orient(a, b, p), orient(a, b, q)
        if o1 * o2 < 0 and o3 * o4 < 0:
            return False  # proper crossing
    # collect split points: polygon vertices on pq and pq endpoints on edges
    d = q - p
    params = {ExactScalar(0), dot(d, d)}
    for i in range(npoly):
        a = poly[i]
        if on_segment(a, p, q):
            params.add(dot(a - p, d))
        b = poly[(i + 1) % npoly]
        inter = _proper_line_hit(p, q, a, b)
        if inter is not None:
            params.add(dot(inter - p, d))
    ordered = sorted(params)
    for t0, t1 in zip(ordered, ordered[1:]):
        tm = (t0 + t1) / (dot(d, d) * 2)
        mid = lerp(p, q, tm)
        if not _inside_or_on(m, mid):
            return False
    return True


def _proper_line_hit(p, q, a, b):
    """Intersection point of segment pq with segment ab when they touch."""
    d1 = q - p
    d2 = b - a
    denom = cross(d1, d2)
    if denom.is_zero():
        return None
    s = cross(a - p, d2) / denom
    t = cross(a - p, d1) / denom
    if s.sign() < 0 or (s - 1).sign() > 0 or t.sign() < 0 or (t - 1).sign() > 0:
        return None
    return lerp(p, q, s)


# -- shortest paths --------------------------------------------------------------


def shortest_path(m: ModifiedDisk, start: Optional[PlanePoint] = None,
                  goal: Optional[PlanePoint] = None) -> PolyPath:
    """Shortest path in the intrinsic metric of the polygon domain.

    Computed as a Dijkstra run over the visibility graph on polygon corners
    plus the two endpoints. Visibility uses exact predicates; lengths are
    floats compared at LENGTH_TOLERANCE, far below the feature size of 1/2.
    """
    start = m.start if start is None else start
    goal = m.goal if goal is None else goal
    for p in (start, goal):
        if not _on_boundary(m, p):
            raise OutsideDomain(f"endpoint {p!r} is not on the domain boundary")
    if m.degenerate:
        # collapsed domain: the path is forced along the segment, provided
        # every corner lies between the endpoints
        d = goal - start
        for p in m.polygon:
            t = dot(p - start, d)
            if t.sign() < 0 or (t - dot(d, d)).sign() > 0:
                raise DegenerateDomain(
                    "domain collapsed to a segment extending beyond the endpoints")
        return PolyPath((start, goal))
    if _segment_inside(m, start, goal):
        return PolyPath((start, goal))
    nodes = [start, goal] + [p for p in m.polygon if p not in (start, goal)]
    edges: Dict[int, List[Tuple[int, float]]] = {i: [] for i in range(len(nodes))}
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if _segment_inside(m, nodes[i], nodes[j]):
                wlen = math.sqrt(float(dist_sq(nodes[i], nodes[j])))
                edges[i].append((j, wlen))
                edges[j].append((i, wlen))
    dist = {0: 0.0}
    prev: Dict[int, int] = {}
    heap = [(0.0, 0)]
    while heap:
        dv, v = heapq.heappop(heap)
        if v == 1:
            break
        if dv > dist.get(v, math.inf) + LENGTH_TOLERANCE:
            continue
        for u, w in edges[v]:
            nd = dv + w
            if nd < dist.get(u, math.inf) - LENGTH_TOLERANCE:
                dist[u] = nd
                prev[u] = v
                heapq.heappush(heap, (nd, u))
    if 1 not in dist:
        raise OutsideDomain("endpoints are not connected inside the domain")
    path = [1]
    while path[-1] != 0:
        path.append(prev[path[-1]])
    return PolyPath(tuple(nodes[i] for i in reversed(path)))


# -- the Euclidean diagonal --------------------------------------------------------


def euclidean_diagonal(disk: CharDisk, alpha: PolyPath) -> Diagonal:
    """Nearest disk simplex to the crossing of alpha with every inner layer.

    The crossing point is intersected exactly; the nearest lattice vertex on
    the layer segment is chosen, or the edge itself when the crossing sits
    exactly on an edge barycenter (decidable in Q[sqrt(3)]). The defining
    span conditions of the diagonal are re-verified before returning.
    """
    j, k = disk.interval.j, disk.interval.k
    sims: List[Simplex] = []
    for i in range(j + 1, k):
        v, w = disk.layer_segment(i)
        pv, pw = eplane.embed(v), eplane.embed(w)
        t = eplane.lattice_distance(v, w)
        point = _line_crossing(alpha, pv, pw, i)
        u = dot(point - pv, pw - pv) / ExactScalar(t)  # arc position in [0, t]
        if u.sign() < 0 or (u - t).sign() > 0:
            raise NoCrossing(f"crossing with layer {i} lies outside its segment")
        step = ((w[0] - v[0]) // t, (w[1] - v[1]) // t)
        best = nearest_simplex_on_segment(u, t)
        verts = tuple((v[0] + step[0] * mpos, v[1] + step[1] * mpos) for mpos in best)
        sims.append(Simplex.of(verts))
    diag = Diagonal(disk.interval, tuple(sims))
    _verify_diagonal(disk, diag)
    return diag


def _line_crossing(alpha: PolyPath, pv: PlanePoint, pw: PlanePoint, i: int) -> PlanePoint:
    """The unique point where alpha crosses the line through pv and pw."""
    direction = pw - pv
    sides = [cross(direction, p - pv).sign() for p in alpha.points]
    hits: List[PlanePoint] = []
    for a in range(len(alpha.points) - 1):
        s0, s1 = sides[a], sides[a + 1]
        if s0 == 0 and s1 == 0:
            continue  # sliding along the line handled by vertex hits
        if s0 == 0:
            if a == 0 or sides[a - 1] != 0:
                hits.append(alpha.points[a])
            continue
        if s1 == 0:
            if a + 1 == len(alpha.points) - 1:
                hits.append(alpha.points[a + 1])
            continue
        if s0 * s1 < 0:
            p, q = alpha.points[a], alpha.points[a + 1]
            d1 = q - p
            s = cross(p - pv, direction) / cross(direction, d1)
            hits.append(lerp(p, q, s))
    uniq: List[PlanePoint] = []
    for h in hits:
        if not any(h == u for u in uniq):
            uniq.append(h)
    if len(uniq) != 1:
        raise NoCrossing(f"path crosses layer {i} line {len(uniq)} times")
    return uniq[0]


def _verify_diagonal(disk: CharDisk, diag: Diagonal):
    sims = diag.simplices
    if not sims:
        return
    for a, b in zip(sims, sims[1:]):
        union = set(a.verts) | set(b.verts)
        if not _disk_clique(disk, union):
            raise NoCrossing(f"diagonal simplices {a} and {b} do not span a simplex")
    j, k = disk.interval.j, disk.interval.k
    if len(sims[0]) != 1 or len(sims[-1]) != 1:
        raise NoCrossing("diagonal simplices at the interval ends must be vertices")
    vj, wj = disk.layer_segment(j)
    vk, wk = disk.layer_segment(k)
    if not _disk_clique(disk, {vj, wj, sims[0].verts[0]}):
        raise NoCrossing("first diagonal vertex does not span with the start edge")
    if not _disk_clique(disk, {vk, wk, sims[-1].verts[0]}):
        raise NoCrossing("last diagonal vertex does not span with the end edge")


def _disk_clique(disk: CharDisk, verts) -> bool:
    verts = list(verts)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if verts[a] != verts[b] and not disk.disk_adjacent(verts[a], verts[b]):
                return False
    return True


def nearest_simplex_on_segment(u, segment_length: int):
    """Decision rule for a crossing at exact arc position u along a segment.

    Returns a 1-tuple (vertex index) or 2-tuple (edge) of integer positions;
    the edge is returned only on an exact barycenter hit.
    """
    u = u if isinstance(u, ExactScalar) else ExactScalar(Fraction(u))
    double = u * 2
    for mpos in range(segment_length + 1):
        diff = double - (2 * mpos)
        if diff.sign() == 0:
            return (mpos,)
        if abs(diff) == ExactScalar(1):
            lo = mpos if diff.sign() > 0 else mpos - 1
            return (lo, lo + 1)
        if diff.sign() < 0:
            prev_gap = double - (2 * mpos - 1)
            return (mpos,) if prev_gap.sign() > 0 else (mpos - 1,)
    return (segment_length,)
