"""Characteristic surfaces for thick intervals.

The boundary cycle of a thick interval is built from thickness-realizing
vertex pairs; the surface it spans is extracted as a flat region and
developed onto the triangular lattice. General minimal-surface search is
out of scope: a region that fails the flat interior test is rejected
loudly, and a tiny exhaustive filling oracle confirms minimality on small
cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Sequence, Tuple

from . import eplane
from .complexes import FlagComplex, Simplex
from .directed import Layers, ThickInterval
from .errors import (MinDiskTimeout, NoFilling, NoRealizingChain, NotASimplexOfDisk,
                     NotFlat, PreconditionViolated)


@dataclass(frozen=True)
class BoundaryCycle:
    """Embedded loop (s_j..s_k, t_k..t_j) through thickness-realizing pairs."""

    interval: ThickInterval
    s: Tuple[object, ...]      # s_j..s_k, one per layer
    t: Tuple[object, ...]      # t_j..t_k
    cycle: Tuple[object, ...]  # the loop, without the repeated closing vertex

    def __len__(self):
        return len(self.cycle)


def boundary_cycle(c: FlagComplex, interval: ThickInterval,
                   layer_seq: Layers) -> BoundaryCycle:
    """Select one thickness-realizing vertex pair per layer of the interval.

    Consecutive choices on each side are automatically adjacent (consecutive
    directed-geodesic simplices jointly span a simplex); ties between
    realizing pairs are broken on the sorted pair, which keeps the selection
    stable under swapping the roles of the two endpoints. A small backtrack
    over realizing pairs guards the embeddedness constraints at both ends.
    """
    j, k = interval.j, interval.k
    n = len(layer_seq) - 1
    if not (0 < j < k - 1 and k < n):
        raise PreconditionViolated(f"({j}, {k}) is not a thick interval shape")
    if not (layer_seq[j].thin and layer_seq[k].thin):
        raise PreconditionViolated(f"bracket layers of ({j}, {k}) are not thin")
    if any(not layer_seq[i].thick for i in range(j + 1, k)):
        raise PreconditionViolated(f"interval ({j}, {k}) contains a thin layer")

    options = []
    for i in range(j, k + 1):
        layer = layer_seq[i]
        pairs = sorted(
            ((s, t) for s in layer.sigma for t in layer.tau
             if c.true_distance(s, t) == layer.thickness),
            key=lambda p: (min(p), max(p)))
        if not pairs:
            raise NoRealizingChain(f"no realizing pair in layer {i}")
        options.append(pairs)

    chain: list = []

    def backtrack(pos: int) -> bool:
        if pos == len(options):
            return True
        for s, t in options[pos]:
            if pos in (0, len(options) - 1) and s == t:
                continue  # embeddedness at the thin brackets
            if chain:
                ps, pt = chain[-1]
                if not (c.adjacent(ps, s) and c.adjacent(pt, t)):
                    continue
            chain.append((s, t))
            if backtrack(pos + 1):
                return True
            chain.pop()
        return False

    if not backtrack(0):
        raise NoRealizingChain(
            f"no adjacent embedded realizing chain for interval ({j}, {k})")
    s_side = tuple(p[0] for p in chain)
    t_side = tuple(p[1] for p in chain)
    cycle = s_side + tuple(reversed(t_side))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not c.adjacent(a, b):
            raise NoRealizingChain(f"cycle vertices {a}, {b} not adjacent")
    if len(set(cycle)) != len(cycle):
        raise NoRealizingChain("realizing cycle is not embedded")
    return BoundaryCycle(interval, s_side, t_side, cycle)


@dataclass(frozen=True)
class CharDisk:
    """A flat disk with its development into the lattice and surface map(s).

    ``coords`` develops every region vertex of the ambient complex onto
    axial coordinates; ``surfaces`` hold the inverse direction, disk -> X.
    Boundary labels v_i/w_i live in disk coordinates, one per layer of the
    interval.
    """

    interval: ThickInterval
    region: frozenset                      # ambient vertices
    coords: Dict[object, eplane.Axial]     # ambient -> disk development
    v_labels: Tuple[eplane.Axial, ...]     # per layer j..k
    w_labels: Tuple[eplane.Axial, ...]
    surfaces: Tuple[Dict[eplane.Axial, object], ...]
    triangle_count: int

    def disk_vertices(self) -> frozenset:
        return frozenset(self.coords.values())

    def layer_segment(self, i: int) -> Tuple[eplane.Axial, eplane.Axial]:
        return self.v_labels[i - self.interval.j], self.w_labels[i - self.interval.j]

    def disk_adjacent(self, a: eplane.Axial, b: eplane.Axial) -> bool:
        return (b[0] - a[0], b[1] - a[1]) in eplane._OFFSET_SET


def extract_flat_disk(c: FlagComplex, cycle: BoundaryCycle) -> CharDisk:
    """Fill the boundary cycle with the enclosed flat region.

    The region is the union over layers of the combinatorial interval
    between the realizing pair; an interior vertex whose region link is not
    a 6-cycle fails the flat test and raises NotFlat. The region is then
    developed onto the lattice, which also certifies the embedding is
    isometric. Plane-backed complexes develop by identity.
    """
    if len(cycle) < 6:
        raise PreconditionViolated(
            f"boundary cycle of a thick interval has at least 6 vertices, got {len(cycle)}")
    j, k = cycle.interval.j, cycle.interval.k
    per_layer = []
    region = set()
    for s, t in zip(cycle.s, cycle.t):
        seg = _interval_between(c, s, t)
        per_layer.append(seg)
        region |= seg
    boundary = set(cycle.cycle)
    interior = region - boundary

    for v in sorted(interior):
        inside = sorted(u for u in c.neighbors(v) if u in region)
        if len(inside) != 6 or not _is_region_hexagon(c, inside):
            raise NotFlat(f"interior vertex {v} is not surrounded by 6 triangles")

    coords = _develop(c, cycle, region)
    _check_isometric(c, region, coords)
    v_labels = tuple(coords[s] for s in cycle.s)
    w_labels = tuple(coords[t] for t in cycle.t)
    _check_layer_geometry(v_labels, w_labels)
    triangles = sum(1 for tri in _region_triangles(c, region))
    interior_count = len(interior)
    boundary_count = len(region) - interior_count
    if triangles != 2 * interior_count + boundary_count - 2:
        raise NotFlat("triangle count does not match a disk Euler characteristic")
    surface = {coords[v]: v for v in region}
    return CharDisk(cycle.interval, frozenset(region), coords,
                    v_labels, w_labels, (surface,), triangles)


def _interval_between(c, s, t):
    d = c.true_distance(s, t)
    dx = c.bfs_distances(s, budget=d)
    dy = c.bfs_distances(t, budget=d)
    return {v for v, a in dx.items() if v in dy and a + dy[v] == d}


def _is_region_hexagon(c, inside):
    deg = {u: sum(1 for w in inside if w != u and c.adjacent(u, w)) for u in inside}
    return all(d == 2 for d in deg.values()) and _connected(c, inside)


def _connected(c, verts):
    verts = set(verts)
    seen = {next(iter(verts))}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in c.neighbors(v):
            if u in verts and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == verts


def _region_triangles(c, region):
    for v in region:
        for u, w in combinations(sorted(x for x in c.neighbors(v) if x in region and x > v), 2):
            if c.adjacent(u, w):
                yield (v, u, w)


def _develop(c, cycle, region):
    """Lay the region out on the lattice by flooding over its triangles."""
    if c.plane_backed:
        return {v: v for v in region}
    triangles = list(_region_triangles(c, region))
    by_edge: Dict[tuple, list] = {}
    for tri in triangles:
        for a, b in combinations(tri, 2):
            by_edge.setdefault((min(a, b), max(a, b)), []).append(tri)

    s0, t0 = cycle.s[0], cycle.t[0]
    coords = {s0: (0, 0), t0: (1, 0)}
    seed_edge = (min(s0, t0), max(s0, t0))
    seed_tris = by_edge.get(seed_edge, [])
    if not seed_tris:
        raise NotFlat("boundary edge borders no region triangle")
    apex = next(v for v in seed_tris[0] if v not in (s0, t0))
    coords[apex] = (0, 1)

    placed = {tuple(sorted(seed_tris[0]))}
    queue = deque([seed_tris[0]])
    while queue:
        tri = queue.popleft()
        for a, b in combinations(tri, 2):
            edge = (min(a, b), max(a, b))
            third_here = next(v for v in tri if v not in (a, b))
            for other in by_edge[edge]:
                key = tuple(sorted(other))
                if key in placed:
                    continue
                w = next(v for v in other if v not in (a, b))
                completions = _edge_completions(coords[a], coords[b])
                if third_here in coords:
                    completions = [p for p in completions if p != coords[third_here]]
                if not completions:
                    raise NotFlat(f"cannot develop vertex {w}")
                target = completions[0]
                if w in coords:
                    if coords[w] != target:
                        raise NotFlat(f"inconsistent development at {w}")
                else:
                    if target in coords.values():
                        raise NotFlat(f"development is not injective at {w}")
                    coords[w] = target
                placed.add(key)
                queue.append(other)
    missing = region - set(coords)
    if missing:
        raise NotFlat(f"region is not triangle-connected; unreached: {sorted(missing)[:3]}")
    return coords


def _edge_completions(pa, pb):
    out = []
    for v in eplane.neighbors(pa):
        if (pb[0] - v[0], pb[1] - v[1]) in eplane._OFFSET_SET:
            out.append(v)
    return out


def _check_isometric(c, region, coords):
    verts = sorted(region)
    for a, b in combinations(verts, 2):
        if eplane.lattice_distance(coords[a], coords[b]) != c.true_distance(a, b):
            raise NotFlat(f"development is not isometric on pair ({a}, {b})")


def _check_layer_geometry(v_labels, w_labels):
    """Layer segments are collinear lattice lines, all mutually parallel."""
    directions = []
    for v, w in zip(v_labels, w_labels):
        d = (w[0] - v[0], w[1] - v[1])
        t = eplane.lattice_distance(v, w)
        if t == 0:
            raise NotFlat("zero-length layer segment")
        if d[0] % t or d[1] % t:
            raise NotFlat(f"layer segment {v}-{w} is not a lattice line segment")
        directions.append((d[0] // t, d[1] // t))
    first = directions[0]
    for d in directions[1:]:
        if d != first and d != (-first[0], -first[1]):
            raise NotFlat("layer segments are not parallel")


# -- minimality oracle -------------------------------------------------------


def brute_force_min_disk(c: FlagComplex, cycle: Sequence, max_triangles: int) -> int:
    """Exhaustive minimal number of triangles filling the cycle.

    Enumerates reduced disk fillings by clipping one triangle per step off
    the first boundary edge; spur backtracks collapse for free. Intended
    for |cycle| <= 8 and small budgets only.
    """
    cyc = tuple(cycle)
    if len(cyc) > 8:
        raise PreconditionViolated("oracle limited to cycles of length <= 8")
    if max_triangles > 12:
        raise PreconditionViolated("oracle limited to max_triangles <= 12")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not c.adjacent(a, b):
            raise PreconditionViolated(f"cycle vertices {a}, {b} not adjacent")
    state = {"budget_hit": False}
    memo: dict = {}

    def fill(walk, budget):
        walk = _despur(walk)
        m = len(walk)
        if m == 0:
            return 0
        if m == 3:
            return 1 if budget >= 1 else _budget_miss(state)
        if budget < max(1, m - 2):
            return _budget_miss(state)
        key = (_canon(walk), budget)
        if key in memo:
            return memo[key]
        memo[key] = None  # cycle guard
        best = None
        a, b = walk[0], walk[1]
        rest = walk[1:]
        for w in sorted(c.neighbors(a) & c.neighbors(b)):
            if w == a or w == b:
                continue
            sub = fill((w,) + rest + (a,), budget - 1)
            if sub is not None:
                total = sub + 1
                if best is None or total < best:
                    best = total
        memo[key] = best
        return best

    result = fill(cyc, max_triangles)
    if result is None:
        if state["budget_hit"]:
            raise MinDiskTimeout(
                f"no filling with at most {max_triangles} triangles found")
        raise NoFilling("cycle bounds no disk in this complex")
    return result


def _budget_miss(state):
    state["budget_hit"] = True
    return None


def _despur(walk):
    walk = list(walk)
    changed = True
    while changed and len(walk) > 2:
        changed = False
        m = len(walk)
        for i in range(m):
            if walk[(i - 1) % m] == walk[(i + 1) % m]:
                hi, lo = max(i, (i + 1) % m), min(i, (i + 1) % m)
                del walk[hi]
                del walk[lo]
                changed = True
                break
    if len(walk) == 2:
        return ()
    return tuple(walk)


def _canon(walk):
    m = len(walk)
    variants = []
    for seq in (walk, tuple(reversed(walk))):
        for r in range(m):
            variants.append(seq[r:] + seq[:r])
    return min(variants)


# -- the characteristic mapping -------------------------------------------------


def characteristic_map(c: FlagComplex, disk: CharDisk, rho: Simplex) -> Simplex:
    """Span of the images of a disk simplex under all stored surfaces.

    rho is given in disk coordinates. With a single stored surface this is
    just its image; the result is verified to be a simplex of the ambient
    complex, and the assignment respects inclusions by construction.
    """
    disk_verts = disk.disk_vertices()
    for v in rho:
        if v not in disk_verts:
            raise NotASimplexOfDisk(f"{v} is not a vertex of the disk")
    if not all(disk.disk_adjacent(a, b) for a, b in combinations(rho.verts, 2)):
        raise NotASimplexOfDisk(f"{rho} is not a simplex of the disk")
    images = set()
    for surface in disk.surfaces:
        images.update(surface[v] for v in rho)
    out = Simplex.of(images)
    c.validate_simplex(out)
    return out
