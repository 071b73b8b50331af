"""Directed geodesics between vertices, layers, thickness, thick intervals.

A directed geodesic from x to y is the unique simplex sequence with
sigma_0 = x, sigma_n = y such that consecutive simplices are disjoint and
jointly span a simplex, and every interior sigma_i equals
Res(sigma_{i-1}) meet B_1(sigma_{i+1}). The constructive reading used here
is the iterated sphere projection
    sigma_{i+1} = span{ v in S_{n-i-1}(y) : v adjacent to all of sigma_i },
with both defining conditions re-verified as a mandatory postcondition, so
a non-systolic input or a truncation artifact fails loudly rather than
producing a quietly wrong sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import eplane
from .complexes import (FlagComplex, Simplex, ball_of_simplex, residue)
from .errors import (BoundaryUnsafe, ConditionViolated, ConstructionFailed,
                     MalformedProfile, PreconditionViolated)


@dataclass(frozen=True)
class DirectedGeodesic:
    """Simplices sigma_0..sigma_n read from source to target."""

    source: object
    target: object
    simplices: Tuple[Simplex, ...]

    def __len__(self):
        return len(self.simplices) - 1

    def __iter__(self):
        return iter(self.simplices)

    def __getitem__(self, i):
        return self.simplices[i]

    def reversed_view(self) -> Tuple[Simplex, ...]:
        """The same simplices indexed in the opposite direction."""
        return tuple(reversed(self.simplices))


@dataclass(frozen=True)
class Layer:
    """Layer i between two vertices: the sphere intersection plus thickness.

    Thickness is defined relative to the two directed geodesics whose
    simplices the layer stores; thin means thickness at most 1.
    """

    index: int
    vertices: frozenset
    sigma: Optional[Simplex]
    tau: Optional[Simplex]
    thickness: int

    @property
    def thin(self) -> bool:
        return self.thickness <= 1

    @property
    def thick(self) -> bool:
        return self.thickness > 1


class Layers(Sequence):
    """The full layer decomposition of a vertex pair, indexable by layer."""

    def __init__(self, c, x, y, items, sigma_geo, tau_geo):
        self.complex = c
        self.x = x
        self.y = y
        self.items = tuple(items)
        self.sigma_geo = sigma_geo
        self.tau_geo = tau_geo

    @property
    def n(self):
        return len(self.items) - 1

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def thickness_profile(self) -> Tuple[int, ...]:
        return tuple(layer.thickness for layer in self.items)


@dataclass(frozen=True)
class ThickInterval:
    """Indices (j, k) bracketing a maximal run of thick layers by thin ones."""

    j: int
    k: int

    def interior(self):
        return range(self.j + 1, self.k)


# -- safety -------------------------------------------------------------------


def require_pair_safe(c: FlagComplex, x, y) -> int:
    """Check the whole geodesic machinery between x and y is truncation-proof.

    Needs a trusted metric plus a margin of at least 1 on every vertex of
    the combinatorial interval, so links and residues there are complete.
    Returns d(x, y).
    """
    if x not in c or y not in c:
        raise PreconditionViolated(f"vertex not in complex: {x if x not in c else y}")
    if not c.trusts_metric:
        raise BoundaryUnsafe(
            "window metric is not trusted; materialize a convex window instead")
    n = c.true_distance(x, y)
    if not c.is_complete:
        for v in _interval_vertices(c, x, y, n):
            if c.margin(v) < 1:
                raise BoundaryUnsafe(
                    f"interval vertex {v} touches the window boundary "
                    f"(pair {x}, {y})")
    return n


def _interval_vertices(c: FlagComplex, x, y, n):
    if c.plane_backed:
        for v in eplane.interval_box(x, y):
            if v in c:
                yield v
        return
    dx = c.bfs_distances(x, budget=n)
    dy = c.bfs_distances(y, budget=n)
    for v, a in dx.items():
        if v in dy and a + dy[v] == n:
            yield v


# -- construction ---------------------------------------------------------------


def directed_geodesic(c: FlagComplex, x, y) -> DirectedGeodesic:
    """The unique directed geodesic from x to y.

    Raises ConstructionFailed when a projection step is empty or not a
    clique, and ConditionViolated when the finished sequence fails either
    defining condition on re-verification.
    """
    n = require_pair_safe(c, x, y)
    if n == 0:
        return DirectedGeodesic(x, y, (Simplex.of([x]),))
    dist_to_y = _distance_map(c, y, n)
    simplices = [Simplex.of([x])]
    for i in range(n - 1):
        current = simplices[-1]
        common = None
        for v in current:
            nbrs = c.neighbors(v)
            common = nbrs if common is None else common & nbrs
        wanted = n - i - 1
        candidates = sorted(v for v in common if dist_to_y(v) == wanted)
        if not candidates:
            raise ConstructionFailed(
                f"empty projection at step {i + 1} between {x} and {y}")
        if not c.is_clique(candidates):
            raise ConstructionFailed(
                f"projection at step {i + 1} between {x} and {y} "
                f"is not a simplex: {candidates}")
        simplices.append(Simplex.of(candidates))
    simplices.append(Simplex.of([y]))
    geo = DirectedGeodesic(x, y, tuple(simplices))
    _verify_conditions(c, geo)
    return geo


def _distance_map(c, y, budget):
    if c.plane_backed:
        return lambda v: eplane.lattice_distance(v, y)
    dmap = c.bfs_distances(y, budget=budget)
    return lambda v: dmap.get(v, budget + 1)


def _verify_conditions(c: FlagComplex, geo: DirectedGeodesic):
    sims = geo.simplices
    for i in range(len(sims) - 1):
        a, b = sims[i], sims[i + 1]
        if not a.isdisjoint(b):
            raise ConditionViolated(f"simplices {a} and {b} are not disjoint")
        if not c.is_clique(a.verts + b.verts):
            raise ConditionViolated(f"simplices {a} and {b} do not span a simplex")
    for i in range(1, len(sims) - 1):
        res = residue(c, sims[i - 1])
        ball = ball_of_simplex(c, sims[i + 1])
        if res & ball != frozenset(sims[i].verts):
            raise ConditionViolated(
                f"residue/ball condition fails at index {i} "
                f"between {geo.source} and {geo.target}")


def satisfies_conditions(c: FlagComplex, source, target,
                         sims: Sequence[Simplex]) -> bool:
    """Whether a simplex sequence meets both defining conditions end to end."""
    if not sims or sims[0].verts != (source,) or sims[-1].verts != (target,):
        return False
    try:
        _verify_conditions(c, DirectedGeodesic(source, target, tuple(sims)))
    except ConditionViolated:
        return False
    return True


# -- layers and thickness ---------------------------------------------------------


def layers(c: FlagComplex, x, y) -> Layers:
    """Layer decomposition with thickness from the two directed geodesics.

    The geodesic from y to x is reindexed to run in the same direction as
    the one from x to y, so layer i holds sigma_i and tau_i side by side.
    Thickness distances are measured in the ambient complex; layers are
    convex, so the value is realized inside the layer.
    """
    n = require_pair_safe(c, x, y)
    sigma_geo = directed_geodesic(c, x, y)
    tau_geo = directed_geodesic(c, y, x)
    tau_aligned = tau_geo.reversed_view()
    per_layer: dict = {i: set() for i in range(n + 1)}
    for v in _interval_vertices(c, x, y, n):
        per_layer[c.true_distance(x, v)].add(v)
    items = []
    for i in range(n + 1):
        sigma = sigma_geo[i]
        tau = tau_aligned[i]
        thickness = max(c.true_distance(s, t) for s in sigma for t in tau)
        items.append(Layer(i, frozenset(per_layer[i]), sigma, tau, thickness))
    return Layers(c, x, y, items, sigma_geo, tau_geo)


def thick_intervals(layer_seq: Sequence[Layer]) -> list[ThickInterval]:
    """Maximal thick runs bracketed by thin layers.

    A thick layer adjacent to an endpoint has no thin bracket and cannot
    arise from a valid construction; it is reported as MalformedProfile.
    """
    n = len(layer_seq) - 1
    if n < 0:
        return []
    if n >= 2 and (layer_seq[1].thick or layer_seq[n - 1].thick):
        raise MalformedProfile("thick layer adjacent to an endpoint")
    out = []
    i = 1
    while i < n:
        if layer_seq[i].thick:
            j = i - 1
            k = i + 1
            while k < n and layer_seq[k].thick:
                k += 1
            if not (layer_seq[j].thin and layer_seq[k].thin):
                raise MalformedProfile(f"thick run {j + 1}..{k - 1} lacks thin brackets")
            out.append(ThickInterval(j, k))
            i = k + 1
        else:
            i += 1
    return out


def map_geodesic(iso, geo: DirectedGeodesic) -> DirectedGeodesic:
    """Image of a directed geodesic under a plane isometry."""
    return DirectedGeodesic(
        iso(geo.source), iso(geo.target),
        tuple(Simplex.of(map(iso, s)) for s in geo.simplices))
