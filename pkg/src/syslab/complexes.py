"""Flag simplicial complexes stored as their 1-skeleton graphs.

A flag complex is determined by its graph: the simplices are exactly the
cliques, so nothing beyond the symmetric adjacency relation is ever stored.
Finite windows cut out of infinite complexes carry per-vertex margins (hop
distance to the truncation boundary); metric queries that truncation could
corrupt raise BoundaryUnsafe instead of returning a possibly wrong value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Optional

import numpy as np

from .errors import (BoundaryUnsafe, NotASimplex, PreconditionViolated,
                     ScenarioParseError, Unreachable)

VertexId = Hashable


@dataclass(frozen=True)
class Simplex:
    """A nonempty clique of the owning complex, kept as a sorted vertex tuple."""

    verts: tuple

    @staticmethod
    def of(vertices: Iterable[VertexId]) -> "Simplex":
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise NotASimplex("empty simplex")
        return Simplex(vs)

    def __iter__(self):
        return iter(self.verts)

    def __len__(self):
        return len(self.verts)

    def __contains__(self, v):
        return v in self.verts

    def union(self, other: "Simplex") -> "Simplex":
        return Simplex.of(self.verts + other.verts)

    def isdisjoint(self, other: "Simplex") -> bool:
        return not set(self.verts) & set(other.verts)

    def __repr__(self):
        inner = ",".join(map(str, self.verts))
        return f"<{inner}>"


class FlagComplex:
    """Uniformly locally finite graph; simplices are its cliques.

    Immutable after construction; all queries are read-only.

    ``margin`` maps each vertex to its hop distance to the nearest vertex
    missing from a materialized window; ``None`` marks a complete complex.
    ``convex_window`` asserts the window is a combinatorial ball of a locally
    6-large complex, whose convexity makes every internal BFS distance true.
    ``metric_hint`` is an exact closed-form metric (used for plane windows).
    """

    def __init__(self, adjacency: Mapping[VertexId, Iterable[VertexId]], *,
                 margin: Optional[Mapping[VertexId, int]] = None,
                 metric_hint: Optional[Callable[[VertexId, VertexId], int]] = None,
                 convex_window: bool = False,
                 plane_backed: bool = False,
                 name: str = ""):
        adj = {}
        for v, nbrs in adjacency.items():
            adj[v] = frozenset(nbrs)
        for v, nbrs in adj.items():
            for u in nbrs:
                if u == v:
                    raise PreconditionViolated(f"self-loop at {v}")
                if u not in adj or v not in adj[u]:
                    raise PreconditionViolated(f"asymmetric adjacency {v}-{u}")
        self._adj = adj
        self._margin = dict(margin) if margin is not None else None
        self.metric_hint = metric_hint
        self.convex_window = convex_window
        self.plane_backed = plane_backed
        self.name = name
        self.degree_bound = max((len(n) for n in adj.values()), default=0)
        self._index = None
        self._dist_matrix = None

    # -- basic structure ------------------------------------------------------

    def vertices(self):
        return self._adj.keys()

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    @property
    def is_complete(self) -> bool:
        return self._margin is None

    @property
    def trusts_metric(self) -> bool:
        return self.is_complete or self.convex_window or self.metric_hint is not None

    def margin(self, v) -> Optional[int]:
        """Hop distance from v to the window boundary; None means unbounded."""
        if self._margin is None:
            return None
        return self._margin[v]

    def is_clique(self, vertices: Iterable[VertexId]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(u, v) for u, v in combinations(vs, 2))

    def validate_simplex(self, s: Simplex) -> Simplex:
        for v in s:
            if v not in self._adj:
                raise NotASimplex(f"vertex {v} not in complex")
        if not self.is_clique(s):
            raise NotASimplex(f"{s} is not a clique")
        return s

    # -- internal metric -------------------------------------------------------

    def bfs_distances(self, source, *, budget: Optional[int] = None) -> dict:
        """Distance map from source, truncated at the given radius."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if budget is not None and dv >= budget:
                continue
            for u in self._adj[v]:
                if u not in dist:
                    dist[u] = dv + 1
                    queue.append(u)
        return dist

    def true_distance(self, x, y, budget: Optional[int] = None) -> int:
        """Distance trusted to equal the distance in the underlying complex.

        Valid on complete complexes, on convex windows (any geodesic between
        window vertices stays inside a ball window), and wherever an exact
        closed-form metric is attached.
        """
        if x == y:
            return 0
        if self.metric_hint is not None:
            d = self.metric_hint(x, y)
            if budget is not None and d > budget:
                raise Unreachable(f"distance {d} exceeds budget {budget}")
            return d
        dist = {x: 0}
        queue = deque([x])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if budget is not None and dv >= budget:
                continue
            for u in self._adj[v]:
                if u == y:
                    return dv + 1
                if u not in dist:
                    dist[u] = dv + 1
                    queue.append(u)
        raise Unreachable(f"no path {x} -> {y}"
                          + (f" within budget {budget}" if budget is not None else ""))

    def _vertex_index(self):
        if self._index is None:
            order = sorted(self._adj)
            self._index = (order, {v: i for i, v in enumerate(order)})
        return self._index

    def distance_matrix(self) -> np.ndarray:
        """All-pairs distance matrix (int32, -1 for unreachable); cached."""
        if self._dist_matrix is None:
            order, pos = self._vertex_index()
            n = len(order)
            mat = np.full((n, n), -1, dtype=np.int32)
            for i, v in enumerate(order):
                dmap = self.bfs_distances(v)
                for u, d in dmap.items():
                    mat[i, pos[u]] = d
            self._dist_matrix = mat
        return self._dist_matrix


# -- public metric operations ----------------------------------------------


def distance(c: FlagComplex, x, y, budget: Optional[int] = None) -> int:
    """Edge-path distance between two vertices.

    On a materialized window the value is only certified when truncation
    cannot have affected it: the window is a convex ball, a closed-form
    metric backs it, or the distance fits inside one endpoint's margin.
    """
    if x not in c or y not in c:
        raise PreconditionViolated(f"vertex not in complex: {x if x not in c else y}")
    d = c.true_distance(x, y, budget) if c.trusts_metric else _raw_distance(c, x, y, budget)
    if not c.trusts_metric:
        mx, my = c.margin(x), c.margin(y)
        if d > max(mx, my):
            raise BoundaryUnsafe(
                f"distance {d} between {x} and {y} exceeds both margins ({mx}, {my})")
    return d


def _raw_distance(c, x, y, budget):
    if x == y:
        return 0
    dist = c.bfs_distances(x, budget=budget)
    if y not in dist:
        raise Unreachable(f"no path {x} -> {y}"
                          + (f" within budget {budget}" if budget is not None else ""))
    return dist[y]


def interval(c: FlagComplex, x, y, budget: Optional[int] = None) -> frozenset:
    """All vertices on geodesics from x to y: { v : d(x,v) + d(v,y) = d(x,y) }."""
    d = distance(c, x, y, budget)
    dx = c.bfs_distances(x, budget=d)
    dy = c.bfs_distances(y, budget=d)
    return frozenset(v for v, a in dx.items() if v in dy and a + dy[v] == d)


def is_convex(c: FlagComplex, vertices: Iterable[VertexId], radius_cap: int) -> bool:
    """Whether every geodesic between members stays inside the vertex set."""
    A = sorted(set(vertices))
    if len(A) <= 1:
        return True
    order, pos = c._vertex_index()
    mat = c.distance_matrix()
    idx = np.array([pos[v] for v in A])
    sub = mat[np.ix_(idx, idx)]
    if sub.max() > radius_cap:
        raise PreconditionViolated(
            f"pairs exceed radius_cap={radius_cap} (max {int(sub.max())})")
    inside = np.zeros(len(order), dtype=bool)
    inside[idx] = True
    # v lies on a geodesic a->b iff d(a,v) + d(v,b) == d(a,b)
    da = mat[idx]                                     # |A| x V
    through = da[:, None, :] + da[None, :, :]         # |A| x |A| x V
    on_geo = (through == sub[:, :, None]).any(axis=(0, 1))
    return not bool((on_geo & ~inside).any())


@dataclass(frozen=True)
class LargenessReport:
    ok: bool
    vertices_checked: int
    witness_vertex: Optional[VertexId] = None
    witness_cycle: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def check_local_6_large(c: FlagComplex) -> LargenessReport:
    """Search every vertex link for induced 4- and 5-cycles.

    Links of a clique complex are flag by construction, so flagness is not
    searched. A hit is returned with its witness cycle; links are small
    (degree-bounded), so subset enumeration is exact and cheap.
    """
    checked = 0
    for v in sorted(c.vertices()):
        checked += 1
        link = sorted(c.neighbors(v))
        for size in (4, 5):
            if len(link) < size:
                continue
            for subset in combinations(link, size):
                cyc = _induced_cycle(c, subset)
                if cyc is not None:
                    return LargenessReport(False, checked, v, cyc)
    return LargenessReport(True, checked)


def _induced_cycle(c, subset):
    """Return the subset ordered as a cycle when it induces one, else None."""
    deg = {}
    edges = 0
    for u, w in combinations(subset, 2):
        if c.adjacent(u, w):
            edges += 1
            deg[u] = deg.get(u, 0) + 1
            deg[w] = deg.get(w, 0) + 1
    n = len(subset)
    if edges != n or any(deg.get(u, 0) != 2 for u in subset):
        return None
    # walk the cycle to present a witness in order
    start = subset[0]
    walk = [start]
    prev = None
    while len(walk) < n:
        nxt = [u for u in subset if u != prev and u != walk[-1] and c.adjacent(walk[-1], u)]
        prev = walk[-1]
        walk.append(nxt[0])
    return tuple(walk)


def residue(c: FlagComplex, s: Simplex) -> frozenset:
    """Vertex set of Res(s): s plus every vertex adjacent to all of s."""
    c.validate_simplex(s)
    common = None
    for v in s:
        nbrs = c.neighbors(v)
        common = nbrs if common is None else common & nbrs
    return frozenset(s.verts) | (common or frozenset())


def ball_of_simplex(c: FlagComplex, s: Simplex) -> frozenset:
    """Vertices of B_1(s): s plus everything adjacent to at least one vertex."""
    out = set(s.verts)
    for v in s:
        out |= c.neighbors(v)
    return frozenset(out)


# -- materialization and file format ----------------------------------------


def materialize_window(center, neighbors_fn, radius: int, *,
                       metric_hint=None, convex=True, plane_backed=False,
                       name="") -> FlagComplex:
    """Cut the radius-ball around center out of an implicit infinite complex.

    Each vertex is tagged with its hop margin to the truncation boundary
    (radius minus its BFS depth), which the margin rule consults later.
    """
    if radius < 0:
        raise PreconditionViolated("radius must be >= 0")
    depth = {center: 0}
    queue = deque([center])
    while queue:
        v = queue.popleft()
        if depth[v] == radius:
            continue
        for u in neighbors_fn(v):
            if u not in depth:
                depth[u] = depth[v] + 1
                queue.append(u)
    adjacency = {v: [u for u in neighbors_fn(v) if u in depth] for v in depth}
    margin = {v: radius - d for v, d in depth.items()}
    return FlagComplex(adjacency, margin=margin, metric_hint=metric_hint,
                       convex_window=convex, plane_backed=plane_backed, name=name)


def parse_complex_text(text: str, name="") -> FlagComplex:
    """Load the ``flagcomplex v1`` edge-list format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "flagcomplex v1":
        raise ScenarioParseError("missing 'flagcomplex v1' header")
    adjacency: dict = {}
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ScenarioParseError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ScenarioParseError(f"non-integer vertex in {ln!r}") from exc
        if u < 0 or v < 0:
            raise ScenarioParseError(f"negative vertex id in {ln!r}")
        if u == v:
            raise ScenarioParseError(f"self-loop {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ScenarioParseError(f"duplicate edge {u} {v}")
        seen.add(key)
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    return FlagComplex(adjacency, name=name)


def load_complex(path) -> FlagComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex_text(fh.read(), name=str(path))


def dump_complex(c: FlagComplex) -> str:
    lines = ["flagcomplex v1"]
    for v in sorted(c.vertices()):
        for u in sorted(c.neighbors(v)):
            if v < u:
                lines.append(f"{v} {u}")
    return "\n".join(lines) + "\n"
