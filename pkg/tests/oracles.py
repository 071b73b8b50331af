"""Independent brute-force oracles used to validate the library.

Everything here is deliberately written against raw adjacency and floats,
not against the library's own metric or exact predicates, so each check is
a genuine second route to the same answer.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from itertools import combinations


def bfs_distance(c, x, y, cap=10 ** 9):
    """Plain BFS over c.neighbors, independent of any metric hint."""
    if x == y:
        return 0
    dist = {x: 0}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if dist[v] >= cap:
            continue
        for u in c.neighbors(v):
            if u == y:
                return dist[v] + 1
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return None


def bfs_map(c, x, cap=10 ** 9):
    dist = {x: 0}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if dist[v] >= cap:
            continue
        for u in c.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def interval_scan(c, x, y):
    """Exhaustive interval: vertices whose distances to x and y add up."""
    d = bfs_distance(c, x, y)
    dx = bfs_map(c, x, cap=d)
    dy = bfs_map(c, y, cap=d)
    return {v for v in dx if v in dy and dx[v] + dy[v] == d}


def is_geodesic(c, vertices):
    vs = list(vertices)
    return all(bfs_distance(c, vs[i], vs[j]) == j - i
               for i in range(len(vs)) for j in range(i + 1, len(vs)))


# -- directed geodesic enumeration ------------------------------------------------


def enumerate_directed_geodesics(c, x, y, limit=50):
    """All simplex sequences satisfying the two defining conditions.

    Enumerates cliques of each successive common neighborhood; sequences
    whose members could not reach the target in the remaining steps are
    pruned (a logical consequence of the definition, not an assumption).
    Returns a list of tuples of frozensets.
    """
    n = bfs_distance(c, x, y)
    dist_to_y = bfs_map(c, y, cap=n + 1)
    results = []

    def residue_set(simplex):
        common = None
        for v in simplex:
            nbrs = set(c.neighbors(v))
            common = nbrs if common is None else common & nbrs
        return set(simplex) | common

    def ball_set(simplex):
        out = set(simplex)
        for v in simplex:
            out |= set(c.neighbors(v))
        return out

    def condition_two(prev, mid, nxt):
        return residue_set(prev) & ball_set(nxt) == set(mid)

    def cliques_of(cands):
        cands = sorted(cands)
        out = []

        def grow(base, rest):
            for i, v in enumerate(rest):
                new = base + (v,)
                out.append(new)
                grow(new, [u for u in rest[i + 1:] if all(c.adjacent(u, w) for w in new)])

        grow((), cands)
        return out

    def extend(seq):
        if len(results) >= limit:
            return
        i = len(seq) - 1
        if i == n:
            if set(seq[-1]) == {y}:
                ok = all(condition_two(seq[t - 1], seq[t], seq[t + 1])
                         for t in range(1, n))
                if ok:
                    results.append(tuple(frozenset(s) for s in seq))
            return
        current = seq[-1]
        common = None
        for v in current:
            nbrs = set(c.neighbors(v))
            common = nbrs if common is None else common & nbrs
        common -= set(current)
        usable = [v for v in common if dist_to_y.get(v, n + 2) <= n - i - 1]
        for cand in cliques_of(usable):
            if max(dist_to_y.get(v, n + 2) for v in cand) > n - i - 1:
                continue
            if i >= 1 and not condition_two(seq[i - 1], seq[i], cand):
                continue
            extend(seq + [tuple(cand)])

    extend([(x,)])
    return results


# -- induced-cycle search (independent of the library's subset scan) -----------------


def find_induced_cycle(c, center, lengths=(4, 5)):
    """First induced cycle of one of the given lengths in a vertex link."""
    link = sorted(c.neighbors(center))
    for size in lengths:
        for subset in combinations(link, size):
            edges = {(u, v) for u, v in combinations(subset, 2) if c.adjacent(u, v)}
            if len(edges) != size:
                continue
            # try to order the subset into a single closed walk
            adj = {u: [v for v in subset if (min(u, v), max(u, v)) in
                       {(min(a, b), max(a, b)) for a, b in edges}] for u in subset}
            if any(len(a) != 2 for a in adj.values()):
                continue
            walk = [subset[0]]
            prev = None
            while len(walk) < size:
                nxt = [u for u in adj[walk[-1]] if u != prev]
                prev = walk[-1]
                walk.append(nxt[0])
            if walk[0] in adj[walk[-1]]:
                return tuple(walk)
    return None


# -- float shortest-path oracle --------------------------------------------------------


def _poly_floats(polygon):
    return [(float(p.x), float(p.y)) for p in polygon]


def _inside_float(poly, x, y, eps=1e-9):
    # boundary counts as inside
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
        if abs(cross) < eps * 10:
            if min(x1, x2) - eps <= x <= max(x1, x2) + eps and \
               min(y1, y2) - eps <= y <= max(y1, y2) + eps:
                return True
    crossings = 0
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xi > x:
                crossings += 1
    return crossings % 2 == 1


def _visible_float(poly, a, b, samples=33, eps=1e-7):
    for i in range(1, samples):
        t = i / samples
        x = a[0] + t * (b[0] - a[0])
        y = a[1] + t * (b[1] - a[1])
        if not _inside_float(poly, x, y, eps=eps):
            return False
    return True


def grid_dijkstra_path_length(polygon, start, goal, pitch=0.02):
    """Float Dijkstra over polygon corners plus a dense interior grid.

    Corner-to-corner edges use sampled visibility, so the optimum through
    reflex corners is reachable; the grid supplies an independent mesh of
    fallback routes. Entirely float-based.
    """
    poly = _poly_floats(polygon)
    s = (float(start.x), float(start.y))
    g = (float(goal.x), float(goal.y))
    corners = [s, g] + [p for p in poly if p != s and p != g]

    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    grid = []
    nx = int((max(xs) - min(xs)) / pitch) + 1
    ny = int((max(ys) - min(ys)) / pitch) + 1
    index = {}
    for i in range(nx + 1):
        for j in range(ny + 1):
            x = min(xs) + i * pitch
            y = min(ys) + j * pitch
            if _inside_float(poly, x, y):
                index[(i, j)] = len(corners) + len(grid)
                grid.append((x, y))

    nodes = corners + grid
    edges = {i: [] for i in range(len(nodes))}

    def connect(i, j):
        d = math.hypot(nodes[i][0] - nodes[j][0], nodes[i][1] - nodes[j][1])
        edges[i].append((j, d))
        edges[j].append((i, d))

    for i in range(len(corners)):
        for j in range(i + 1, len(corners)):
            if _visible_float(poly, nodes[i], nodes[j]):
                connect(i, j)
    for (gi, gj), node in index.items():
        for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
            other = index.get((gi + di, gj + dj))
            if other is not None:
                connect(node, other)
    for i in range(len(corners)):
        cx, cy = nodes[i]
        gi = round((cx - min(xs)) / pitch)
        gj = round((cy - min(ys)) / pitch)
        for di in range(-2, 3):
            for dj in range(-2, 3):
                other = index.get((gi + di, gj + dj))
                if other is not None and _visible_float(poly, nodes[i], nodes[other]):
                    connect(i, other)

    dist = {0: 0.0}
    heap = [(0.0, 0)]
    while heap:
        dv, v = heapq.heappop(heap)
        if v == 1:
            return dv
        if dv > dist.get(v, math.inf):
            continue
        for u, w in edges[v]:
            nd = dv + w
            if nd < dist.get(u, math.inf):
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return None
