"""The equilateral triangulation of the Euclidean plane in axial coordinates.

Vertices are integer pairs (a, b); the six neighbors of every vertex are the
fixed offset set below, and embedding (a, b) at (a + b/2, b*sqrt(3)/2) makes
every edge have unit length. The simplicial automorphisms form the
lattice-affine group: the order-12 hexagonal point group plus translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from . import complexes
from .errors import EmptyLayer, PreconditionViolated, ScenarioParseError
from .exact import HALF, ExactScalar, PlanePoint, cross

Axial = Tuple[int, int]

OFFSETS: Tuple[Axial, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
_OFFSET_SET = frozenset(OFFSETS)


def neighbors(v: Axial) -> Tuple[Axial, ...]:
    a, b = v
    return tuple((a + da, b + db) for da, db in OFFSETS)


def lattice_distance(u: Axial, v: Axial) -> int:
    """Closed-form edge-path distance on the triangular lattice.

    With (p, q) = v - u: |p + q| when p and q do not have strictly opposite
    signs, max(|p|, |q|) otherwise. Agrees with BFS in the lattice graph.
    """
    p = v[0] - u[0]
    q = v[1] - u[1]
    if (p >= 0 and q >= 0) or (p <= 0 and q <= 0):
        return abs(p + q)
    return max(abs(p), abs(q))


def embed(v: Axial) -> PlanePoint:
    a, b = v
    return PlanePoint(ExactScalar(2 * a + b, 0, 2), ExactScalar(0, b, 2))


def corner_geodesic(x: Axial, y: Axial) -> Tuple[Axial, ...]:
    """The extreme monotone geodesic: one lattice direction, then the other.

    The farthest geodesic from the straight segment between the endpoints;
    useful as the empirical contrast to pipeline-selected geodesics.
    """
    p, q = y[0] - x[0], y[1] - x[1]
    if p * q >= 0:
        sa = 1 if p > 0 else -1
        sb = 1 if q > 0 else -1
        steps = [(sa, 0)] * abs(p) + [(0, sb)] * abs(q)
    elif abs(p) >= abs(q):
        sa = 1 if p > 0 else -1
        steps = [(sa, -sa)] * abs(q) + [(sa, 0)] * (abs(p) - abs(q))
    else:
        sb = 1 if q > 0 else -1
        steps = [(-sb, sb)] * abs(p) + [(0, sb)] * (abs(q) - abs(p))
    out = [x]
    for da, db in steps:
        out.append((out[-1][0] + da, out[-1][1] + db))
    return tuple(out)


def interval_box(x: Axial, y: Axial) -> Iterator[Axial]:
    """All lattice vertices on geodesics from x to y (closed form).

    For a same-sign difference (p, q) the interval is the full staircase box
    {x + (s, t)}; in the mixed-sign regime it is a parallelogram swept along
    the dominant direction.
    """
    p = y[0] - x[0]
    q = y[1] - x[1]
    if p < 0 or (p == 0 and q < 0):
        yield from interval_box(y, x)
        return
    if q >= 0:
        for s in range(p + 1):
            for t in range(q + 1):
                yield (x[0] + s, x[1] + t)
        return
    q = -q  # difference is (p, -q) with p, q > 0
    if p >= q:
        for s in range(p - q + 1):
            for t in range(q + 1):
                yield (x[0] + s + t, x[1] - t)
    else:
        for s in range(q - p + 1):
            for t in range(p + 1):
                yield (x[0] + t, x[1] - s - t)


def window(center: Axial = (0, 0), radius: int = 1) -> complexes.FlagComplex:
    """Materialize the radius-ball around center as a FlagComplex.

    Ball windows are convex, so internal BFS distances are true; the exact
    lattice metric is attached as a hint.
    """
    return complexes.materialize_window(
        center, neighbors, radius,
        metric_hint=lattice_distance, convex=True, plane_backed=True,
        name=f"eplane:r{radius}@{center[0]},{center[1]}")


# -- isometries ---------------------------------------------------------------

_ROT60 = ((0, -1), (1, 1))     # columns: images of (1,0) and (0,1)
_MIRROR = ((0, 1), (1, 0))     # swap reflection, fixes the a=b direction
_IDENT = ((1, 0), (0, 1))


def _mat_apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _mat_inv(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det not in (1, -1):
        raise PreconditionViolated(f"matrix not unimodular: {m}")
    return ((m[1][1] * det, -m[0][1] * det), (-m[1][0] * det, m[0][0] * det))


@dataclass(frozen=True)
class PlaneIsometry:
    """Simplicial automorphism of the lattice: v -> matrix*v + shift."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    shift: Axial

    def __post_init__(self):
        images = {_mat_apply(self.matrix, o) for o in OFFSETS}
        if images != _OFFSET_SET:
            raise PreconditionViolated(
                f"matrix {self.matrix} does not preserve the neighbor offsets")

    def apply(self, v: Axial) -> Axial:
        w = _mat_apply(self.matrix, v)
        return (w[0] + self.shift[0], w[1] + self.shift[1])

    __call__ = apply

    def compose(self, other: "PlaneIsometry") -> "PlaneIsometry":
        """self after other: (self.compose(other))(v) == self(other(v))."""
        m = _mat_mul(self.matrix, other.matrix)
        t = _mat_apply(self.matrix, other.shift)
        return PlaneIsometry(m, (t[0] + self.shift[0], t[1] + self.shift[1]))

    def inverse(self) -> "PlaneIsometry":
        inv = _mat_inv(self.matrix)
        t = _mat_apply(inv, self.shift)
        return PlaneIsometry(inv, (-t[0], -t[1]))

    def power(self, n: int) -> "PlaneIsometry":
        if n < 0:
            return self.inverse().power(-n)
        result = identity()
        base = self
        while n:
            if n & 1:
                result = base.compose(result)
            base = base.compose(base)
            n >>= 1
        return result

    @property
    def is_translation(self) -> bool:
        return self.matrix == _IDENT

    @property
    def is_identity(self) -> bool:
        return self.matrix == _IDENT and self.shift == (0, 0)

    def matrix_order(self) -> int:
        m, k = self.matrix, 1
        while m != _IDENT:
            m = _mat_mul(m, self.matrix)
            k += 1
        return k

    def translation_part_of_power(self) -> Axial:
        """Shift of self**order(matrix); zero iff some power fixes a plane point."""
        return self.power(self.matrix_order()).shift

    def __repr__(self):
        return f"PlaneIsometry({self.matrix}, shift={self.shift})"


def identity() -> PlaneIsometry:
    return PlaneIsometry(_IDENT, (0, 0))


def translation(a: int, b: int) -> PlaneIsometry:
    return PlaneIsometry(_IDENT, (a, b))


def glide(a: int, b: int) -> PlaneIsometry:
    """(u, v) -> (v + a, u + b): swap reflection composed with a translation."""
    return PlaneIsometry(_MIRROR, (a, b))


def rotation60(k: int, about: Axial = (0, 0)) -> PlaneIsometry:
    """Rotation by k*60 degrees about the given lattice vertex."""
    m = _IDENT
    for _ in range(k % 6):
        m = _mat_mul(_ROT60, m)
    w = _mat_apply(m, about)
    return PlaneIsometry(m, (about[0] - w[0], about[1] - w[1]))


def parse_isometry(text: str) -> PlaneIsometry:
    """Parse the literal syntax: translate(a,b) | glide(a,b) | rot60^k @ (a,b)."""
    s = text.strip().replace(" ", "")
    try:
        if s.startswith("translate(") and s.endswith(")"):
            a, b = (int(t) for t in s[len("translate("):-1].split(","))
            return translation(a, b)
        if s.startswith("glide(") and s.endswith(")"):
            a, b = (int(t) for t in s[len("glide("):-1].split(","))
            return glide(a, b)
        if s.startswith("rot60^"):
            head, _, tail = s.partition("@")
            k = int(head[len("rot60^"):])
            if tail:
                if not (tail.startswith("(") and tail.endswith(")")):
                    raise ValueError(tail)
                a, b = (int(t) for t in tail[1:-1].split(","))
            else:
                a = b = 0
            return rotation60(k, (a, b))
    except (ValueError, TypeError) as exc:
        raise ScenarioParseError(f"bad isometry literal {text!r}") from exc
    raise ScenarioParseError(f"bad isometry literal {text!r}")


# -- layer lines ----------------------------------------------------------------

_LATTICE_DIRECTIONS: Tuple[Axial, ...] = ((1, 0), (0, 1), (1, -1))


@dataclass(frozen=True)
class Line:
    """An exact line of the plane: a point plus a direction vector."""

    point: PlanePoint
    direction: PlanePoint

    def side(self, p: PlanePoint) -> int:
        return cross(self.direction, p - self.point).sign()

    def contains(self, p: PlanePoint) -> bool:
        return self.side(p) == 0


def layer_line(i: int, x: Axial, y: Axial) -> Line:
    """The straight line of the plane containing layer i between x and y.

    Layers of the lattice are always collinear. A single-vertex layer does
    not pin a direction; the lattice direction most transversal to the pair
    direction is used, with a fixed preference on the (rare) exact tie.
    """
    n = lattice_distance(x, y)
    if not 0 <= i <= n:
        raise PreconditionViolated(f"layer index {i} outside 0..{n}")
    layer = sorted(v for v in interval_box(x, y)
                   if lattice_distance(x, v) == i and lattice_distance(v, y) == n - i)
    if not layer:
        raise EmptyLayer(f"layer {i} between {x} and {y} is empty")
    if len(layer) >= 2:
        p0, p1 = embed(layer[0]), embed(layer[1])
        direction = p1 - p0
        for v in layer[2:]:
            if cross(direction, embed(v) - p0).sign() != 0:
                raise EmptyLayer(f"layer {i} between {x} and {y} is not collinear")
        return Line(p0, direction)
    # degenerate single-vertex layer: most transversal lattice direction
    if x == y:
        return Line(embed(layer[0]), embed((0, 1)) - embed((0, 0)))
    pair_dir = embed(y) - embed(x)
    best = None
    for d in _LATTICE_DIRECTIONS:
        u = embed(d) - embed((0, 0))
        score = cross(u, pair_dir)
        score = score * score  # |cross|^2; directions are unit so comparable
        if best is None or score > best[0]:
            best = (score, u)
    return Line(embed(layer[0]), best[1])


def apply_to_point(iso: PlaneIsometry, p: PlanePoint) -> PlanePoint:
    """Action of the isometry on exact plane coordinates.

    Decomposes p in the lattice basis (beta = 2y/sqrt(3), alpha = x - beta/2),
    both of which stay inside Q[sqrt(3)], then maps through the same affine
    action the lattice sees.
    """
    beta = p.y * 2 / ExactScalar(0, 1)
    alpha = p.x - beta * HALF
    origin = embed(iso.apply((0, 0)))
    e1 = embed(iso.apply((1, 0))) - origin
    e2 = embed(iso.apply((0, 1))) - origin
    return PlanePoint(origin.x + e1.x * alpha + e2.x * beta,
                      origin.y + e1.y * alpha + e2.y * beta)
