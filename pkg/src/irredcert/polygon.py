"""phi-Newton polygons with exact rational slopes.

The polygon of f with respect to a monic phi (irreducible mod p) and a
prime p is the polygonal path through the points (i, v(f_{n-i})), where
f = sum(f_j * phi**j) is the phi-expansion, n its top index, and v the
Gaussian valuation at p. Points exist only where f_{n-i} is nonzero.

Construction follows the minimum-slope rule with ties broken toward the
largest index: from the current vertex, the next vertex is the point of
largest x among those achieving the minimal slope. Collinear runs are
therefore absorbed into single edges and edge slopes strictly increase.

Everything is exact: slopes are fractions, never floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .intpoly import IntPoly, phi_expand
from .valuation import vpx


class PolyPoint(NamedTuple):
    x: int
    y: int


class Edge(NamedTuple):
    dx: int
    dy: int
    slope: Fraction


@dataclass(frozen=True)
class NewtonPolygon:
    """Vertex chain of a lower polygonal path; edges are derived views.

    A freshly built polygon starts at the leftmost point; principal parts
    (horizontal edge removed) may start at positive x.
    """

    vertices: tuple[PolyPoint, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("polygon needs at least one vertex")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if b.x <= a.x:
                raise ValueError("vertices must have strictly increasing x")

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for a, b in zip(self.vertices, self.vertices[1:]):
            dx = b.x - a.x
            dy = b.y - a.y
            out.append(Edge(dx, dy, Fraction(dy, dx)))
        return tuple(out)

    @property
    def width(self) -> int:
        """Total horizontal projection of the path."""
        return self.vertices[-1].x - self.vertices[0].x


def polygon_points(f: IntPoly, phi: IntPoly, p: int) -> list[PolyPoint]:
    """Valuation points (i, v(f_{n-i})) of the phi-expansion of f at p.

    phi must be monic of degree >= 1 (and, for the polygon to mean anything
    downstream, irreducible mod p; callers verify that). Rejects f = 0 and
    phi | f, where the polygon is undefined.
    """
    if f.is_zero:
        raise ValueError("polygon of the zero polynomial is undefined")
    expansion = phi_expand(f, phi)
    parts = expansion.parts
    n = len(parts) - 1
    if parts[0].is_zero:
        raise ValueError("phi divides f; polygon is undefined")
    points = []
    for i in range(n + 1):
        part = parts[n - i]
        if not part.is_zero:
            points.append(PolyPoint(i, vpx(part, p)))
    return points


def build_polygon(points: Iterable[PolyPoint]) -> NewtonPolygon:
    """Lower polygonal path by the min-slope / largest-index rule.

    Slope comparisons use integer cross-multiplication, so the result is
    exact. Input points must have strictly increasing x; the first and last
    point are always vertices.
    """
    pts = [PolyPoint(x, y) for x, y in points]
    if not pts:
        raise ValueError("no points to build a polygon from")
    for a, b in zip(pts, pts[1:]):
        if b.x <= a.x:
            raise ValueError("points must have strictly increasing x")
    vertices = [pts[0]]
    cur = 0
    while cur < len(pts) - 1:
        cx, cy = pts[cur]
        best = cur + 1
        bdx = pts[best].x - cx
        bdy = pts[best].y - cy
        for j in range(cur + 2, len(pts)):
            dx = pts[j].x - cx
            dy = pts[j].y - cy
            # dy/dx <= bdy/bdx, exact; ties favour the larger index
            if dy * bdx <= bdy * dx:
                best, bdx, bdy = j, dx, dy
        vertices.append(pts[best])
        cur = best
    return NewtonPolygon(tuple(vertices))


def principal_part(np: NewtonPolygon) -> NewtonPolygon:
    """The polygon minus its horizontal edge: the positive-slope suffix.

    Edges of a polygon have strictly increasing slopes, so the edges with
    positive slope form a contiguous suffix; for the polygons arising here
    (nonnegative slopes throughout) dropping the rest removes exactly the
    slope-zero edge, if any. With no positive-slope edge left the result is
    a single-vertex polygon with no edges.
    """
    verts = np.vertices
    k = len(verts) - 1
    while k > 0 and verts[k].y > verts[k - 1].y:
        # walking left while edges stay positive-slope
        k -= 1
    return NewtonPolygon(verts[k:])


def rightmost_slope(np: NewtonPolygon) -> Fraction:
    edges = np.edges
    if not edges:
        raise ValueError("polygon has no edges")
    return edges[-1].slope


def slope_zero_length(np: NewtonPolygon) -> int:
    """Horizontal projection of the slope-zero edge; 0 when absent."""
    for e in np.edges:
        if e.slope == 0:
            return e.dx
    return 0


def merge_polygons(a, b) -> list[Edge]:
    """Predicted principal-part edges of a product, for Lemma-style oracles.

    Accepts NewtonPolygon values (principal part is taken) or bare edge
    sequences of (dx, dy, slope) triples. Edges from both inputs are sorted
    by slope and equal slopes are coalesced. Used only as a test oracle
    against polygons of actual products.
    """
    def edge_list(v):
        if isinstance(v, NewtonPolygon):
            return list(principal_part(v).edges)
        return [Edge(dx, dy, Fraction(slope)) for dx, dy, slope in v]

    pool = sorted(edge_list(a) + edge_list(b), key=lambda e: e.slope)
    merged: list[Edge] = []
    for e in pool:
        if merged and merged[-1].slope == e.slope:
            last = merged[-1]
            merged[-1] = Edge(last.dx + e.dx, last.dy + e.dy, e.slope)
        else:
            merged.append(e)
    return merged
