"""Geodesics of the upper half-plane and half-space by their endpoints."""

import cmath
import math

from .const import TOL
from .mobius import MobiusMap, chordal, same_point, is_real_point, AXIAL


class Geodesic:
    """An unordered pair of distinct boundary points."""

    def __init__(self, e1, e2):
        if chordal(e1, e2) <= TOL.fp:
            raise ValueError("geodesic endpoints coincide")
        self.e1 = None if e1 is None else complex(e1)
        self.e2 = None if e2 is None else complex(e2)

    def endpoints(self):
        return (self.e1, self.e2)

    def same_as(self, other, tol=None):
        straight = max(chordal(self.e1, other.e1), chordal(self.e2, other.e2))
        crossed = max(chordal(self.e1, other.e2), chordal(self.e2, other.e1))
        return min(straight, crossed) < (TOL.fp if tol is None else tol)

    def has_endpoint(self, z, tol=None):
        return same_point(self.e1, z, tol) or same_point(self.e2, z, tol)

    def is_real(self, tol=None):
        return is_real_point(self.e1, tol) and is_real_point(self.e2, tol)

    def __repr__(self):
        return "Geodesic(%r, %r)" % (self.e1, self.e2)


def transform(m, g):
    """Image of a geodesic under a MobiusMap."""
    return Geodesic(m.apply(g.e1), m.apply(g.e2))


def half_turn_about(g):
    """The order-two rotation of H^3 that fixes g pointwise."""
    p, q = g.e1, g.e2
    if p is None:
        p, q = q, p
    if q is None:
        # fixes p and infinity: z -> 2p - z
        return MobiusMap(1.0, -2.0 * p, 0.0, -1.0)
    return MobiusMap(p + q, -2.0 * p * q, 2.0, -(p + q))


def axis_of(m):
    """Invariant geodesic joining the fixed points of m."""
    if m.classify() not in AXIAL:
        raise ValueError("axis undefined for this isometry")
    pts = m.fixed_points()
    if len(pts) != 2:
        raise ValueError("axis undefined for this isometry")
    return Geodesic(pts[0], pts[1])


def common_perpendicular(g1, g2):
    """The unique geodesic orthogonal to both g1 and g2.

    Computed as the axis of the composed half-turns.  For geodesics that
    cross, the result is the rotation axis through the crossing point,
    which is the correct degenerate limit and needs no case split.
    """
    for e in g2.endpoints():
        if g1.has_endpoint(e):
            raise ValueError("perpendicular undefined (parallel/asymptotic)")
    prod = half_turn_about(g1).compose(half_turn_about(g2))
    return axis_of(prod)


def perpendicularity_residual(g1, g2):
    """How far the half-turn about g1 is from swapping g2's endpoints.

    Zero exactly when the two geodesics meet at a right angle.
    """
    h = half_turn_about(g1)
    u = h.apply(g2.e1)
    v = h.apply(g2.e2)
    return max(chordal(u, g2.e2), chordal(v, g2.e1))


def _circle_param(x):
    # position of a real boundary point on the circle at infinity,
    # normalized into [0, pi) with infinity at 0
    if x is None:
        return 0.0
    return math.atan(float(x.real if isinstance(x, complex) else x)) + math.pi / 2.0


def endpoints_interleave(g1, g2):
    """Do the endpoint pairs separate each other on the boundary circle?

    Both geodesics must have real endpoints; this is the crossing test
    for the half-plane.
    """
    a = _circle_param(g1.e1)
    b = _circle_param(g1.e2)
    span = (b - a) % math.pi
    u = ((_circle_param(g2.e1) - a) % math.pi) < span
    v = ((_circle_param(g2.e2) - a) % math.pi) < span
    return u != v


def _center_radius(g):
    # Euclidean center and radius of a real geodesic's semicircle;
    # center None means a vertical line at radius = abscissa
    u, v = g.e1, g.e2
    if u is None or v is None:
        x = v.real if u is None else u.real
        return None, x
    return (u.real + v.real) / 2.0, abs(u.real - v.real) / 2.0


def intersection_point_h2(g1, g2):
    """The upper half-plane point where two crossing geodesics meet."""
    if not (g1.is_real() and g2.is_real()):
        raise ValueError("intersection point needs planar geodesics")
    if not endpoints_interleave(g1, g2):
        raise ValueError("geodesics are disjoint in H^2")
    c1, r1 = _center_radius(g1)
    c2, r2 = _center_radius(g2)
    if c1 is None and c2 is None:
        raise ValueError("geodesics are disjoint in H^2")
    if c1 is None:
        x, c, r = r1, c2, r2
    elif c2 is None:
        x, c, r = r2, c1, r1
    else:
        x = (r1 * r1 - r2 * r2 - c1 * c1 + c2 * c2) / (2.0 * (c2 - c1))
        c, r = c1, r1
    y2 = r * r - (x - c) ** 2
    if y2 <= 0.0:
        raise ValueError("geodesics are disjoint in H^2")
    return complex(x, math.sqrt(y2))


def _tangent_at(g, z):
    # a tangent direction of g at the interior point z
    c, r = _center_radius(g)
    if c is None:
        return 1j
    return 1j * (z - c)


def angle_at_intersection_h2(g1, g2):
    """Crossing angle in (0, pi), measured from g1 to g2 counterclockwise.

    Swapping the arguments replaces the angle by pi minus it; only the
    right-angle property is symmetric.
    """
    z = intersection_point_h2(g1, g2)
    t1 = _tangent_at(g1, z)
    t2 = _tangent_at(g2, z)
    return cmath.phase(t2 / t1) % math.pi


def cross_ratio(a, b, c, d):
    """(a-c)(b-d) / ((a-d)(b-c)) with the usual limits at infinity."""
    pts = [a, b, c, d]
    if sum(1 for p in pts if p is None) > 1:
        raise ValueError("cross ratio allows at most one point at infinity")
    for i in range(4):
        for j in range(i + 1, 4):
            if same_point(pts[i], pts[j]):
                raise ValueError("cross ratio needs pairwise distinct points")
    if a is None:
        return (b - d) / (b - c)
    if b is None:
        return (a - c) / (a - d)
    if c is None:
        return (b - d) / (a - d)
    if d is None:
        return (a - c) / (b - c)
    return ((a - c) * (b - d)) / ((a - d) * (b - c))


def normalize_to_vertical(g):
    """A MobiusMap sending g.e1 to 0 and g.e2 to infinity."""
    u, v = g.e1, g.e2
    if u is None:
        return MobiusMap(0.0, 1.0, 1.0, -v)
    if v is None:
        return MobiusMap(1.0, -u, 0.0, 1.0)
    return MobiusMap(1.0, -u, 1.0, -v)


def foot_parameter(g):
    """Signed position along the vertical axis (0, inf) of the foot of
    the perpendicular dropped from g, in hyperbolic length units.

    For g orthogonal to the axis this is where it crosses; in general it
    is where the common perpendicular meets the axis.  Endpoints of g
    must avoid 0 and infinity.
    """
    u, v = g.e1, g.e2
    if u is None or v is None or u == 0 or v == 0:
        raise ValueError("foot parameter undefined on a shared endpoint")
    return 0.5 * (math.log(abs(u)) + math.log(abs(v)))


def apply_h3(m, w, t):
    """Act on an interior point of H^3, given as (horizontal complex
    coordinate, height)."""
    cw = m.c * w + m.d
    den = abs(cw) ** 2 + abs(m.c) ** 2 * t * t
    w2 = ((m.a * w + m.b) * cw.conjugate() + m.a * m.c.conjugate() * t * t) / den
    return w2, t / den


def distance_to_geodesic(w, t, g):
    """Hyperbolic distance from the interior point (w, t) to g."""
    n = normalize_to_vertical(g)
    w2, t2 = apply_h3(n, w, t)
    r = math.sqrt(abs(w2) ** 2 + t2 * t2)
    return math.acosh(max(1.0, r / t2))
