"""Determinant-one 2x2 complex matrices acting on the Riemann sphere.

Boundary points are complex numbers; the point at infinity is the value
None throughout the package.  Pole tests use exact zeros on purpose, so
infinity only ever appears as the explicit tag, never as a huge float.
"""

import cmath
import math

from .const import TOL

IDENTITY = "identity"
PARABOLIC = "parabolic"
ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"
LOXODROMIC = "loxodromic"

# classes whose elements have an invariant geodesic with two endpoints
AXIAL = (ELLIPTIC, HYPERBOLIC, LOXODROMIC)


def chordal(z, w):
    """Chordal distance between two extended complex numbers."""
    if z is None and w is None:
        return 0.0
    if z is None:
        return 2.0 / math.sqrt(1.0 + abs(w) ** 2)
    if w is None:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    num = 2.0 * abs(z - w)
    return num / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


def same_point(z, w, tol=None):
    return chordal(z, w) < (TOL.fp if tol is None else tol)


def is_real_point(z, tol=None):
    """Is z on the circle R u {inf}, measured chordally."""
    if z is None:
        return True
    t = TOL.fp if tol is None else tol
    return 2.0 * abs(z.imag) / (1.0 + abs(z) ** 2) < t


class MobiusMap:
    """An orientation-preserving isometry of H^3 in the upper half-space
    model, stored as a matrix normalized to determinant one.  The global
    sign is not meaningful; equality tests compare both signs."""

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        if abs(det) < TOL.det:
            raise ValueError("matrix is singular")
        s = cmath.sqrt(det)
        self.a = complex(a) / s
        self.b = complex(b) / s
        self.c = complex(c) / s
        self.d = complex(d) / s

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def scaling(cls, k):
        """z -> k z as a normalized matrix."""
        return cls(k, 0, 0, 1)

    def compose(self, other):
        """Matrix product self*other: apply other first."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, z):
        """Act on a boundary point; None is the point at infinity."""
        if z is None:
            if self.c == 0:
                return None
            return self.a / self.c
        w = self.c * z + self.d
        if w == 0:
            return None
        return (self.a * z + self.b) / w

    def trace(self):
        return self.a + self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def is_identity(self, tol=None):
        t = TOL.det if tol is None else tol
        plus = max(abs(self.a - 1), abs(self.b), abs(self.c), abs(self.d - 1))
        minus = max(abs(self.a + 1), abs(self.b), abs(self.c), abs(self.d + 1))
        return min(plus, minus) < t

    def same_as(self, other, tol=None):
        """Equality as isometries: matrices agree up to global sign."""
        t = TOL.det if tol is None else tol
        plus = max(
            abs(self.a - other.a), abs(self.b - other.b),
            abs(self.c - other.c), abs(self.d - other.d))
        minus = max(
            abs(self.a + other.a), abs(self.b + other.b),
            abs(self.c + other.c), abs(self.d + other.d))
        return min(plus, minus) < t

    def classify(self):
        if self.is_identity():
            return IDENTITY
        t = self.trace()
        if abs(t.imag) >= TOL.tr:
            return LOXODROMIC
        x = abs(t.real)
        if abs(x - 2.0) < TOL.tr:
            return PARABOLIC
        if x < 2.0:
            return ELLIPTIC
        return HYPERBOLIC

    def is_half_turn(self):
        return abs(self.trace()) < TOL.tr and not self.is_identity()

    def fixed_points(self):
        """Solutions of m(z) = z, as a tuple of one or two points."""
        if self.is_identity():
            raise ValueError("identity has no isolated fixed points")
        if self.c == 0:
            # infinity is fixed; a second fixed point needs a != d
            if abs(self.a - self.d) < TOL.fp:
                return (None,)
            return (self.b / (self.d - self.a), None)
        t = self.trace()
        disc = t * t - 4.0
        if abs(disc) < TOL.fp ** 2:
            return ((self.a - self.d) / (2.0 * self.c),)
        root = cmath.sqrt(disc)
        lead = self.a - self.d
        # add the root on the side that avoids cancellation; recover the
        # other root from the product -b/c, which stays accurate for
        # words with huge entries
        if (lead.real * root.real + lead.imag * root.imag) < 0.0:
            root = -root
        first = (lead + root) / (2.0 * self.c)
        second = -self.b / (self.c * first)
        return (second, first)

    def _stretch_at(self, p):
        # modulus of the derivative at a fixed point
        if p is None:
            return 1.0 / abs(self.a) ** 2
        return 1.0 / abs(self.c * p + self.d) ** 2

    def fixed_point_pair(self):
        """(repelling, attracting) fixed points of a translation map."""
        if self.classify() not in (HYPERBOLIC, LOXODROMIC):
            raise ValueError("fixed point dynamics need a translation axis")
        p, q = self.fixed_points()
        if self._stretch_at(p) > self._stretch_at(q):
            return p, q
        return q, p

    def __repr__(self):
        return "MobiusMap(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)
