"""Right-angled frame of a two-generator group.

A loxodromic pair (A, B) with disjoint axes determines three half-turn
lines: L is the common perpendicular of the two axes, and the letter
lines LA, LB are the axes of the half-turns H_L * A and H_L * B.  The
axes of A, B, A^-1 B together with L, LA, LB close into a right-angled
hexagon; every adjacent pair is checked to be orthogonal.
"""

import cmath
import math
from cmath import phase

from .const import TOL, InvariantError
from .mobius import MobiusMap, HYPERBOLIC, LOXODROMIC, chordal, same_point
from .geodesics import (
    Geodesic,
    axis_of,
    common_perpendicular,
    endpoints_interleave,
    half_turn_about,
    intersection_point_h2,
    perpendicularity_residual,
    normalize_to_vertical,
    transform,
    _tangent_at,
)

TOKENS = ("L", "LA", "LB")


class GroupFrame:
    """Generator pair plus its axes, half-turn lines, and hexagon."""

    def __init__(self, gen_a, gen_b, axes, lines):
        self.genA = gen_a
        self.genB = gen_b
        self.axisA, self.axisB, self.axisAB = axes
        self.lineL, self.lineLA, self.lineLB = lines
        # hexagon sides in cyclic order; consecutive sides meet at
        # right angles
        self.hexagon = [self.axisA, self.lineLA, self.axisAB,
                        self.lineLB, self.axisB, self.lineL]
        self._letters = {
            "A": gen_a,
            "a": gen_a.inverse(),
            "B": gen_b,
            "b": gen_b.inverse(),
        }
        self._words = {"": MobiusMap.identity()}
        self._half_turns = {t: half_turn_about(self.line(t)) for t in TOKENS}
        self._loxodromic_depth = 0

    def line(self, token):
        if token == "L":
            return self.lineL
        if token == "LA":
            return self.lineLA
        if token == "LB":
            return self.lineLB
        raise ValueError("unknown line token %r" % token)

    def half_turn(self, token):
        return self._half_turns[token]

    def word_matrix(self, word):
        """Matrix of a word over A, B, a, b (lower case inverts)."""
        try:
            return self._words[word]
        except KeyError:
            pass
        m = self.word_matrix(word[:-1]).compose(self._letters[word[-1]])
        self._words[word] = m
        return m


def build_frame(gen_a, gen_b):
    for name, m in (("A", gen_a), ("B", gen_b)):
        if m.classify() not in (HYPERBOLIC, LOXODROMIC):
            raise ValueError("generator %s is not loxodromic" % name)
    axis_a = axis_of(gen_a)
    axis_b = axis_of(gen_b)
    axis_ab = axis_of(gen_a.inverse().compose(gen_b))
    line_l = common_perpendicular(axis_a, axis_b)
    hl = half_turn_about(line_l)
    lines = [line_l]
    for gen in (gen_a, gen_b):
        turn = hl.compose(gen)
        if not turn.is_half_turn():
            raise ValueError("generator does not split into two half-turns")
        lines.append(axis_of(turn))
    frame = GroupFrame(gen_a, gen_b, (axis_a, axis_b, axis_ab),
                       (line_l, lines[1], lines[2]))
    hexagon = frame.hexagon
    for i, side in enumerate(hexagon):
        residual = perpendicularity_residual(side, hexagon[(i + 1) % 6])
        if residual > TOL.perp:
            raise InvariantError(
                "hexagon corner %d is not right-angled (residual %.3g)"
                % (i, residual))
    return frame


def word_orbit(frame, max_len):
    """Yield (word, matrix) for every nonempty reduced word up to max_len."""
    items = sorted(frame._letters.items())

    def extend(word, matrix, depth):
        for letter, lm in items:
            if word and letter == word[-1].swapcase():
                continue
            grown = word + letter
            gm = matrix.compose(lm) if word else lm
            yield grown, gm
            if depth + 1 < max_len:
                yield from extend(grown, gm, depth + 1)

    yield from extend("", MobiusMap.identity(), 0)


def check_loxodromic(frame, max_len):
    """Spot-check that every reduced word up to max_len is loxodromic."""
    if frame._loxodromic_depth >= max_len:
        return
    for word, m in word_orbit(frame, max_len):
        if m.classify() not in (HYPERBOLIC, LOXODROMIC):
            raise ValueError("word %s is not loxodromic" % word)
    frame._loxodromic_depth = max_len


def extension_elements(frame, tokens):
    """Compose half-turns named by tokens, e.g. ("L", "LA")."""
    m = MobiusMap.identity()
    for token in tokens:
        m = m.compose(frame.half_turn(token))
    return m


def _real_matrix(m, tol):
    a, b, c, d = m.entries()
    real_part = max(abs(z.imag) for z in (a, b, c, d))
    imag_part = max(abs(z.real) for z in (a, b, c, d))
    return min(real_part, imag_part) < tol


def _hexagon_is_convex(sides):
    """All six corner turns have the same orientation."""
    corners = []
    for i in range(6):
        prev_side = sides[i]
        next_side = sides[(i + 1) % 6]
        try:
            corners.append(intersection_point_h2(prev_side, next_side))
        except ValueError:
            return False
    turns = []
    for i in range(6):
        v_prev = corners[i - 1]
        v_here = corners[i]
        v_next = corners[(i + 1) % 6]
        t_in = _tangent_at(sides[i], v_here)
        if (t_in.conjugate() * (v_here - v_prev)).real < 0:
            t_in = -t_in
        t_out = _tangent_at(sides[(i + 1) % 6], v_here)
        if (t_out.conjugate() * (v_next - v_here)).real < 0:
            t_out = -t_out
        turns.append((t_in.conjugate() * t_out).imag)
    return all(t > 0 for t in turns) or all(t < 0 for t in turns)


class ModelGroupReport:
    def __init__(self, all_hyperbolic, axes_disjoint, hexagon_convex):
        self.all_hyperbolic = all_hyperbolic
        self.axes_disjoint = axes_disjoint
        self.hexagon_convex = hexagon_convex

    @property
    def verdict(self):
        return self.all_hyperbolic and self.axes_disjoint and self.hexagon_convex

    def rows(self):
        return [("all_hyperbolic", self.all_hyperbolic),
                ("axes_disjoint", self.axes_disjoint),
                ("hexagon_convex", self.hexagon_convex),
                ("verdict", self.verdict)]


def validate_model_group(frame):
    """Certify that the pair keeps the upper half plane and is shaped
    like the planar model: hyperbolic generators, disjoint axes, convex
    right-angled hexagon."""
    for m in (frame.genA, frame.genB):
        if not _real_matrix(m, TOL.det * 100):
            raise ValueError("model validation needs planar generators")
    vocab = (frame.genA, frame.genB,
             frame.genA.inverse().compose(frame.genB))
    all_hyperbolic = all(m.classify() == HYPERBOLIC for m in vocab)
    axes = (frame.axisA, frame.axisB, frame.axisAB)
    if not all(g.is_real(TOL.fp * 100) for g in axes):
        raise ValueError("model validation needs planar axes")
    axes_disjoint = True
    for i in range(3):
        for j in range(i + 1, 3):
            if endpoints_interleave(axes[i], axes[j]):
                axes_disjoint = False
    hexagon_convex = False
    if axes_disjoint and all(g.is_real(TOL.fp * 100) for g in frame.hexagon):
        hexagon_convex = _hexagon_is_convex(frame.hexagon)
    return ModelGroupReport(all_hyperbolic, axes_disjoint, hexagon_convex)


class WindingReport:
    def __init__(self, found, margins, sample_count):
        self.found = found            # token -> bool
        self.margins = margins        # token -> widest gap minus pi
        self.sample_count = sample_count

    @property
    def verdict(self):
        return all(self.found.values())

    def rows(self):
        out = []
        for token in ("A", "B", "AB"):
            out.append(("support_" + token, self.found[token]))
        out.append(("sample_count", self.sample_count))
        out.append(("verdict", self.verdict))
        return out


def winding_group_check(frame, word_len=8, sample_cap=40000):
    """Sample limit points as fixed points of short words and look for
    a closed half plane through each core axis that the sample avoids.

    Seen from an axis put at (0, inf), such a half plane exists exactly
    when the sampled arguments leave an angular gap of at least pi.
    """
    seen = set()
    samples = []
    for word, m in word_orbit(frame, word_len):
        if m.is_identity():
            continue
        try:
            points = m.fixed_points()
        except ValueError:
            continue
        for z in points:
            key = "inf" if z is None else (round(z.real, 10), round(z.imag, 10))
            if key in seen:
                continue
            seen.add(key)
            samples.append(z)
            if len(samples) >= sample_cap:
                break
        if len(samples) >= sample_cap:
            break
    if len(samples) < 4:
        raise ValueError("not enough limit points sampled")
    found = {}
    margins = {}
    for token, axis in (("A", frame.axisA), ("B", frame.axisB),
                        ("AB", frame.axisAB)):
        n = normalize_to_vertical(axis)
        angles = []
        for z in samples:
            w = n.apply(z)
            if w is None:
                continue
            if abs(w) < TOL.fp or abs(w) > 1.0 / TOL.fp:
                continue
            angles.append(phase(w) % (2.0 * math.pi))
        angles.sort()
        widest = 0.0
        for i, ang in enumerate(angles):
            nxt = angles[(i + 1) % len(angles)]
            gap = (nxt - ang) % (2.0 * math.pi)
            if i + 1 == len(angles):
                gap = angles[0] + 2.0 * math.pi - ang
            widest = max(widest, gap)
        found[token] = widest >= math.pi - TOL.gap
        margins[token] = widest - math.pi
    return WindingReport(found, margins, len(samples))
