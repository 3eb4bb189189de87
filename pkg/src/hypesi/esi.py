"""Self-intersection records of a primitive geodesic in the planar model.

The axis of a primitive word crosses the orbit of the three half-turn
lines in a periodic pattern: per period it meets p+q translated copies
of L, alternating with p+q letter lines, one per letter of the word.
Two of the crossings per period are right angles and belong to the
reflection symmetry of the curve; the rest project to the essential
self-intersections of the curve in the quotient.

Long words translate far along their axis, so far-out crossings are not
representable as endpoint pairs in the original plane coordinates (the
endpoints agree to more digits than a double holds).  Each crossing is
therefore computed in the frame of the cyclic rotation of the word that
brings it next to the base lines, where everything is well scaled, and
positions are chained together by one increment per letter.  Published
line geometry lives in the axis-aligned chart (axis at (0, inf),
repelling end at 0, base L crossing at parameter 0); points and
endpoint values in the original plane are provided alongside.
"""

import math

from .const import TOL, InvariantError
from . import words
from .farey import RationalLabel, continued_fraction, primitive_word
from .geodesics import (
    Geodesic,
    angle_at_intersection_h2,
    axis_of,
    foot_parameter,
    intersection_point_h2,
    normalize_to_vertical,
    transform,
)
from .mobius import MobiusMap, HYPERBOLIC, LOXODROMIC
from .frames import validate_model_group

LINE_OF_LETTER = {"A": "LA", "B": "LB"}
# conjugating a word by a letter-line half-turn inverts every letter
# and then conjugates by the inverse generator
TURN_CONJUGATOR = {"L": "", "LA": "a", "LB": "b"}

VERTICAL = Geodesic(0.0, None)


def _as_label(x):
    if isinstance(x, RationalLabel):
        return x
    return RationalLabel.parse(x)


def translation_length(m):
    rep, att = m.fixed_point_pair()
    n = normalize_to_vertical(Geodesic(rep, att))
    straight = n.compose(m).compose(n.inverse())
    stretch = max(abs(straight.a), abs(straight.d))
    return 2.0 * math.log(stretch)


def axis_chart(frame, m):
    """Map sending the axis of m to (0, inf) with the repelling end at
    0, scaled so the plain L line gets foot parameter zero."""
    rep, att = m.fixed_point_pair()
    n = normalize_to_vertical(Geodesic(rep, att))
    shift = foot_parameter(transform(n, frame.lineL))
    return MobiusMap.scaling(math.exp(-shift)).compose(n)


def _structural_record(letters, t):
    """Conjugator word and line token of the crossing at slot t.

    Slots count crossings along the axis: even slots carry copies of L,
    odd slots carry letter lines, and slot arithmetic is periodic with
    period twice the word length under translation by the word."""
    k = len(letters)
    shift, base = divmod(t, 2 * k)
    if base % 2 == 0:
        i = base // 2
        token = "L"
    else:
        i = (base + 1) // 2
        token = LINE_OF_LETTER[letters[i - 1]]
    conj = letters[:i]
    if shift > 0:
        conj = letters * shift + conj
    elif shift < 0:
        conj = words.reduce_word(words.invert_word(letters * -shift) + conj)
    return conj, token


def _word_level_perpendicular(letters, conj, token):
    """Whether the half-turn about the labeled line carries the axis
    word to its inverse, which happens exactly at right angles."""
    x = words.conjugate(letters, words.invert_word(conj))
    x = words.letterwise_inverse(x)
    x = words.conjugate(x, TURN_CONJUGATOR[token])
    x = words.conjugate(x, conj)
    return x == words.invert_word(letters)


class WordScaffold:
    """Per-rotation frames of one primitive word on one group.

    rotations[i] holds (matrix, chart) for the i-th cyclic rotation of
    the word; slot positions are chained from the per-letter increments
    so that no far translate is ever evaluated in unstable coordinates.
    """

    def __init__(self, frame, x):
        x = _as_label(x)
        self.frame = frame
        self.label = x
        self.word = primitive_word(x)
        letters = self.word.letters
        k = len(letters)
        self.rotations = []
        for i in range(k):
            rotated = letters[i:] + letters[:i]
            m = frame.word_matrix(rotated)
            if m.classify() not in (HYPERBOLIC, LOXODROMIC):
                raise ValueError("word %s is not loxodromic here" % rotated)
            self.rotations.append((m, axis_chart(frame, m)))
        self.matrix = self.rotations[0][0]
        self.axis = axis_of(self.matrix)
        self.chart = self.rotations[0][1]
        self.length = translation_length(self.matrix)
        wall_offsets = []
        steps = []
        for i in range(k):
            m, chart = self.rotations[i]
            wall_line = frame.line(LINE_OF_LETTER[letters[i - 1]])
            wall_offsets.append(foot_parameter(transform(chart, wall_line)))
            step_line = transform(frame.word_matrix(letters[i]), frame.lineL)
            steps.append(foot_parameter(transform(chart, step_line)))
        if abs(sum(steps) - self.length) > 1e3 * k * TOL.fp:
            raise InvariantError(
                "letter increments of %s do not add up to its period" % x)
        base = [0.0]
        for i in range(1, k):
            base.append(base[-1] + steps[i - 1])
        # params and rotation of period slots 0 .. 2k-1
        self.slot_param = {}
        self.slot_rotation = {}
        self.slot_perp = {}
        for t in range(2 * k):
            i = (t + 1) // 2
            self.slot_rotation[t] = i % k
            if t % 2 == 0:
                self.slot_param[t] = base[i]
            elif i < k:
                self.slot_param[t] = base[i] + wall_offsets[i]
            else:
                self.slot_param[t] = self.length + wall_offsets[0]
            conj, token = _structural_record(letters, t)
            self.slot_perp[t] = _word_level_perpendicular(letters, conj, token)
        ordered = [self.slot_param[t] for t in range(2 * k)]
        for lo, hi in zip(ordered, ordered[1:]):
            if not hi > lo:
                raise InvariantError(
                    "crossing order broken along the axis of %s" % x)
        if not ordered[-1] < self.length:
            raise InvariantError(
                "crossing order broken along the axis of %s" % x)
        # complex scale of the chart transition to each rotated frame,
        # and of one full translation by the word
        self.transition = []
        for i in range(k):
            prefix = frame.word_matrix(letters[:i])
            t = self.chart.compose(prefix).compose(self.rotations[i][1].inverse())
            self.transition.append(t.a * t.a)
        shiftmap = self.chart.compose(self.matrix).compose(self.chart.inverse())
        self.period_scale = shiftmap.a * shiftmap.a

    def param(self, t):
        shift, base = divmod(t, 2 * len(self.word.letters))
        return self.slot_param[base] + shift * self.length

    def rotation(self, t):
        return self.slot_rotation[t % (2 * len(self.word.letters))]

    def perpendicular(self, t):
        return self.slot_perp[t % (2 * len(self.word.letters))]

    def chart_scale(self, t):
        """Complex factor placing the local frame of slot t in the chart."""
        k = len(self.word.letters)
        shift, base = divmod(t, 2 * k)
        s = self.transition[self.slot_rotation[base]]
        return s * self.period_scale ** shift

    def local_line(self, t):
        """The base half-turn line met at slot t, in plane coordinates."""
        conj, token = _structural_record(self.word.letters, t)
        return self.frame.line(token)

    def chart_line(self, t):
        """Line met at slot t, in the axis-aligned chart."""
        i = self.rotation(t)
        img = transform(self.rotations[i][1], self.local_line(t))
        return transform(MobiusMap.scaling(self.chart_scale(t)), img)


class LabeledLine:
    """One crossing of the axis: which translated half-turn line, where."""

    def __init__(self, index, conjugator, token, rotation, slot, param,
                 perpendicular):
        self.index = index
        self.conjugator = conjugator
        self.token = token
        self.rotation = rotation
        self.slot = slot
        self.param = param
        self.perpendicular = perpendicular

    @property
    def line_word(self):
        return (self.conjugator + ":" if self.conjugator else "") + self.token


def labeled_lines(frame, x):
    """All crossings of the axis of the word of x in one period window.

    Returns (scaffold, lines); the window starts at the last
    right-angled letter-line crossing below the L crossing at parameter
    zero, and its 2(p+q) crossings get indices -(p+q) .. p+q-1, with
    the two right angles landing at -(p+q) and 0.
    """
    scaffold = WordScaffold(frame, x)
    letters = scaffold.word.letters
    k = len(letters)
    anchor = None
    for t in range(1, 2 * k, 2):
        if scaffold.slot_perp[t]:
            anchor = t - 2 * k
    if anchor is None:
        raise InvariantError("no anchoring right angle for %s" % x)
    lines = []
    for rank in range(2 * k):
        t = anchor + rank
        conj, token = _structural_record(letters, t)
        lines.append(LabeledLine(
            rank - k, conj, token, scaffold.rotation(t), t,
            scaffold.param(t), scaffold.perpendicular(t)))
    for ll in lines:
        if ll.perpendicular != (ll.index in (-k, 0)):
            raise InvariantError(
                "right angles of %s sit at index %d instead of the window ends"
                % (x, ll.index))
    return scaffold, lines


class EsiRecord:
    """One crossing record.

    line is a Geodesic in the axis-aligned chart of the set; the pair
    plane_endpoints holds the same line's endpoint values in the
    original plane, which may round to equal doubles far down the axis.
    point and angle are plane quantities.
    """

    def __init__(self, index, conjugator, token, line, plane_endpoints,
                 param, point, angle):
        self.index = index
        self.conjugator = conjugator
        self.token = token
        self.line = line
        self.plane_endpoints = plane_endpoints
        self.param = param
        self.point = point
        self.angle = angle

    @property
    def is_right(self):
        return abs(self.angle - 0.5 * math.pi) < TOL.ang

    @property
    def line_word(self):
        return (self.conjugator + ":" if self.conjugator else "") + self.token


class EsiSet:
    def __init__(self, frame, label, word, axis, chart, period_length,
                 records):
        self.frame = frame
        self.label = label
        self.word = word
        self.axis = axis
        self.chart = chart
        self.period_length = period_length
        self.records = records
        self.essential_count = sum(1 for r in records if not r.is_right)

    @property
    def quotient_count(self):
        return self.essential_count // 2

    @property
    def expected_counts(self):
        k = self.label.length
        return 2 * (k - 1), k - 1

    def record(self, index):
        for r in self.records:
            if r.index == index:
                return r
        raise KeyError(index)


def esi_points(frame, x):
    """Intersection records of the curve of x on a validated planar group."""
    x = _as_label(x)
    if not validate_model_group(frame).verdict:
        raise ValueError("group fails model validation")
    scaffold, lines = labeled_lines(frame, x)
    records = []
    back = scaffold.chart.inverse()
    for ll in lines:
        local_axis = axis_of(scaffold.rotations[ll.rotation][0])
        base_line = scaffold.local_line(ll.slot)
        local_point = intersection_point_h2(local_axis, base_line)
        angle = angle_at_intersection_h2(local_axis, base_line)
        mover = frame.word_matrix(ll.conjugator)
        point = mover.apply(local_point)
        chart_line = scaffold.chart_line(ll.slot)
        ends = tuple(back.apply(e) for e in chart_line.endpoints())
        rec = EsiRecord(ll.index, ll.conjugator, ll.token, chart_line,
                        ends, ll.param, point, angle)
        if rec.is_right != ll.perpendicular:
            raise InvariantError(
                "angle at index %d of %s disagrees with the word test"
                % (ll.index, x))
        records.append(rec)
    out = EsiSet(frame, x, scaffold.word, scaffold.axis, scaffold.chart,
                 scaffold.length, records)
    if out.essential_count % 2:
        raise InvariantError("odd essential count for %s" % x)
    return out


def _integer_entries(m):
    out = []
    for e in m.entries():
        if e.imag != 0.0 or e.real != round(e.real):
            raise ValueError("the sweep oracle needs integer generators")
        out.append(int(e.real))
    return out


def _integer_boundary(e):
    if e is None:
        raise ValueError("the sweep oracle needs finite line endpoints")
    if abs(e.imag) > TOL.fp or abs(e.real - round(e.real)) > TOL.fp:
        raise ValueError("the sweep oracle needs integer line endpoints")
    return int(round(e.real))


def _surd_ratio(x_int, y_int, disc, root):
    """(x + y*sqrt(disc)) / (x - y*sqrt(disc)) without cancellation."""
    xf = float(x_int)
    s = float(y_int) * root
    mag = abs(xf) + abs(s)
    if mag == 0.0:
        raise ZeroDivisionError
    plus = xf + s
    minus = xf - s
    if abs(plus) < 0.1 * mag or abs(minus) < 0.1 * mag:
        exact = float(x_int * x_int - y_int * y_int * disc)
        if abs(plus) < abs(minus):
            plus = exact / minus
        else:
            minus = exact / plus
    return plus / minus


def brute_force_esi_count(frame, x, word_cap):
    """Count essential crossings by sweeping every group translate of
    the three half-turn lines under words up to word_cap.

    Runs in exact integer arithmetic on the word matrices plus one
    square root for the axis, so it shares no code path with the
    structural slot computation.
    """
    x = _as_label(x)
    if word_cap < x.length:
        raise ValueError("word cap %d is too small for %s" % (word_cap, x))
    if not validate_model_group(frame).verdict:
        raise ValueError("group fails model validation")
    gens = {w: _integer_entries(frame.word_matrix(w)) for w in "ABab"}
    word = primitive_word(x)
    ea, eb, ec, ed = _integer_entries(frame.word_matrix(word.letters))
    disc = (ea + ed) ** 2 - 4 * (ea * ed - eb * ec)
    if disc <= 0:
        raise ValueError("axis word is not hyperbolic")
    root = math.sqrt(disc)
    # repelling fixed point takes the root against the trace sign
    sigma = 1 if ea + ed > 0 else -1
    lam = (abs(ea + ed) + root) / 2.0
    length = 2.0 * math.log(lam)

    def chart_value(num, den):
        # (z - repelling) / (z - attracting) for z = num/den
        base = 2 * ec * num - (ea - ed) * den
        return _surd_ratio(base, sigma * den, disc, root)

    crossings = {}

    def visit(mat, ends):
        a, b, c, d = mat
        vals = []
        for z in ends:
            num = a * z + b
            den = c * z + d
            if den == 0:
                vals.append(1.0)
            else:
                vals.append(chart_value(num, den))
        w1, w2 = vals
        if not w1 * w2 < 0.0:
            return
        param = 0.5 * math.log(-w1 * w2)
        height = math.sqrt(-w1 * w2)
        center = (w1 + w2) / 2.0
        angle = math.atan2(height, -center) % math.pi
        crossings[(round(param, 6), round(angle, 6))] = (param, angle)

    base_lines = []
    for token in ("L", "LA", "LB"):
        e1, e2 = frame.line(token).endpoints()
        base_lines.append((_integer_boundary(e1), _integer_boundary(e2)))
    identity = (1, 0, 0, 1)
    for ends in base_lines:
        visit(identity, ends)

    def sweep(mat, last, depth):
        for letter in "ABab":
            if last and letter == last.swapcase():
                continue
            g = gens[letter]
            grown = (mat[0] * g[0] + mat[1] * g[2],
                     mat[0] * g[1] + mat[1] * g[3],
                     mat[2] * g[0] + mat[3] * g[2],
                     mat[2] * g[1] + mat[3] * g[3])
            for ends in base_lines:
                visit(grown, ends)
            if depth + 1 < word_cap:
                sweep(grown, letter, depth + 1)

    sweep(identity, "", 0)

    rights = [p for p, ang in crossings.values()
              if abs(ang - 0.5 * math.pi) < TOL.ang]
    anchor = None
    for p in rights:
        if -length < p < 0.0 and (anchor is None or p > anchor):
            anchor = p
    if anchor is None:
        raise InvariantError("sweep found no anchoring right angle")
    lo = anchor - 1e-6
    hi = lo + length
    count = 0
    for param, angle in crossings.values():
        if lo <= param < hi and abs(angle - 0.5 * math.pi) >= TOL.ang:
            count += 1
    return count


def _loop_walk(marks, feet):
    """Trace the quotient curve through its marks.

    marks: list of (param, index, token) for the kept crossings;
    feet: list of (param, token) for the two right-angled crossings.
    Marks at opposite indices are identified; walking leaves a mark,
    runs to the next mark along the axis, and resurfaces at the partner
    of that mark.  Each closed loop collects the tokens of the seams it
    touches, including feet passed along the way.
    """
    order = sorted(marks)
    by_index = {index: (param, token) for param, index, token in order}
    position = {index: rank for rank, (param, index, token) in enumerate(order)}
    visited = set()
    loops = []
    for param, index, token in order:
        if index in visited:
            continue
        touched = set()
        here = index
        while here not in visited:
            visited.add(here)
            rank = position[here]
            nxt_param, nxt_index, nxt_token = order[(rank + 1) % len(order)]
            here_param = by_index[here][0]
            wrapped = nxt_param <= here_param
            for foot_param, foot_token in feet:
                inside = (here_param < foot_param < nxt_param
                          or (wrapped and (foot_param > here_param
                                           or foot_param < nxt_param)))
                if inside:
                    touched.add(foot_token)
            touched.add(nxt_token)
            if by_index[-nxt_index][1] != nxt_token:
                raise InvariantError(
                    "paired marks %d and %d lie on different seams"
                    % (nxt_index, -nxt_index))
            here = -nxt_index
        if len(touched) != 2 or "L" not in touched:
            raise InvariantError("loop touches seams %r" % sorted(touched))
        loops.append("A" if "LA" in touched else "B")
    return loops


def _cyclic_runs(tags):
    n = len(tags)
    if all(t == tags[0] for t in tags):
        return [n]
    start = next(i for i in range(n) if tags[i] != tags[i - 1])
    runs = []
    last = None
    for i in range(n):
        t = tags[(start + i) % n]
        if runs and t == last:
            runs[-1] += 1
        else:
            runs.append(1)
            last = t
    return runs


class LoopDecomposition:
    """Tags of the loops the curve decomposes into, in the order first
    met along the axis, with cyclic run lengths of equal tags."""

    def __init__(self, loops, run_lengths):
        self.loops = loops
        self.run_lengths = run_lengths

    @property
    def count(self):
        return len(self.loops)

    def totals(self):
        return {"A": self.loops.count("A"), "B": self.loops.count("B")}


def loop_decomposition(frame, esi):
    if esi.frame is not frame:
        raise ValueError("records come from a different frame")
    x = esi.label
    if x.p == 0 or x.q == 0:
        return LoopDecomposition(["A" if x.p == 0 else "B"], [1])
    marks = [(r.param, r.index, r.token) for r in esi.records if not r.is_right]
    feet = [(r.param, r.token) for r in esi.records if r.is_right]
    loops = _loop_walk(marks, feet)
    return LoopDecomposition(loops, _cyclic_runs(loops))


def winding_pattern(x, decomposition):
    """Loop-tag run lengths next to the continued fraction of x."""
    x = _as_label(x)
    return list(decomposition.run_lengths), continued_fraction(x)


def runs_match_continued_fraction(x, decomposition):
    """The calibrated tie between loop tags and the continued fraction:
    the tag sequence consists of exactly two cyclic runs whose lengths
    are the two continuants of the fraction, q for the A side and p for
    the B side."""
    x = _as_label(x)
    p, q = x.p, x.q
    if p == 0 or q == 0:
        return decomposition.loops in (["A"], ["B"])
    tags = decomposition.loops
    if tags.count("A") != q or tags.count("B") != p:
        return False
    runs = _cyclic_runs(tags)
    return sorted(runs) == sorted([p, q])
