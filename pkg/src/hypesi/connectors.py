"""Orthogonal connectors of a primitive geodesic in the bent setting.

When the group leaves the plane, a crossing of the axis with a
half-turn line opens up into a pair (axis, line) joined by a common
perpendicular.  The connector record keeps that perpendicular, where
its feet sit, and the residual of its invariance under the half-turn.
Kept records at opposite indices descend to the same connector of the
quotient curve, so the loop structure of the planar count survives
deformation unchanged.
"""

import math

from .const import TOL, InvariantError
from .farey import primitive_word
from .geodesics import (
    Geodesic,
    axis_of,
    common_perpendicular,
    foot_parameter,
    half_turn_about,
    normalize_to_vertical,
    perpendicularity_residual,
    transform,
)
from .mobius import chordal
from .frames import check_loxodromic, word_orbit, TOKENS
from .esi import (
    LoopDecomposition,
    _as_label,
    _cyclic_runs,
    _loop_walk,
    labeled_lines,
)


def generalized_esi_pairs(frame, x):
    """The kept (line, axis) pairs of one period window, after checking
    that the window is built on a loxodromic word with a clean crossing
    pattern."""
    x = _as_label(x)
    check_loxodromic(frame, min(x.length, 6))
    word, m, axis, chart, length, lines = labeled_lines(frame, x)
    pairs = []
    for ll in lines:
        if ll.perpendicular:
            continue
        for end in ll.line.endpoints():
            for other in axis.endpoints():
                if chordal(end, other) < TOL.fp:
                    raise ValueError("degenerate pair at index %d" % ll.index)
        pairs.append((ll.line, axis))
    return pairs


class ConnectorRecord:
    def __init__(self, index, conjugator, token, line, connector,
                 foot_on_axis, foot_on_partner_axis, foot_separation,
                 residual_line, residual_axis, residual_turn):
        self.index = index
        self.conjugator = conjugator
        self.token = token
        self.line = line
        self.connector = connector
        self.foot_on_axis = foot_on_axis
        self.foot_on_partner_axis = foot_on_partner_axis
        self.foot_separation = foot_separation
        self.residual_line = residual_line
        self.residual_axis = residual_axis
        self.residual_turn = residual_turn

    @property
    def partner_index(self):
        return -self.index

    @property
    def orthogonal(self):
        return max(self.residual_line, self.residual_axis) < TOL.perp

    @property
    def line_word(self):
        return (self.conjugator + ":" if self.conjugator else "") + self.token


class ConnectorSet:
    def __init__(self, frame, label, word, axis, period_length,
                 records, feet, loops):
        self.frame = frame
        self.label = label
        self.word = word
        self.axis = axis
        self.period_length = period_length
        self.records = records
        self.feet = feet
        self.loops = loops

    @property
    def mark_count(self):
        return len(self.records)

    @property
    def quotient_count(self):
        return len(self.records) // 2

    @property
    def expected_counts(self):
        k = self.label.length
        return 2 * (k - 1), k - 1

    @property
    def loop_count(self):
        return self.loops.count

    def record(self, index):
        for r in self.records:
            if r.index == index:
                return r
        raise KeyError(index)

    def paired_marks(self):
        out = []
        for r in self.records:
            if r.index > 0:
                out.append((r.index, self.record(-r.index).foot_on_axis,
                            r.foot_on_axis))
        return out


def _chordal_pair(g, h, crossed):
    e1, e2 = g.endpoints()
    f1, f2 = h.endpoints()
    if crossed:
        return max(chordal(e1, f2), chordal(e2, f1))
    return max(chordal(e1, f1), chordal(e2, f2))


def _invariance_residual(turn, g):
    img = transform(turn, g)
    return min(_chordal_pair(img, g, False), _chordal_pair(img, g, True))


def connectors(frame, x):
    """Connector records for one period window of the axis of x."""
    x = _as_label(x)
    check_loxodromic(frame, min(x.length, 8))
    word, m, axis, chart, length, lines = labeled_lines(frame, x)
    if x.p == 0 or x.q == 0:
        feet = [(ll.param, ll.token) for ll in lines]
        tag = "A" if x.p == 0 else "B"
        return ConnectorSet(frame, x, word, axis, length, [], feet,
                            LoopDecomposition([tag], [1]))
    params = {ll.index: ll.param for ll in lines}
    anchor_param = lines[0].param
    records = []
    for ll in lines:
        if ll.perpendicular:
            continue
        connector = common_perpendicular(ll.line, axis)
        residual_line = perpendicularity_residual(connector, ll.line)
        residual_axis = perpendicularity_residual(connector, axis)
        turn = half_turn_about(ll.line)
        residual_turn = _invariance_residual(turn, connector)
        foot = foot_parameter(transform(chart, connector))
        if abs(foot - ll.param) > 1e4 * TOL.fp:
            raise InvariantError(
                "connector foot at index %d drifts off its crossing slot"
                % ll.index)
        partner_foot = params[-ll.index]
        mirrored = ll.param + partner_foot - 2.0 * anchor_param - length
        if abs(mirrored) > 1e5 * TOL.fp:
            raise InvariantError(
                "marks %d and %d are not mirror images across the anchor"
                % (ll.index, -ll.index))
        partner_axis = transform(turn, axis)
        o_chart = normalize_to_vertical(connector)
        t_axis = foot_parameter(transform(o_chart, axis))
        t_partner = foot_parameter(transform(o_chart, partner_axis))
        check = common_perpendicular(ll.line, partner_axis)
        if not connector.same_as(check, 1e5 * TOL.fp):
            raise InvariantError(
                "connector at index %d is not shared with the partner axis"
                % ll.index)
        records.append(ConnectorRecord(
            ll.index, ll.conjugator, ll.token, ll.line, connector,
            foot, partner_foot, abs(t_axis - t_partner),
            residual_line, residual_axis, residual_turn))
    sorted_params = sorted(r.foot_on_axis for r in records)
    for lo, hi in zip(sorted_params, sorted_params[1:]):
        if hi - lo < 100 * TOL.fp:
            raise InvariantError("marks collide along the axis of %s" % x)
    feet = [(ll.param, ll.token) for ll in lines if ll.perpendicular]
    marks = [(r.foot_on_axis, r.index, r.token) for r in records]
    loops = _loop_walk(marks, feet)
    return ConnectorSet(frame, x, word, axis, length, records, feet,
                        LoopDecomposition(loops, _cyclic_runs(loops)))


def loop_count(connector_set):
    return connector_set.loop_count


def transversal_check(frame, candidate, x, word_cap=6):
    """Does the candidate geodesic meet two distinct lifts of the curve
    of x at right angles?  Lifts are taken as word translates of the
    axis and of its half-turn reflections, words up to word_cap."""
    x = _as_label(x)
    word = primitive_word(x)
    m = frame.word_matrix(word.letters)
    axis = axis_of(m)
    lifts = [axis]
    for token in TOKENS:
        lifts.append(transform(frame.half_turn(token), axis))
    hits = []

    def orthogonal_hit(g):
        if perpendicularity_residual(candidate, g) >= TOL.perp:
            return False
        for seen in hits:
            if g.same_as(seen, 1e3 * TOL.fp):
                return False
        hits.append(g)
        return len(hits) >= 2

    for g in lifts:
        if orthogonal_hit(g):
            return True
    for w, wm in word_orbit(frame, word_cap):
        if orthogonal_hit(transform(wm, axis)):
            return True
        for token in TOKENS:
            g = transform(wm.compose(frame.half_turn(token)), axis)
            if orthogonal_hit(g):
                return True
    return False
