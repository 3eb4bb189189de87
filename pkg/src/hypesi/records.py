"""Tab-separated tables with round-tripping floats.

Numbers are printed with 17 significant digits so that parsing the text
back gives bitwise equal doubles.  The point at infinity prints as inf.
"""

import math

from .farey import RationalLabel


def format_float(value):
    return "%.17g" % value


def format_boundary(z):
    """One extended-real boundary point as a single cell."""
    if z is None:
        return "inf"
    return format_float(z.real if isinstance(z, complex) else z)


def format_complex(z):
    """One boundary point of the sphere as two cells."""
    if z is None:
        return ["inf", "0"]
    z = complex(z)
    return [format_float(z.real), format_float(z.imag)]


def parse_boundary(cell):
    if cell == "inf":
        return None
    return float(cell)


def emit_table(header, rows, comments=()):
    lines = ["# " + c for c in comments]
    lines.append("\t".join(header))
    for row in rows:
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def parse_table(text):
    header = None
    rows = []
    comments = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        cells = line.split("\t")
        if header is None:
            header = cells
        else:
            rows.append(cells)
    return header, rows, comments


def esi_table(esiset):
    header = ["index", "line", "end1", "end2", "x", "y", "angle", "kept"]
    rows = []
    for r in esiset.records:
        e1, e2 = r.line.endpoints()
        rows.append([
            str(r.index),
            r.line_word,
            format_boundary(e1),
            format_boundary(e2),
            format_float(r.point.real),
            format_float(r.point.imag),
            format_float(r.angle),
            "no" if r.is_right else "yes",
        ])
    expected, expected_quotient = esiset.expected_counts
    comments = [
        "label=%s word=%s" % (esiset.label, esiset.word.letters),
        "essential=%d expected=%d quotient=%d expected_quotient=%d"
        % (esiset.essential_count, expected,
           esiset.quotient_count, expected_quotient),
        "period_length=%s" % format_float(esiset.period_length),
    ]
    return emit_table(header, rows, comments)


def connector_table(cset):
    header = ["index", "line", "foot", "partner_foot", "separation",
              "residual_line", "residual_axis", "residual_turn",
              "orthogonal"]
    rows = []
    for r in cset.records:
        rows.append([
            str(r.index),
            r.line_word,
            format_float(r.foot_on_axis),
            format_float(r.foot_on_partner_axis),
            format_float(r.foot_separation),
            format_float(r.residual_line),
            format_float(r.residual_axis),
            format_float(r.residual_turn),
            "yes" if r.orthogonal else "no",
        ])
    expected, expected_quotient = cset.expected_counts
    comments = [
        "label=%s word=%s" % (cset.label, cset.word.letters),
        "marks=%d expected=%d quotient=%d expected_quotient=%d"
        % (cset.mark_count, expected, cset.quotient_count,
           expected_quotient),
        "loops=%d loop_tags=%s runs=%s"
        % (cset.loop_count, ",".join(cset.loops.loops),
           ",".join(str(n) for n in cset.loops.run_lengths)),
        "period_length=%s" % format_float(cset.period_length),
    ]
    return emit_table(header, rows, comments)
