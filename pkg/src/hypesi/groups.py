"""Reference and deformed two-generator groups, plus config file I/O.

The reference pair has integer matrices and a Schottky fundamental
domain bounded by four disjoint half-disks, which makes it free,
discrete, and purely hyperbolic.  The deformed pairs keep both axes in
place and twist the letter half-turn lines around them, so the planar
picture bends into the half-space while every label keeps its meaning.

Config files are JSON: {"A": [[re, im] x 4], "B": [[re, im] x 4]},
entries in row-major order.  Extra keys are ignored.
"""

import cmath
import json
import os
from importlib import resources

from .mobius import MobiusMap
from .geodesics import axis_of, half_turn_about, normalize_to_vertical, transform
from . import frames


def reference_group():
    """The certified planar pair: half-turn lines at (-1,1), (2,4), (-4,-2)."""
    return MobiusMap(-1, 3, -3, 8), MobiusMap(-1, -3, 3, 8)


def rotation_about(g, angle):
    """Elliptic rotation of H^3 by the given angle around g."""
    n = normalize_to_vertical(g)
    h = cmath.exp(0.5j * angle)
    spin = MobiusMap(h, 0.0, 0.0, 1.0 / h)
    return n.inverse().compose(spin).compose(n)


def bend_reference(bend_a=0.0, bend_b=0.0):
    """Twist the letter lines of the reference pair about the generator
    axes.  Each generator keeps its axis; its rotational part picks up
    twice the bending angle."""
    a0, b0 = reference_group()
    frame = frames.build_frame(a0, b0)
    hl = half_turn_about(frame.lineL)
    la = frame.lineLA
    lb = frame.lineLB
    if bend_a:
        la = transform(rotation_about(frame.axisA, bend_a), la)
    if bend_b:
        lb = transform(rotation_about(frame.axisB, bend_b), lb)
    return hl.compose(half_turn_about(la)), hl.compose(half_turn_about(lb))


# (bend around axis A, bend around axis B); "bent-extreme" is tuned so
# that the sampled limit set wraps around an axis and the support-plane
# scan must fail
BUILTIN_BENDS = {
    "reference": (0.0, 0.0),
    "bent-small": (0.0, 0.08),
    "bent-double": (0.15, 0.2),
    "bent-extreme": (1.2, 2.6),
}


def builtin_group(name):
    try:
        bends = BUILTIN_BENDS[name]
    except KeyError:
        raise ValueError("unknown builtin group %r" % name)
    return bend_reference(*bends)


def _entry_list(m):
    return [[z.real, z.imag] for z in m.entries()]


def _entry_matrix(data):
    if len(data) != 4:
        raise ValueError("matrix needs four entries")
    vals = [complex(float(e[0]), float(e[1])) for e in data]
    return MobiusMap(*vals)


def dump_group(path, gen_a, gen_b, note=None):
    doc = {"A": _entry_list(gen_a), "B": _entry_list(gen_b)}
    if note:
        doc["note"] = note
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def _group_from_doc(doc):
    try:
        return _entry_matrix(doc["A"]), _entry_matrix(doc["B"])
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError("malformed group config: %s" % exc)


def load_group(source):
    """Read a generator pair from a config path or a builtin name."""
    if os.path.exists(source):
        with open(source) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError("malformed group config: %s" % exc)
        return _group_from_doc(doc)
    base = resources.files("hypesi").joinpath("data")
    packaged = base.joinpath(source + ".json")
    if packaged.is_file():
        doc = json.loads(packaged.read_text())
        return _group_from_doc(doc)
    raise ValueError("no group config at %r" % source)
