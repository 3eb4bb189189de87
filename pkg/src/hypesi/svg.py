"""Deterministic SVG pictures of planar crossing data.

Geodesics draw as half-circles or vertical rays in the upper half
plane, kept crossings as dots, right-angled crossings as small crosses.
Output depends only on the input records, so equal data gives bytewise
equal files.
"""

import math

WIDTH = 800.0
STYLE = ("text{font:12px sans-serif}"
         ".axis{stroke:#b03030;fill:none;stroke-width:2}"
         ".line{stroke:#3050a0;fill:none;stroke-width:1}"
         ".dot{fill:#202020}"
         ".cross{stroke:#202020;stroke-width:1.5}")


def _fmt(value):
    out = "%.6f" % value
    return out


class Scene:
    def __init__(self):
        self.geodesics = []   # (geodesic, css class)
        self.dots = []        # complex points
        self.crosses = []     # complex points
        self.caption = ""

    def add_geodesic(self, g, cls):
        for e in g.endpoints():
            if e is not None and not isinstance(e, (int, float)) \
                    and abs(complex(e).imag) > 1e-9:
                raise ValueError("plot needs planar geodesics")
        self.geodesics.append((g, cls))

    def bounds(self):
        xs = []
        tops = []
        for g, cls in self.geodesics:
            ends = [e for e in g.endpoints() if e is not None]
            reals = [complex(e).real for e in ends]
            xs.extend(reals)
            if len(reals) == 2:
                tops.append(abs(reals[0] - reals[1]) / 2.0)
        for z in self.dots + self.crosses:
            xs.append(z.real)
            tops.append(z.imag)
        if not xs:
            raise ValueError("empty scene")
        lo = min(xs)
        hi = max(xs)
        top = max(tops) if tops else 1.0
        span = max(hi - lo, 1e-6)
        margin = 0.1 * span
        return lo - margin, hi + margin, top * 1.1 + margin


def esi_scene(frame, esiset):
    scene = Scene()
    scene.add_geodesic(esiset.axis, "axis")
    for r in esiset.records:
        scene.add_geodesic(r.line, "line")
        if r.is_right:
            scene.crosses.append(r.point)
        else:
            scene.dots.append(r.point)
    scene.caption = "%s %s" % (esiset.label, esiset.word.letters)
    return scene


def render_svg(scene):
    lo, hi, top = scene.bounds()
    scale = WIDTH / (hi - lo)
    height = top * scale

    def sx(x):
        return (x - lo) * scale

    def sy(y):
        return height - y * scale

    parts = []
    parts.append('<svg xmlns="http://www.w3.org/2000/svg" width="%s" '
                 'height="%s" viewBox="0 0 %s %s">'
                 % (_fmt(WIDTH), _fmt(height), _fmt(WIDTH), _fmt(height)))
    parts.append("<style>%s</style>" % STYLE)
    for g, cls in sorted(scene.geodesics,
                         key=lambda item: (item[1], _geo_key(item[0]))):
        parts.append(_geodesic_path(g, cls, sx, sy, height))
    for z in sorted(scene.dots, key=lambda z: (z.real, z.imag)):
        parts.append('<circle class="dot" cx="%s" cy="%s" r="4"/>'
                     % (_fmt(sx(z.real)), _fmt(sy(z.imag))))
    for z in sorted(scene.crosses, key=lambda z: (z.real, z.imag)):
        x = sx(z.real)
        y = sy(z.imag)
        parts.append('<path class="cross" d="M %s %s L %s %s M %s %s L %s %s"/>'
                     % (_fmt(x - 5), _fmt(y - 5), _fmt(x + 5), _fmt(y + 5),
                        _fmt(x - 5), _fmt(y + 5), _fmt(x + 5), _fmt(y - 5)))
    if scene.caption:
        parts.append('<text x="8" y="16">%s</text>' % scene.caption)
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("ascii")


def _geo_key(g):
    ends = []
    for e in g.endpoints():
        ends.append(1e18 if e is None else complex(e).real)
    return tuple(sorted(ends))


def _geodesic_path(g, cls, sx, sy, height):
    e1, e2 = g.endpoints()
    ends = [None if e is None else complex(e).real for e in (e1, e2)]
    if ends[0] is None or ends[1] is None:
        x = ends[0] if ends[1] is None else ends[1]
        return '<path class="%s" d="M %s %s L %s %s"/>' % (
            cls, _fmt(sx(x)), _fmt(sy(0.0)), _fmt(sx(x)), _fmt(0.0))
    a, b = sorted(ends)
    r = (sx(b) - sx(a)) / 2.0
    return ('<path class="%s" d="M %s %s A %s %s 0 0 1 %s %s"/>'
            % (cls, _fmt(sx(a)), _fmt(sy(0.0)), _fmt(r), _fmt(r),
               _fmt(sx(b)), _fmt(sy(0.0))))
