"""Global numeric tolerances.

All comparisons in the package go through this single table so that a run
can be tightened or loosened in one place.  The defaults are calibrated for
double precision and group elements of word length up to a couple dozen
letters.  `HYPESI_TOL` in the environment overrides the base tolerance for
command line runs (the derived tolerances scale with it).
"""

import os
from dataclasses import dataclass


@dataclass
class Tolerances:
    fp: float = 1e-9      # boundary point identity, chordal metric
    det: float = 1e-9     # determinant / matrix equality slack
    tr: float = 1e-9      # trace classification slack
    perp: float = 1e-8    # orthogonality residuals
    ang: float = 1e-7     # right-angle detection in radians
    gap: float = 1e-6     # support-plane angular gap slack


TOL = Tolerances()


def set_base_tolerance(eps):
    """Set the base tolerance; the coarser ones keep their relative scale."""
    TOL.fp = TOL.det = TOL.tr = float(eps)
    TOL.perp = 10.0 * TOL.fp
    TOL.ang = 100.0 * TOL.fp
    TOL.gap = 1000.0 * TOL.fp


def load_tolerance_from_env():
    value = os.environ.get("HYPESI_TOL")
    if value:
        set_base_tolerance(float(value))


class InvariantError(RuntimeError):
    """A structural invariant failed: the data cannot be trusted.

    Raised when a computation detects that its own output violates a
    property that must hold for valid input (period detection, mark
    ordering, right angles off the allowed slots).  Distinct from
    ValueError, which flags bad input or unsupported domains.
    """
