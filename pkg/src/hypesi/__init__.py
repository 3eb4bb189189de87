"""Crossing and connector data of primitive curves on two-generator
hyperbolic groups."""

from .const import TOL, InvariantError, set_base_tolerance
from .mobius import MobiusMap
from .geodesics import Geodesic
from .farey import RationalLabel, primitive_word, conjugate_partner
from .frames import build_frame, validate_model_group, winding_group_check
from .groups import reference_group, bend_reference, load_group, dump_group
from .esi import esi_points, brute_force_esi_count, loop_decomposition
from .connectors import connectors, generalized_esi_pairs, transversal_check

__version__ = "0.1.0"
