"""Cyclic colorings of plane graphs whose big faces are vertex-disjoint."""

from .coloring import CyclicColoring, Violation, verify
from .colorer import ColoringResult, cyclic_color, prove_bound
from .configurations import ConfigurationMatch, Kind, find_first_configuration
from .discharging import audit
from .oracle import cyclic_chromatic_number
from .plane_graph import PlaneGraph, build, class_check, from_faces
from .plg import emit_plg, parse_plg

__all__ = [
    "ColoringResult",
    "ConfigurationMatch",
    "CyclicColoring",
    "Kind",
    "PlaneGraph",
    "Violation",
    "audit",
    "build",
    "class_check",
    "cyclic_chromatic_number",
    "cyclic_color",
    "emit_plg",
    "find_first_configuration",
    "from_faces",
    "parse_plg",
    "prove_bound",
    "verify",
]
