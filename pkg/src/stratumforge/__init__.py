"""Translation surfaces with prescribed period data."""
from .builders import build_component, build_genus2, verify_polygon_surface
from .exact import RATIONALS, ExactScalar, RealBasis
from .flat_core import GridSurface, Stratum, parse_origami
from .invariants import arf_invariant, component_of, kz_components
from .period_checker import (cocycle_from_json, cocycle_of_surface, make_cocycle,
                             realizability_check, volume)

__all__ = ["build_component", "build_genus2", "verify_polygon_surface", "RATIONALS",
           "ExactScalar", "RealBasis", "GridSurface", "Stratum", "parse_origami",
           "arf_invariant", "component_of", "kz_components", "cocycle_from_json",
           "cocycle_of_surface", "make_cocycle", "realizability_check", "volume"]
