from .construct import build_component, minimum_width, verify_build
from .diagram import SlitTorusDiagram, compile_diagram, parse_diagram
from .polygons import PolygonSurface, build_genus2, verify_polygon_surface

__all__ = ["build_component", "minimum_width", "verify_build", "SlitTorusDiagram",
           "compile_diagram", "parse_diagram", "PolygonSurface", "build_genus2",
           "verify_polygon_surface"]
