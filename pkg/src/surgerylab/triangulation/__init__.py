"""Ideal triangulations, gluing equations, Newton solver and volume."""
from .bundled import load_bundled
from .core import IdealTriangulation, parse_triangulation, serialize
from .isomorphism import isomorphic
from .solver import Status, solve_geometric, volume

__all__ = ["IdealTriangulation", "Status", "isomorphic", "load_bundled",
           "parse_triangulation", "serialize", "solve_geometric", "volume"]
