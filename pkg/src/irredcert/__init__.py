"""Exact phi-Newton polygons and irreducibility certificates over Q."""

from .intpoly import NEG_INF, IntPoly, PhiExpansion, divrem_monic, phi_assemble, phi_expand
from .valuation import INFINITY, is_prime, vp, vp_factorial, vpx
from .gfpoly import GfPoly, NotSquarefree, ddf_degrees, is_irreducible_mod_p
from .polygon import (
    Edge,
    NewtonPolygon,
    PolyPoint,
    build_polygon,
    merge_polygons,
    polygon_points,
    principal_part,
    rightmost_slope,
    slope_zero_length,
)

__all__ = [
    "NEG_INF",
    "IntPoly",
    "PhiExpansion",
    "divrem_monic",
    "phi_assemble",
    "phi_expand",
    "INFINITY",
    "is_prime",
    "vp",
    "vp_factorial",
    "vpx",
    "GfPoly",
    "NotSquarefree",
    "ddf_degrees",
    "is_irreducible_mod_p",
    "Edge",
    "NewtonPolygon",
    "PolyPoint",
    "build_polygon",
    "merge_polygons",
    "polygon_points",
    "principal_part",
    "rightmost_slope",
    "slope_zero_length",
]
