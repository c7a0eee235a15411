"""Asymmetric quantum surface codes from hyperbolic tessellations."""

from .geometry import (
    Curvature,
    EdgePairing,
    Model,
    MobiusTransform,
    Point,
    SchlafliSymbol,
    Surface,
    edge_length,
    fundamental_polygon,
    hyperbolic_distance,
    opposite_edge_distance,
    opposite_edge_pairing,
    polygon_area,
    polygon_circumradius,
    polygon_inradius,
    regular_polygon_vertices,
    triangle_area,
    vertex_cycles,
)
from .design import (
    Admissibility,
    AsymmetryPoint,
    CodeParameters,
    FamilyForm,
    RateComparison,
    admissibility,
    asymmetry_curve,
    closed_form_family,
    closed_form_symbols,
    code_parameters,
    enumerate_admissible,
    even_genus_equivalence,
    face_count,
    is_admissible,
    rate_comparison,
)
from .homology import (
    CssCode,
    Distances,
    SurfaceComplex,
    build_klein_bottle,
    build_polygon_code,
    build_projective_plane,
    build_toric,
    complex_from_pairing,
    css_from_complex,
    cycle_distances,
    dump_complex,
    exhaustive_distances,
    load_complex,
    logical_count,
    logical_operators,
    minimum_distances,
    verify_regularity,
)

__version__ = "0.1.0"
