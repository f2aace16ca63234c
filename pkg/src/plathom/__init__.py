"""Reduced sl2 link homology for 2-bridge plats and a Kauffman-bracket oracle."""

from .plat import (
    BraidWord,
    CrossingCounts,
    PlatPresentation,
    component_count,
    crossing_counts,
    mirror_word,
    parse_braid_word,
    plat_to_diagram,
)
from .curves import (
    Curve,
    MarkedSurface,
    apply_generator,
    figure_eight_brane,
    intersections,
    interval_brane,
    normal_form,
)
from .algebra import PathAlgebra, PathElement, compose, hom_basis, hom_to_simple_basis
from .complexes import (
    BigradedGroups,
    TwistedComplex,
    cone,
    cohomology,
    euler_characteristic,
    gaussian_eliminate,
    hom_to_simple,
    validate,
)
from .compiler import assign_gradings, compile_curve
from .invariants import HomologyResult, convert_gradings, jones_reduced, mirror_check, reduced_homology
from .oracle import jones_from_bracket, jones_oracle, kauffman_bracket, skein_check

__version__ = "0.1.0"

__all__ = [
    "BigradedGroups",
    "BraidWord",
    "CrossingCounts",
    "Curve",
    "HomologyResult",
    "MarkedSurface",
    "PathAlgebra",
    "PathElement",
    "PlatPresentation",
    "TwistedComplex",
    "apply_generator",
    "assign_gradings",
    "cohomology",
    "compile_curve",
    "component_count",
    "compose",
    "cone",
    "convert_gradings",
    "crossing_counts",
    "euler_characteristic",
    "figure_eight_brane",
    "gaussian_eliminate",
    "hom_basis",
    "hom_to_simple",
    "hom_to_simple_basis",
    "intersections",
    "interval_brane",
    "jones_from_bracket",
    "jones_oracle",
    "jones_reduced",
    "kauffman_bracket",
    "mirror_check",
    "mirror_word",
    "normal_form",
    "parse_braid_word",
    "plat_to_diagram",
    "reduced_homology",
    "skein_check",
    "validate",
]
