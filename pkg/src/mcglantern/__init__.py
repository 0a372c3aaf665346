"""Periodic mapping classes, disjoint curve pairs and lantern factorisations
on glued-polygon models of closed surfaces."""

from __future__ import annotations

from .curves import (
    BoundaryPoint,
    CurveDiagram,
    algebraic_intersection,
    crossing_count,
    cut_along,
    geometric_intersection,
    homology_class,
    is_bounding_pair,
    is_nonseparating,
    is_parallel,
    is_simple,
    minimal_position,
    parse_curve,
)
from .polygon import EdgePairing, PolygonSurface, genus, parse_surface, rotation_shifts, standard_surface
from .rotation import RotationMap, apply, homology_action, hyperelliptic, power, rotation_of_order
from .symplectic import (
    evaluate_word,
    lantern_homology_classes,
    stl_bound_report,
    symplectic_completion,
    transvection,
    verify_lantern_homology,
    verify_theorem14_homology,
)
from .theorem1 import (
    TheoremWitness,
    brute_force_search,
    construct_general,
    construct_standard,
    inequality_holds,
    verify_pair,
    verify_witness,
)
from .words import (
    McgWord,
    check_derivation,
    conjugate_by,
    conjugate_count,
    free_reduce,
    lantern_sides,
    lemma32_factorize,
    theorem14_word,
)

__version__ = "0.1.0"
