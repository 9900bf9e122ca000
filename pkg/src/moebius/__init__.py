"""Cycle geometry of the Moebius plane.

Cycles (circles and lines) are Hermitian 2x2 matrices carried as real
4-vectors with a Minkowski inner product; on top of that live pencils and
their splitting factors, curvilinear triangles, trilinear coordinates,
generalized Ceva and Menelaus theorems, triangle centers, duality, and
isogonal conjugation, with embeddings of the spherical, Euclidean, and
half-plane hyperbolic geometries.
"""

from . import errors
from .cycles import (CycleClass, CycleVec, ELLIPTIC, HYPERBOLIC, MoebiusMap,
                     OrientedCycle, PARABOLIC, apply_map, classify,
                     cosine_regime, from_circle, from_line, from_points,
                     intersect, inversion_map, invert, midcycles, mobius_cos,
                     modulus, normalize, oriented_angle, point_cycle,
                     tangent_at)
from .frames import (PencilTrilinear, TriangleFrame, Trilinear, collinear_det,
                     concurrent_det, coords, cycle_at, frame, incidence, join,
                     meet)
from .models import (common_perpendicular, cycle_to_hyperbolic_point,
                     hyperbolic_line_distance, hyperbolic_point_to_cycle,
                     interpret_pencil, is_model_line, menelaus_case)
from .pencils import (CevianRange, Pencil, bisector, cevian_range, collinear3,
                      distinguished_points, member, orthogonal_pencil, span,
                      splitting_factor)
from .projective import Point, ProjectiveReal
from .theorems import (CevaResult, DualityMap, MenelausResult, altitude,
                       altitude_cycle, ceva, complement_cycle,
                       complement_pencil, cycle_type_Y, cevian_cos, duality,
                       excircle_class, incenter_excenters, isogonal_cycle,
                       isogonal_pencil, menelaus, orthocenter, pencil_type_X,
                       splitting_cevian)
from .triangles import (TriangleSides, TriangleSpec, check_angles,
                        classify_model, digon_offsets, measure_angles,
                        side_split, synthesize)

__version__ = "0.1.0"
