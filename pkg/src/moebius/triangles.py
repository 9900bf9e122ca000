"""Curvilinear triangles: feasibility, synthesis from vertices and angles,
angle measurement, and classification against the constant-curvature models.

A triangle is reconstructed in a canonical chart that sends its vertices to
0, 1, infinity; there the circumcircle is the real axis and each side is the
unique cycle through its two vertices leaving the first one at the signed
digon-offset angle.  Everything else is pulled back through the chart map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import errors
from .cycles import (MoebiusMap, OrientedCycle, apply_map, from_circle,
                     from_line, point_on, tangent_at)
from .projective import DEFAULT_TOL, Point

TWO_PI = 2.0 * math.pi

HYPERBOLIC_MODEL = "hyperbolic"
EUCLIDEAN_MODEL = "euclidean"
SPHERICAL_MODEL = "spherical"
PURE_MOEBIUS = "pure-moebius"

NO_SPLIT = "no-split"
ON_CIRCUMCIRCLE = "on-circumcircle"
SPLITS = "splits"


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    margin: float   # smallest slack over the six strict inequalities


@dataclass(frozen=True)
class TriangleSpec:
    a_vertex: Point
    b_vertex: Point
    c_vertex: Point
    alpha: float
    beta: float
    gamma: float
    orientation: str = "ABC"   # the 3-cycle A->B->C or A->C->B

    @staticmethod
    def make(a, b, c, alpha, beta, gamma, orientation="ABC") -> "TriangleSpec":
        if orientation not in ("ABC", "ACB"):
            raise ValueError("orientation must be 'ABC' or 'ACB'")
        return TriangleSpec(Point.of(a), Point.of(b), Point.of(c),
                            float(alpha), float(beta), float(gamma), orientation)


@dataclass(frozen=True)
class TriangleSides:
    """Oriented sides a (through B,C), b (through A,C), c (through A,B),
    the circumcircle s (oriented opposite to the triangle), and the data
    needed to walk the boundary."""

    a: OrientedCycle
    b: OrientedCycle
    c: OrientedCycle
    s: OrientedCycle
    vertices: tuple[Point, Point, Point]
    orientation: str
    degenerate: bool = False

    def side(self, name: str) -> OrientedCycle:
        return {"a": self.a, "b": self.b, "c": self.c}[name]

    def boundary(self) -> list[tuple[Point, Point, OrientedCycle]]:
        """Boundary legs (from, to, side) in traversal order."""
        va, vb, vc = self.vertices
        if self.orientation == "ABC":
            return [(va, vb, self.c), (vb, vc, self.a), (vc, va, self.b)]
        return [(va, vc, self.b), (vc, vb, self.a), (vb, va, self.c)]


def check_angles(alpha: float, beta: float, gamma: float,
                 tol: float = DEFAULT_TOL) -> Feasibility:
    """Strict feasibility of an angle triple for some Moebius triangle."""
    margins = []
    for x, y, z in ((alpha, beta, gamma), (beta, gamma, alpha), (gamma, alpha, beta)):
        t = y + z - x
        margins.append(t + math.pi)
        margins.append(3.0 * math.pi - t)
    margin = min(margins)
    return Feasibility(margin > tol, margin)


def digon_offsets(alpha: float, beta: float, gamma: float) -> tuple[float, float, float]:
    """Signed digon angles between the sides and the circumcircle."""
    if not check_angles(alpha, beta, gamma).feasible:
        raise errors.Infeasible("angles violate the triangle inequalities")
    a0 = 0.5 * (math.pi + alpha - beta - gamma)
    b0 = 0.5 * (math.pi - alpha + beta - gamma)
    c0 = 0.5 * (math.pi - alpha - beta + gamma)
    return a0, b0, c0


def _chord_side(offset: float, tol: float = 1e-12) -> OrientedCycle:
    """Cycle through 0 and 1, traveled 0 -> 1, leaving 0 at angle `offset`."""
    if abs(math.sin(offset)) <= tol:
        return from_line(0.0, 1.0)
    t0 = cmath.exp(1j * offset)
    s = -1.0 / (2.0 * math.sin(offset))
    return from_circle(1j * t0 * s, s)


def synthesize(spec: TriangleSpec, tol: float = DEFAULT_TOL) -> TriangleSides:
    """The unique triangle with the given vertices, angles, and orientation."""
    feas = check_angles(spec.alpha, spec.beta, spec.gamma, tol)
    if not feas.feasible:
        raise errors.Infeasible(f"margin {feas.margin:.3g}")
    va, vb, vc = spec.a_vertex, spec.b_vertex, spec.c_vertex
    for p, q in ((va, vb), (vb, vc), (va, vc)):
        if p.isclose(q, tol):
            raise errors.CoincidentVertices("vertices must be pairwise distinct")
    if spec.orientation == "ABC":
        seq = (va, vb, vc)
        angles = (spec.alpha, spec.beta, spec.gamma)
    else:
        seq = (va, vc, vb)
        angles = (spec.alpha, spec.gamma, spec.beta)
    off1, off2, off3 = digon_offsets(*angles)

    chart = MoebiusMap.to_zero_one_inf(*seq)
    back = chart.inverse()
    side1 = from_line(1.0, cmath.exp(1j * off1))      # through V2, V3
    side2 = from_line(0.0, cmath.exp(-1j * off2))     # through V3, V1
    side3 = _chord_side(off3)                         # through V1, V2
    s_chart = from_line(0.0, -1.0)                    # circumcircle, reversed
    w1, w2, w3, s = (apply_map(back, x) for x in (side1, side2, side3, s_chart))

    if spec.orientation == "ABC":
        a, b, c = w1, w2, w3
    else:
        a, c, b = w1, w2, w3
    degenerate = any(abs(t - math.pi) <= 1e-9 for t in (spec.alpha, spec.beta, spec.gamma))
    return TriangleSides(a, b, c, s, (va, vb, vc), spec.orientation, degenerate)


def _vertex_angle(incoming: OrientedCycle, outgoing: OrientedCycle,
                  v: Point) -> float:
    """Interior angle of the region kept on the left of the boundary path."""
    t_in = tangent_at(incoming, v)
    t_out = tangent_at(outgoing, v)
    return (math.pi - cmath.phase(t_out / t_in)) % TWO_PI


def measure_angles(sides: TriangleSides, tol: float = 1e-7) -> tuple[float, float, float]:
    """Inner angles at A, B, C from the oriented tangents of adjacent sides."""
    legs = sides.boundary()
    for start, end, side in legs:
        if not (point_on(side, start, tol) and point_on(side, end, tol)):
            raise errors.SidesDontMeet("a side misses one of its vertices")
    vals = []
    for i, (start, _end, side) in enumerate(legs):
        incoming = legs[(i - 1) % 3][2]
        vals.append(_vertex_angle(incoming, side, start))
    if sides.orientation == "ABC":    # legs start at A, B, C
        return vals[0], vals[1], vals[2]
    return vals[0], vals[2], vals[1]  # legs start at A, C, B


def _require_proper(angles: tuple[float, float, float]):
    if not all(0.0 <= t < math.pi for t in angles):
        raise errors.NotProper("all angles must lie in [0, pi)")


def side_split(sides_or_angles, which: str, tol: float = DEFAULT_TOL) -> str:
    """Does the named side's full cycle cut through the triangle?"""
    angles = _angles_of(sides_or_angles)
    _require_proper(angles)
    alpha, beta, gamma = angles
    own = {"a": alpha, "b": beta, "c": gamma}[which]
    others = sum(angles) - own
    t = own - (others - math.pi)
    if abs(t) <= tol:
        return ON_CIRCUMCIRCLE
    return NO_SPLIT if t > 0 else SPLITS


def classify_model(sides_or_angles, tol: float = DEFAULT_TOL) -> str:
    """Hyperbolic / Euclidean / spherical / pure-Moebius by angle data."""
    angles = _angles_of(sides_or_angles)
    _require_proper(angles)
    total = sum(angles)
    if total < math.pi - tol:
        return HYPERBOLIC_MODEL
    if total <= math.pi + tol:
        return EUCLIDEAN_MODEL
    splits = [side_split(angles, w, tol) for w in ("a", "b", "c")]
    if all(s == NO_SPLIT for s in splits):
        return SPHERICAL_MODEL
    return PURE_MOEBIUS


def _angles_of(sides_or_angles) -> tuple[float, float, float]:
    if isinstance(sides_or_angles, TriangleSides):
        return measure_angles(sides_or_angles)
    return tuple(float(t) for t in sides_or_angles)


# --------------------------------------------------------------------------
# boundary arcs

def arc_point(side: OrientedCycle, start: Point, end: Point, t: float) -> Point:
    """A point at parameter t in (0,1) of the traveled arc from start to end."""
    x = _arc_third_point(side, start, end)
    chart = MoebiusMap.to_zero_one_inf(start, end, x)
    return chart.inverse().apply_point(Point.of(complex(t, 0.0)))


def _arc_third_point(side: OrientedCycle, start: Point, end: Point) -> Point:
    """A point of the cycle on the complementary (untraveled) arc."""
    if side.is_line:
        d = side.line_direction()
        p, q = start, end
        if p.is_infinite:
            return Point.of(q.value() + d)
        if q.is_infinite:
            return Point.of(p.value() - d)
        along = ((q.value() - p.value()) / d).real
        if along > 0:
            return Point.infinity()
        return Point.of(0.5 * (p.value() + q.value()))
    o, r = side.center, abs(side.signed_radius)
    th_p = cmath.phase(start.value() - o)
    th_q = cmath.phase(end.value() - o)
    ccw = side.k > 0
    delta = (th_q - th_p) % TWO_PI
    if ccw:
        mid = th_q + 0.5 * (TWO_PI - delta)
    else:
        mid = th_p + 0.5 * delta
    return Point.of(o + r * cmath.exp(1j * mid))


def crosses_arc(cycle: OrientedCycle, side: OrientedCycle, start: Point,
                end: Point, samples: int = 257) -> bool:
    """True when the cycle's zero set crosses the open arc from start to end."""
    last = None
    for i in range(1, samples):
        z = arc_point(side, start, end, i / samples)
        q = cycle.eval_q(z)
        if last is not None and q * last < 0:
            return True
        if q != 0.0:
            last = q
    return False


def splits_triangle(sides: TriangleSides, which: str) -> bool:
    """Geometric probe: does the side's cycle cross the other boundary arcs?"""
    target = sides.side(which)
    for start, end, side in sides.boundary():
        if side is target:
            continue
        if crosses_arc(target, side, start, end):
            return True
    return False
