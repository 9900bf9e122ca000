"""Spherical, Euclidean, and half-plane hyperbolic readings of cycle data.

Model lines are picked out by linear conditions on the matrix (trace zero,
k = 0, or real entries); the hyperbolic model additionally identifies
upper half-plane points with definite real matrices, which turns incidence
into orthogonality of vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .cycles import (CycleVec, ELLIPTIC, HYPERBOLIC, MINKOWSKI, OrientedCycle,
                     PARABOLIC, classify, normalize)
from .frames import TriangleFrame, Trilinear, cycle_at, coords
from .pencils import Pencil, splitting_factor
from .projective import DEFAULT_TOL, Point
from .theorems import MenelausResult, menelaus

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC_HALF_PLANE = "hyperbolic"

MODELS = (SPHERICAL, EUCLIDEAN, HYPERBOLIC_HALF_PLANE)


def is_model_line(model: str, a: OrientedCycle, tol: float = DEFAULT_TOL) -> bool:
    """Is the cycle a straight line of the chosen embedded geometry?"""
    if model == SPHERICAL:
        return abs(a.k + a.n) <= tol
    if model == EUCLIDEAN:
        return abs(a.k) <= tol
    if model == HYPERBOLIC_HALF_PLANE:
        return abs(a.v.l_im) <= tol
    raise ValueError(f"unknown model {model!r}")


def hyperbolic_point_to_cycle(z: Point | complex) -> CycleVec:
    """Virtual real vector carrying an upper half-plane point.

    The (-1, x, 0, -x^2-y^2) representative makes <M, N_z> a positive
    multiple of Q_M(z) for every real vector M, so incidence with a
    hyperbolic line is literally orthogonality.
    """
    z = Point.of(z)
    if z.is_infinite or z.value().imag <= 0:
        raise errors.NotUpperHalfPlane("point must satisfy Im z > 0")
    x, y = z.value().real, z.value().imag
    return CycleVec(-1.0, x, 0.0, -(x * x + y * y))


def cycle_to_hyperbolic_point(m, tol: float = DEFAULT_TOL) -> Point:
    """Upper half-plane point carried by a definite real vector."""
    m = CycleVec.of(m)
    scale = m.norm()
    if abs(m.l_im) > tol * scale or m.det() <= tol * scale * scale:
        raise errors.NotVirtualReal("need a real matrix with positive det")
    if m.k < 0:
        m = m.scaled(-1.0)
    x = -m.l_re / m.k
    y = math.sqrt(m.det()) / m.k
    return Point.of(complex(x, y))


@dataclass(frozen=True)
class PencilInterpretation:
    model: str
    kind: str                      # pencil type
    point: Point | None = None     # common / ideal point
    points: tuple = ()             # spherical pole pair
    direction: complex | None = None   # euclidean parabolic: direction mod +-1
    line: OrientedCycle | None = None  # hyperbolic hyperbolic: common perpendicular


def _check_model_pencil(model: str, p: Pencil, tol: float):
    for m in (p.a, p.b):
        if not is_model_line(model, m, math.sqrt(tol)):
            raise errors.NotModelPencil(f"basis cycle is not a {model} line")


def interpret_pencil(model: str, p: Pencil, tol: float = DEFAULT_TOL) -> PencilInterpretation:
    """What an all-lines pencil means inside the chosen geometry."""
    from .pencils import distinguished_points
    _check_model_pencil(model, p, tol)
    if model == SPHERICAL:
        if p.kind != ELLIPTIC:
            raise errors.NotModelPencil("spherical line pencils are elliptic")
        pts = distinguished_points(p, tol)
        return PencilInterpretation(model, p.kind, points=tuple(pts))
    if model == EUCLIDEAN:
        if p.kind == ELLIPTIC:
            pts = [q for q in distinguished_points(p, tol) if not q.is_infinite]
            return PencilInterpretation(model, p.kind, point=pts[0])
        if p.kind == PARABOLIC:
            d = p.a.line_direction()
            if d.real < 0 or (d.real == 0 and d.imag < 0):
                d = -d
            return PencilInterpretation(model, p.kind, direction=d)
        raise errors.NotModelPencil("parallel or meeting lines only")
    if model == HYPERBOLIC_HALF_PLANE:
        if p.kind == ELLIPTIC:
            pts = [q for q in distinguished_points(p, tol)
                   if not q.is_infinite and q.value().imag > 0]
            return PencilInterpretation(model, p.kind, point=pts[0])
        if p.kind == PARABOLIC:
            (pt,) = distinguished_points(p, tol)
            return PencilInterpretation(model, p.kind, point=pt)
        return PencilInterpretation(model, p.kind,
                                    line=_real_orthogonal_line(p, tol))
    raise ValueError(f"unknown model {model!r}")


def _real_orthogonal_line(p: Pencil, tol: float) -> OrientedCycle:
    """The unique real elliptic member of the orthogonal pencil."""
    rows = np.vstack([
        p.a.v.as_array() @ MINKOWSKI,
        p.b.v.as_array() @ MINKOWSKI,
        [0.0, 0.0, 1.0, 0.0],          # force l_im = 0
    ])
    _, _, vt = np.linalg.svd(rows)
    vec = CycleVec(*vt[3])
    if classify(vec, tol).tag != ELLIPTIC:
        raise errors.NotModelPencil("orthogonal direction is not an ordinary cycle")
    return normalize(vec)


def common_perpendicular(a: OrientedCycle, b: OrientedCycle,
                         tol: float = DEFAULT_TOL) -> OrientedCycle:
    """The unique hyperbolic line orthogonal to two disjoint hyperbolic lines."""
    for m in (a, b):
        if not is_model_line(HYPERBOLIC_HALF_PLANE, m, math.sqrt(tol)):
            raise errors.NotHyperbolicLines("inputs must be real-matrix lines")
    if abs(a.inner(b)) <= 1.0 + tol:
        raise errors.NotDisjoint("lines intersect or are asymptotic")
    from .pencils import span
    return _real_orthogonal_line(span(a, b, tol), tol)


def hyperbolic_line_distance(a: OrientedCycle, b: OrientedCycle,
                             tol: float = DEFAULT_TOL) -> float:
    """Poincare metric distance between disjoint hyperbolic lines.

    Equals arcosh |<a,b>|, i.e. 2 pi times the annulus modulus.
    """
    xi = abs(a.inner(b))
    if xi <= 1.0 + tol:
        raise errors.NotDisjoint("lines intersect or are asymptotic")
    return math.acosh(xi)


# --------------------------------------------------------------------------
# Menelaus taxonomy for hyperbolic-line configurations

CASES = ("i", "ii", "iii", "iv", "v", "vi")


@dataclass(frozen=True)
class MenelausCase:
    case: str
    result: MenelausResult
    common_vec: CycleVec
    crossing: tuple[bool, bool, bool]       # cevian meets its side inside H
    perpendiculars: tuple                   # common perpendiculars where disjoint


def menelaus_case(fr: TriangleFrame, cevians, tol: float = DEFAULT_TOL) -> MenelausCase:
    """Classify a Menelaus configuration of hyperbolic lines into the six cases."""
    sides = fr.basis
    for m in sides:
        if not is_model_line(HYPERBOLIC_HALF_PLANE, m, math.sqrt(tol)):
            raise errors.NotHyperbolicLines("frame must consist of real lines")
    cevs = []
    for cv in cevians:
        c = cv if isinstance(cv, OrientedCycle) else normalize(CycleVec.of(cv))
        if not is_model_line(HYPERBOLIC_HALF_PLANE, c, math.sqrt(tol)):
            raise errors.NotHyperbolicLines("cevians must be real lines")
        cevs.append(c)
    lam = splitting_factor(fr.b, fr.c, cevs[0].v)
    mu = splitting_factor(fr.c, fr.a, cevs[1].v)
    nu = splitting_factor(fr.a, fr.b, cevs[2].v)
    res = menelaus(fr, lam, mu, nu, tol)
    if not res.concurrent:
        raise errors.NotInPencil("cevians do not satisfy the Menelaus condition")
    nvec, _ = cycle_at(fr, res.common)
    crossing = []
    perps = []
    for side, cev in zip(sides, cevs):
        xi = abs(side.inner(cev))
        meets = xi < 1.0 - tol
        crossing.append(meets)
        perps.append(None if meets else common_perpendicular(side, cev, tol))
    kind = res.cycle_class
    if kind == ELLIPTIC:
        case = CASES[3 - sum(crossing)]
    elif kind == PARABOLIC:
        case = "v"
    else:
        case = "vi"
    return MenelausCase(case, res, nvec, tuple(crossing), tuple(perps))
