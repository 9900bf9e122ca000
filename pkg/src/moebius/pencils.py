"""Pencils of cycles: 2-dimensional spans, splitting factors, cevian ranges.

A pencil is the projective line of cycles spanned by two independent
Hermitian vectors.  The splitting factor (a,b;c) is the unique projective
scalar with c proportional to M - lambda N; it is the directed-ratio
analogue used by every incidence theorem downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .cycles import (CycleClass, CycleVec, ELLIPTIC, HYPERBOLIC, MINKOWSKI,
                     OrientedCycle, PARABOLIC, classify, intersect, normalize)
from .projective import DEFAULT_TOL, Point, ProjectiveReal

MEMBERSHIP_TOL = 1e-8


@dataclass(frozen=True)
class Pencil:
    a: OrientedCycle
    b: OrientedCycle
    gram: float
    gram_det: float
    kind: str  # elliptic | parabolic | hyperbolic

    def basis_rows(self) -> np.ndarray:
        return np.vstack([self.a.v.as_array(), self.b.v.as_array()])


def span(a: OrientedCycle, b: OrientedCycle, tol: float = DEFAULT_TOL) -> Pencil:
    if a.same_set(b, tol):
        raise errors.SameCycle("pencil basis must be two distinct cycles")
    g = a.inner(b)
    if abs(g) < 1.0 - tol:
        kind = ELLIPTIC
    elif abs(g) <= 1.0 + tol:
        kind = PARABOLIC
    else:
        kind = HYPERBOLIC
    return Pencil(a, b, g, 1.0 - g * g, kind)


def member(p: Pencil, lam) -> tuple[CycleVec, CycleClass]:
    """Homogeneous combination q M - p N for lambda = p/q."""
    lam = ProjectiveReal.of(lam)
    vec = p.a.v.scaled(lam.q).plus(p.b.v, -lam.p)
    return vec, classify(vec)


def splitting_factor(a: OrientedCycle, b: OrientedCycle, c,
                     tol: float = MEMBERSHIP_TOL) -> ProjectiveReal:
    """The invariant lambda with c ~ M - lambda N, as a homogeneous pair.

    c may be any generalized cycle vector; it enters projectively.  Raises
    when c is not in the span (relative least-squares residual above tol).
    """
    if a.same_set(b, DEFAULT_TOL):
        raise errors.SameCycle("splitting factor needs two distinct cycles")
    cv = CycleVec.of(c)
    basis = np.vstack([a.v.as_array(), b.v.as_array()]).T
    rhs = cv.as_array()
    scale = np.linalg.norm(rhs)
    if scale == 0.0:
        raise errors.ZeroMatrix("zero cycle vector")
    sol, *_ = np.linalg.lstsq(basis, rhs, rcond=None)
    resid = np.linalg.norm(basis @ sol - rhs)
    if resid > tol * scale:
        raise errors.NotInPencil(f"projection residual {resid / scale:.3g}")
    x, y = sol
    return ProjectiveReal(-y, x)


def cyclic_splitting_product(a: OrientedCycle, b: OrientedCycle,
                             c: OrientedCycle) -> float:
    """(a,b;c)(b,c;a)(c,a;b) for three collinear oriented elliptic cycles."""
    r1 = splitting_factor(a, b, c.v)
    r2 = splitting_factor(b, c, a.v)
    r3 = splitting_factor(c, a, b.v)
    num = r1.p * r2.p * r3.p
    den = r1.q * r2.q * r3.q
    return num / den


def orthogonal_pencil(p: Pencil, tol: float = DEFAULT_TOL) -> Pencil:
    """The pencil of cycles orthogonal to every member of p."""
    rows = p.basis_rows() @ MINKOWSKI
    _, _, vt = np.linalg.svd(rows)
    w1, w2 = vt[2], vt[3]
    found: list[OrientedCycle] = []
    for t in (0.0, 0.5 * math.pi, 0.25 * math.pi, 0.75 * math.pi,
              math.pi / 6, math.pi / 3, 2 * math.pi / 3):
        u = math.cos(t) * w1 + math.sin(t) * w2
        vec = CycleVec(*u)
        if classify(vec, tol).tag == ELLIPTIC:
            cand = normalize(vec)
            if not any(cand.same_set(f, 1e-7) for f in found):
                found.append(cand)
        if len(found) == 2:
            break
    if len(found) < 2:
        raise errors.NonElliptic("orthogonal subspace has no elliptic basis")
    return span(found[0], found[1], tol)


def distinguished_points(p: Pencil, tol: float = DEFAULT_TOL) -> tuple[Point, ...]:
    """Common points (elliptic), tangency point (parabolic), or the two
    asymptotic points carried by the parabolic members (hyperbolic)."""
    if p.kind == ELLIPTIC:
        return tuple(intersect(p.a, p.b, tol))
    if p.kind == PARABOLIC:
        xi = 1.0 if p.gram > 0 else -1.0
        vec, cls = member(p, xi)
        return (cls.point,) if cls.point is not None else ()
    g = p.gram
    m = math.sqrt(g * g - 1.0)
    pts = []
    for lam in (g - m, g + m):
        vec = p.a.v.plus(p.b.v, -lam)
        cls = classify(vec, tol)
        pts.append(cls.point if cls.point is not None
                   else Point.of(-vec.l.conjugate() / vec.k))
    return tuple(pts)


@dataclass(frozen=True)
class CevianRange:
    """Admissible splitting factors for the cevians of a digon, monogon,
    or annulus, with the landmark values of the bisectors."""

    kind: str
    bisector: float
    external_bisector: float | None = None   # elliptic only
    forbidden: tuple[float, float] | None = None   # hyperbolic: closed interval
    excluded: float | None = None            # parabolic: the single gap point


def cevian_range(a: OrientedCycle, b: OrientedCycle,
                 tol: float = DEFAULT_TOL) -> CevianRange:
    p = span(a, b, tol)
    g = p.gram
    if p.kind == ELLIPTIC:
        return CevianRange(ELLIPTIC, bisector=1.0, external_bisector=-1.0)
    if p.kind == PARABOLIC:
        xi = 1.0 if g > 0 else -1.0
        return CevianRange(PARABOLIC, bisector=-xi, excluded=xi)
    m = math.sqrt(g * g - 1.0)
    return CevianRange(HYPERBOLIC, bisector=-math.copysign(1.0, g),
                       forbidden=(g - m, g + m))


def bisector(a: OrientedCycle, b: OrientedCycle,
             tol: float = DEFAULT_TOL) -> tuple[OrientedCycle, OrientedCycle | None]:
    """The bisector (always) and the external bisector (intersecting case)."""
    rng = cevian_range(a, b, tol)
    bis = normalize(a.v.plus(b.v, -rng.bisector))
    ext = None
    if rng.external_bisector is not None:
        ext = normalize(a.v.plus(b.v, -rng.external_bisector))
    return bis, ext


def collinear3(a: OrientedCycle, b: OrientedCycle, c: OrientedCycle,
               tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Rank test of the stacked 3x4 coordinate matrix; returns (flag, residual)."""
    rows = np.vstack([a.v.as_array(), b.v.as_array(), c.v.as_array()])
    s = np.linalg.svd(rows, compute_uv=False)
    resid = float(s[2] / s[0])
    return bool(resid <= tol), resid
