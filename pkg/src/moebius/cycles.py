"""Cycles as Hermitian 2x2 matrices over a real 4-vector representation.

A cycle (circle or line, with orientation) is the zero set of
``Q(z) = k z conj(z) + l z + conj(l) conj(z) + n`` for a Hermitian matrix
``[[k, l], [conj(l), n]]``.  We store the real 4-vector ``(k, Re l, Im l, n)``
and do complex arithmetic only at the point / map boundary.  The left
half-plane of an oriented cycle is exactly ``{z : Q(z) < 0}`` and normalized
matrices satisfy ``<M, M> = -det M = 1``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import errors
from .projective import DEFAULT_TOL, Point

# Minkowski form of signature (3,1) on (k, l_re, l_im, n):
# <u, v> = u1 v1 + u2 v2 - (u0 v3 + u3 v0) / 2
MINKOWSKI = np.array([
    [0.0, 0.0, 0.0, -0.5],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [-0.5, 0.0, 0.0, 0.0],
])

ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class CycleVec:
    """Real 4-vector (k, l_re, l_im, n) of a generalized cycle, up to scale."""

    k: float
    l_re: float
    l_im: float
    n: float

    def __post_init__(self):
        for name in ("k", "l_re", "l_im", "n"):
            v = getattr(self, name)
            if type(v) is not float:
                object.__setattr__(self, name, float(v))

    @staticmethod
    def of(value) -> "CycleVec":
        if isinstance(value, CycleVec):
            return value
        if isinstance(value, OrientedCycle):
            return value.v
        k, l_re, l_im, n = (float(x) for x in value)
        return CycleVec(k, l_re, l_im, n)

    def as_array(self) -> np.ndarray:
        return np.array([self.k, self.l_re, self.l_im, self.n])

    @property
    def l(self) -> complex:
        return complex(self.l_re, self.l_im)

    def det(self) -> float:
        # grouping mirrors inner() so that <M,M> == -det(M) holds exactly
        return self.k * self.n - (self.l_re * self.l_re + self.l_im * self.l_im)

    def inner(self, other: "CycleVec") -> float:
        other = CycleVec.of(other)
        return (self.l_re * other.l_re + self.l_im * other.l_im
                - (self.k * other.n + other.k * self.n) / 2.0)

    def norm(self) -> float:
        return math.sqrt(self.k * self.k + self.l_re * self.l_re
                         + self.l_im * self.l_im + self.n * self.n)

    def scaled(self, s: float) -> "CycleVec":
        return CycleVec(self.k * s, self.l_re * s, self.l_im * s, self.n * s)

    def plus(self, other: "CycleVec", c: float = 1.0) -> "CycleVec":
        other = CycleVec.of(other)
        return CycleVec(self.k + c * other.k, self.l_re + c * other.l_re,
                        self.l_im + c * other.l_im, self.n + c * other.n)

    def eval_q(self, z: Point | complex) -> float:
        """The defining quadratic form at a point, homogeneous degree 2.

        For a finite point the value agrees with Q(z); the point at infinity
        probes the coefficient k.  Callers comparing signs must use the same
        homogeneous representative throughout.
        """
        z = Point.of(z).normalized()
        w1, w2 = z.z1, z.z2
        val = (self.k * (w1 * w1.conjugate())
               + self.l * w1 * w2.conjugate()
               + self.l.conjugate() * w1.conjugate() * w2
               + self.n * (w2 * w2.conjugate()))
        return val.real

    def hermitian(self) -> np.ndarray:
        return np.array([[self.k, self.l], [self.l.conjugate(), self.n]],
                        dtype=complex)

    @staticmethod
    def from_hermitian(h: np.ndarray) -> "CycleVec":
        return CycleVec(h[0, 0].real, h[0, 1].real, h[0, 1].imag, h[1, 1].real)


@dataclass(frozen=True)
class CycleClass:
    """Type of a generalized cycle plus the raw discriminant used to band it."""

    tag: str
    det: float
    scale: float
    point: Point | None = None        # parabolic: the carried point
    center: Point | None = None       # virtual: center
    radius_sq: float | None = None    # virtual: negative squared radius


@dataclass(frozen=True)
class OrientedCycle:
    """Normalized cycle vector: <v,v> = 1, left half-plane {Q < 0}."""

    v: CycleVec

    @property
    def k(self) -> float:
        return self.v.k

    @property
    def l(self) -> complex:
        return self.v.l

    @property
    def n(self) -> float:
        return self.v.n

    def inner(self, other) -> float:
        return self.v.inner(CycleVec.of(other))

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(self.v.scaled(-1.0))

    @property
    def is_line(self) -> bool:
        return abs(self.k) <= 1e-12

    @property
    def signed_radius(self) -> float:
        if self.is_line:
            raise errors.ZeroRadius("a line has no finite radius")
        return 1.0 / self.k

    @property
    def center(self) -> complex:
        if self.is_line:
            raise errors.ZeroRadius("a line has no center")
        return -self.l.conjugate() / self.k

    def line_direction(self) -> complex:
        """Unit travel direction of a line cycle (left half-plane on the left)."""
        if not self.is_line:
            raise ValueError("not a line")
        return 1j * self.l.conjugate()

    def eval_q(self, z) -> float:
        return self.v.eval_q(z)

    def same_set(self, other: "OrientedCycle", tol: float = DEFAULT_TOL) -> bool:
        """True when both describe the same point set, orientation ignored."""
        a, b = self.v.as_array(), other.v.as_array()
        return min(np.max(np.abs(a - b)), np.max(np.abs(a + b))) <= tol * 4

    def tangent(self, z: Point | complex) -> complex:
        """Oriented unit-scale tangent direction at a finite point of the cycle."""
        z = Point.of(z)
        t = 1j * (self.k * z.value() + self.l.conjugate())
        return t

    def __repr__(self):
        v = self.v
        return f"OrientedCycle({v.k:.6g}, {v.l_re:.6g}, {v.l_im:.6g}, {v.n:.6g})"


@dataclass(frozen=True)
class MoebiusMap:
    """A Moebius transformation, optionally anti-holomorphic (acting on conj z)."""

    a: complex
    b: complex
    c: complex
    d: complex
    anti: bool = False

    @staticmethod
    def build(a, b, c, d, anti: bool = False, tol: float = DEFAULT_TOL) -> "MoebiusMap":
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        scale = max(abs(a), abs(b), abs(c), abs(d))
        if scale == 0.0 or abs(det) <= (tol * scale) ** 2:
            raise errors.SingularMap("matrix is singular")
        s = 1.0 / cmath.sqrt(det)
        return MoebiusMap(a * s, b * s, c * s, d * s, anti)

    @staticmethod
    def identity() -> "MoebiusMap":
        return MoebiusMap(1.0, 0.0, 0.0, 1.0)

    @staticmethod
    def conjugation() -> "MoebiusMap":
        return MoebiusMap(1.0, 0.0, 0.0, 1.0, anti=True)

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def inverse(self) -> "MoebiusMap":
        if not self.anti:
            return MoebiusMap(self.d, -self.b, -self.c, self.a)
        return MoebiusMap(self.d.conjugate(), -self.b.conjugate(),
                          -self.c.conjugate(), self.a.conjugate(), anti=True)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self after other."""
        g = self.matrix()
        h = other.matrix()
        if self.anti:
            h = h.conjugate()
        m = g @ h
        return MoebiusMap(m[0, 0], m[0, 1], m[1, 0], m[1, 1],
                          anti=self.anti ^ other.anti)

    def apply_point(self, z: Point | complex) -> Point:
        z = Point.of(z).normalized()
        w1, w2 = (z.z1.conjugate(), z.z2.conjugate()) if self.anti else (z.z1, z.z2)
        return Point(self.a * w1 + self.b * w2, self.c * w1 + self.d * w2).normalized()

    def __call__(self, z):
        return self.apply_point(z)

    @staticmethod
    def to_zero_one_inf(p, q, r, tol: float = DEFAULT_TOL) -> "MoebiusMap":
        """The unique map sending the three distinct points to 0, 1, infinity."""
        p, q, r = Point.of(p).normalized(), Point.of(q).normalized(), Point.of(r).normalized()
        qr = q.z1 * r.z2 - q.z2 * r.z1
        qp = q.z1 * p.z2 - q.z2 * p.z1
        pr = p.z1 * r.z2 - p.z2 * r.z1
        if min(abs(qr), abs(qp), abs(pr)) <= tol:
            raise errors.CoincidentPoints("points are not pairwise distinct")
        return MoebiusMap.build(qr * p.z2, -qr * p.z1, qp * r.z2, -qp * r.z1)


# --------------------------------------------------------------------------
# constructors

def normalize(raw: CycleVec, orientation_hint: int | None = None,
              probe: Point | complex | None = None,
              tol: float = DEFAULT_TOL) -> OrientedCycle:
    """Scale a raw elliptic vector to <v,v> = 1 and settle the orientation.

    ``orientation_hint`` is the desired sign of k, or the sign of Q at the
    probe point when k vanishes; ``None`` keeps the sign of the input.
    """
    raw = CycleVec.of(raw)
    scale = raw.norm()
    if scale == 0.0:
        raise errors.ZeroMatrix("zero matrix")
    det = raw.det()
    if det >= -tol * scale * scale:
        raise errors.NonElliptic(f"det {det:.3g} is not negative")
    v = raw.scaled(1.0 / math.sqrt(-det))
    if orientation_hint is None:
        return OrientedCycle(v)
    hint = 1 if orientation_hint > 0 else -1
    if abs(v.k) > tol:
        sign = 1 if v.k > 0 else -1
    else:
        sign = 0
        for cand in ([probe] if probe is not None else []) + [0.0, 1.0, 1j]:
            q = v.eval_q(cand)
            if abs(q) > tol:
                sign = 1 if q > 0 else -1
                break
        if sign == 0:
            raise errors.ZeroMatrix("no usable probe point off the cycle")
    return OrientedCycle(v if sign == hint else v.scaled(-1.0))


def from_circle(center: Point | complex, signed_radius: float) -> OrientedCycle:
    """Circle with the given center; positive radius is counter-clockwise."""
    if signed_radius == 0.0:
        raise errors.ZeroRadius("radius must be nonzero")
    o = Point.of(center)
    if o.is_infinite:
        raise errors.ZeroRadius("center must be finite")
    oc = o.value()
    k = 1.0 / signed_radius
    l = -oc.conjugate() * k
    n = k * (abs(oc) ** 2 - signed_radius ** 2)
    return OrientedCycle(CycleVec(k, l.real, l.imag, n))


def from_line(point: Point | complex, direction: complex) -> OrientedCycle:
    """Line through a finite point; the left half-plane is left of travel."""
    p = Point.of(point)
    if p.is_infinite:
        raise errors.CoincidentPoints("base point must be finite")
    d = complex(direction)
    d = d / abs(d)
    l = 1j * d.conjugate()
    n = 2.0 * (d.conjugate() * p.value()).imag
    return OrientedCycle(CycleVec(0.0, l.real, l.imag, n))


REAL_AXIS = from_line(0.0, 1.0)


def from_points(p, q, r) -> OrientedCycle:
    """The unique cycle through three distinct points, traversed p -> q -> r."""
    g = MoebiusMap.to_zero_one_inf(p, q, r)
    gm = g.matrix()
    h = gm.T @ REAL_AXIS.v.hermitian() @ gm.conjugate()
    return normalize(CycleVec.from_hermitian(h))


# --------------------------------------------------------------------------
# classification and invariants

def classify(raw: CycleVec, tol: float = DEFAULT_TOL) -> CycleClass:
    """Elliptic / parabolic / hyperbolic by the sign of det, banded by tol."""
    raw = CycleVec.of(raw)
    scale = raw.norm()
    if scale == 0.0:
        raise errors.ZeroMatrix("zero matrix")
    det = raw.det()
    band = tol * scale * scale
    if det < -band:
        return CycleClass(ELLIPTIC, det, scale)
    if det > band:
        center = Point.infinity() if abs(raw.k) <= tol * scale \
            else Point.of(-raw.l.conjugate() / raw.k)
        rsq = None if center.is_infinite else -det / (raw.k * raw.k)
        return CycleClass(HYPERBOLIC, det, scale, center=center, radius_sq=rsq)
    if abs(raw.k) <= tol * scale:
        point = Point.infinity()
    else:
        point = Point.of(-raw.l.conjugate() / raw.k)
    return CycleClass(PARABOLIC, det, scale, point=point)


def point_cycle(z: Point | complex) -> CycleVec:
    """The parabolic (rank one) vector carrying a point."""
    z = Point.of(z).normalized()
    w1, w2 = z.z1, z.z2
    k = (w2 * w2.conjugate()).real
    l = -(w1.conjugate() * w2)
    n = (w1 * w1.conjugate()).real
    return CycleVec(k, l.real, l.imag, n)


def mobius_cos(a: OrientedCycle, b: OrientedCycle) -> float:
    """The invariant inner product of two normalized cycles."""
    return a.inner(b)


# --------------------------------------------------------------------------
# isometry action

def apply_map(g: MoebiusMap, a) -> CycleVec | OrientedCycle:
    """Push a cycle forward through an isometry.

    Holomorphic maps act by M -> g^{-T} M conj(g)^{-1}; anti maps transpose
    first.  Oriented cycles stay oriented (the action preserves Q signs).
    """
    vec = CycleVec.of(a)
    gi = np.array([[g.d, -g.b], [-g.c, g.a]], dtype=complex)
    h = vec.hermitian()
    if g.anti:
        h = h.T
    out = gi.T @ h @ gi.conjugate()
    res = CycleVec.from_hermitian(out)
    if isinstance(a, OrientedCycle):
        return OrientedCycle(res.scaled(1.0 / math.sqrt(-res.det())))
    return res


def inversion_map(a: OrientedCycle) -> MoebiusMap:
    """The inversion about a cycle as an anti-holomorphic map."""
    m = a.v.hermitian()
    j = np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)
    g = j @ m
    return MoebiusMap.build(g[0, 0], g[0, 1], g[1, 0], g[1, 1], anti=True)


def invert(a: OrientedCycle, z: Point | complex) -> Point:
    """Image of a point under the inversion about the cycle."""
    return inversion_map(a).apply_point(z)


# --------------------------------------------------------------------------
# incidence

def three_points_on(a: OrientedCycle) -> tuple[Point, Point, Point]:
    """Three points of the cycle ordered along its orientation."""
    if a.is_line:
        d = a.line_direction()
        z0 = -0.5 * a.n * a.l.conjugate() / abs(a.l) ** 2
        return Point.of(z0), Point.of(z0 + d), Point.infinity()
    o, r = a.center, abs(a.signed_radius)
    step = 2.0 * math.pi / 3.0 if a.k > 0 else -2.0 * math.pi / 3.0
    return tuple(Point.of(o + r * cmath.exp(1j * i * step)) for i in range(3))


def chart_to_real_axis(a: OrientedCycle) -> MoebiusMap:
    """A map by which the cycle becomes the real axis traversed 0 -> 1 -> inf."""
    p, q, r = three_points_on(a)
    return MoebiusMap.to_zero_one_inf(p, q, r)


def intersect(a: OrientedCycle, b: OrientedCycle,
              tol: float = DEFAULT_TOL) -> list[Point]:
    """Common points of two distinct cycles: two, one (tangency), or none."""
    if a.same_set(b, tol):
        raise errors.SameCycle("cycles agree as point sets")
    xi = a.inner(b)
    if abs(xi) > 1.0 + tol:
        return []
    g = chart_to_real_axis(a)
    bv = apply_map(g, b).v
    scale = bv.norm()
    k, lre, n = bv.k, bv.l_re, bv.n
    gi = g.inverse()
    if abs(xi) >= 1.0 - tol:
        if abs(k) <= tol * scale:
            pt = Point.infinity()
        else:
            pt = Point.of(-lre / k)
        return [gi.apply_point(pt)]
    # two roots of k x^2 + 2 lre x + n = 0 on the real axis; disc/4 = 1 - xi^2
    disc = max(1.0 - xi * xi, 0.0)
    roots: list[Point]
    if abs(k) <= tol * scale:
        roots = [Point.of(-n / (2.0 * lre)), Point.infinity()]
    else:
        sq = math.sqrt(disc)
        q1 = -(lre + math.copysign(sq, lre))
        x1 = q1 / k
        x2 = n / q1 if q1 != 0.0 else -lre / k
        roots = [Point.of(min(x1, x2)), Point.of(max(x1, x2))]
    return [gi.apply_point(p) for p in roots]


def point_on(a: OrientedCycle, z: Point | complex, tol: float = 1e-7) -> bool:
    return abs(a.eval_q(z)) <= tol


def tangent_at(a: OrientedCycle, z: Point | complex) -> complex:
    """Oriented tangent direction, conjugating through 1/z at infinity."""
    z = Point.of(z)
    if not z.is_infinite and abs(z.value()) < 1e6:
        return a.tangent(z)
    g = MoebiusMap.build(0.0, 1j, 1j, 0.0)   # z -> 1/z
    return apply_map(g, a).tangent(g.apply_point(z))


def oriented_angle(a: OrientedCycle, b: OrientedCycle, p: Point | complex,
                   tol: float = 1e-7) -> float:
    """Angle from the tangent of a to the tangent of b at a shared point."""
    p = Point.of(p)
    if not (point_on(a, p, tol) and point_on(b, p, tol)):
        raise errors.PointNotOnCycle("point must lie on both cycles")
    ta, tb = tangent_at(a, p), tangent_at(b, p)
    ang = cmath.phase(tb / ta)
    return math.pi if ang <= -math.pi + 1e-15 else ang


# --------------------------------------------------------------------------
# annuli, midcycles, regimes

def modulus(a: OrientedCycle, b: OrientedCycle, tol: float = DEFAULT_TOL) -> float:
    """Oriented modulus of the annulus bounded by two disjoint cycles.

    Positive when the annulus lies in the left half-plane of a.
    """
    xi = a.inner(b)
    if abs(xi) <= 1.0 + tol:
        raise errors.NotDisjoint("cycles are not disjoint")
    mu = math.acosh(abs(xi)) / (2.0 * math.pi)
    probe = three_points_on(b)[0]
    if probe.is_infinite:
        probe = three_points_on(b)[1]
    side = a.eval_q(probe)
    return mu if side < 0 else -mu


def pencil_member_raw(a: OrientedCycle, b: OrientedCycle, lam: float) -> CycleVec:
    return a.v.plus(b.v, -lam)


def midcycles(a: OrientedCycle, b: OrientedCycle,
              tol: float = DEFAULT_TOL) -> list[OrientedCycle]:
    """Cycles whose inversion swaps a and b: two when they intersect, else one."""
    if a.same_set(b, tol):
        raise errors.SameCycle("cycles agree as point sets")
    out = []
    for lam in (1.0, -1.0):
        cand = pencil_member_raw(a, b, lam)
        if classify(cand, tol).tag == ELLIPTIC:
            out.append(normalize(cand))
    return out


@dataclass(frozen=True)
class CosineRegime:
    kind: str                      # "intersecting" | "tangent" | "disjoint"
    inner: float
    angle: float | None = None
    points: tuple = ()
    xi: int | None = None          # tangent: +1 or -1
    mu: float | None = None        # disjoint: oriented modulus
    side: int | None = None        # disjoint: sign of the inner product


def cosine_regime(a: OrientedCycle, b: OrientedCycle,
                  tol: float = DEFAULT_TOL) -> CosineRegime:
    """Trichotomy by the invariant inner product.

    Tangent cycles carry xi = <a,b> in {-1, +1}; xi = -1 means the monogon
    appears on the same half-plane for both.  Disjoint cycles carry the
    oriented modulus and the side sign (<a,b> = side * cosh 2 pi mu, with
    side = -1 exactly when the annulus is on the same half-plane for both).
    """
    if a.same_set(b, tol):
        raise errors.SameCycle("cycles agree as point sets")
    xi = a.inner(b)
    if abs(xi) < 1.0 - tol:
        pts = intersect(a, b, tol)
        return CosineRegime("intersecting", xi, angle=math.acos(max(-1.0, min(1.0, xi))),
                            points=tuple(pts))
    if abs(xi) <= 1.0 + tol:
        pts = intersect(a, b, tol)
        return CosineRegime("tangent", xi, points=tuple(pts),
                            xi=1 if xi > 0 else -1)
    return CosineRegime("disjoint", xi, mu=modulus(a, b, tol),
                        side=1 if xi > 0 else -1)
